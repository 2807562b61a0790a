#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>

namespace glinfo::numerics {

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t evaluations = 0;
  // Set by integrate_semi_infinite when the mapped integrand does not shrink
  // towards the far end of the transformed interval.
  bool tail_warning = false;
};

/// Euler gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// Gauss hypergeometric 2F1(a, b; c; -1).
///
/// The series at z = -1 only converges for c - a - b > -1, so the value is
/// obtained through the Pfaff map z -> z/(z-1):
///   2F1(a, b; c; -1) = 2^{-a} 2F1(a, c - b; c; 1/2)
/// whose series converges geometrically for every parameter set. The pair
/// (a, b) is ordered before the map, which makes the result exactly
/// symmetric in a and b.
double hyp2f1_neg1(double a, double b, double c);

/// Dilogarithm Li2(x) = sum_k x^k / k^2 for -1 <= x <= 1.
double dilog(double x);

/// 15-point Kronrod nodes and weights on [-1, 1], ascending nodes.
struct FixedRule {
  std::array<double, 15> nodes;
  std::array<double, 15> weights;
};
const FixedRule& kronrod15_rule();

/// Single 15-point Kronrod panel on [a, b]; no adaptivity.
double kronrod15(const Integrand& f, double a, double b);

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// Throws ConvergenceError when the evaluation budget is exhausted.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

/// Integral over [a, inf) through x = a - scale * ln(1 - u), u in [0, 1).
/// `scale` should be comparable to the decay length of f; for
/// f ~ exp(-x / scale) the mapped integrand stays bounded.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& opts = {},
                                         double scale = 1.0);

}  // namespace glinfo::numerics
