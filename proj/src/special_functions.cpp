#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "glinfo/errors.hpp"
#include "glinfo/numerics.hpp"

namespace glinfo::numerics {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

// Power series of Li2 for |x| <= 1/2.
double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k < 200; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= x;
  }
  return sum;
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  }
  return std::tgamma(x);
}

double hyp2f1_neg1(double a, double b, double c) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("hyp2f1: c = " + std::to_string(c) +
                    " is a nonpositive integer");
  }
  if (a == 0.0 || b == 0.0) return 1.0;
  if (b < a) std::swap(a, b);

  // 2F1(a, c-b; c; 1/2), summed until the term ratio settles below 1/2 and
  // the terms stop contributing.
  const double b2 = c - b;
  constexpr int max_terms = 20000;
  double term = 1.0;
  double sum = 1.0;
  int quiet = 0;
  // Terms may dip before the ratio settles when a + k or b2 + k passes near 0.
  const double settle = std::abs(a) + std::abs(b2) + std::abs(c);
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b2 + k) / ((c + k) * (k + 1.0)) * 0.5;
    sum += term;
    if (term == 0.0) return std::exp2(-a) * sum;
    if (k > settle && std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++quiet == 3) return std::exp2(-a) * sum;
    } else {
      quiet = 0;
    }
    if (!std::isfinite(sum)) break;
  }
  throw ConvergenceError("hyp2f1: series at z = 1/2 did not converge for a = " +
                         std::to_string(a) + ", b = " + std::to_string(b) +
                         ", c = " + std::to_string(c));
}

double dilog(double x) {
  using std::numbers::pi;
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("dilog: |x| > 1 (x = " + std::to_string(x) + ")");
  }
  if (x == 1.0) return pi * pi / 6.0;
  if (x == -1.0) return -pi * pi / 12.0;
  if (std::abs(x) <= 0.5) return dilog_series(x);
  if (x > 0.5) {
    // Euler reflection.
    return pi * pi / 6.0 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
  }
  // Landen: maps [-1, -1/2) onto (1/3, 1/2].
  const double l = std::log1p(-x);
  return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
}

}  // namespace glinfo::numerics
