#pragma once

#include "glinfo/numerics.hpp"

// One-dimensional Shannon/Fisher decomposition for the semi-infinite
// interface density:
//   s(x) = -P(x) + I1f(x) + I2f(x),   S = -1 + I1F + I2F.

namespace glinfo {

/// s(x) = -P(x) ln P(x).
double shannon_density(double x, double xi);
/// i_F(x) = P'(x)^2 / P(x).
double fisher_density(double x, double xi);
/// P''(x) ln P(x), the kernel of I2f.
double curvature_log_density(double x, double xi);

struct LiuTerms {
  double i1f = 0.0;  // P(0) - int_0^x i_F(t) (x - t) dt
  double i2f = 0.0;  // s(0) - int_0^x P''(t) ln P(t) (x - t) dt
};

/// Inner terms at one point by direct adaptive quadrature.
LiuTerms liu_terms(double x, double xi, const numerics::QuadratureOptions& opts = {});

/// |(-P + I1f + I2f) - s| at x.
double liu_pointwise_defect(double x, double xi,
                            const numerics::QuadratureOptions& opts = {});

struct LiuReport {
  double xi = 0.0;
  double cutoff = 0.0;        // X, nm
  double i1F = 0.0;           // int_0^X I1f
  double i2F = 0.0;           // int_0^X I2f
  double combined = 0.0;      // int_0^X (I1f + I2f) from the combined kernel
  double shannon = 0.0;       // closed-form S
  double residual = 0.0;      // |S - (-1 + combined)|
  double max_pointwise_defect = 0.0;  // over the integration grid
};

/// Evaluates the decomposition on [0, X], X the smallest multiple of xi with
/// (|s(X)| + P(X)) X <= tol. The inner (x - t)-weighted integrals are carried
/// as two running moments on the shared outer grid.
/// Throws ConvergenceError if no cutoff is found.
LiuReport liu_identity(double xi, double tol = 1e-10);

}  // namespace glinfo
