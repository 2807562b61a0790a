#pragma once

// Independent quadrature oracles for the information measures. Each one
// integrates the defining integral written out by hand in the dimensionless
// variable y = x / (sqrt2 xi), so none of the library's density code is used;
// only the generic quadrature routines are shared.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glinfo/numerics.hpp"

namespace glinfo::oracle {

inline constexpr double kTol = 1e-13;

inline double sech(double y) { return 1.0 / std::cosh(y); }

inline double log_cosh(double y) {
  y = std::abs(y);
  return y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
}

inline double width(double xi) { return std::numbers::sqrt2 * xi; }

inline double semi(const numerics::Integrand& f, double rate) {
  return numerics::integrate_semi_infinite(f, 0.0, {.rel_tol = kTol}, 1.0 / rate).value;
}

inline double finite(const numerics::Integrand& f, double b) {
  return numerics::integrate_finite(f, 0.0, b, {.rel_tol = kTol}).value;
}

// --- semi-infinite density P = sech^2(y) / w ---------------------------------

inline double shannon(double xi) {
  const double lw = std::log(width(xi));
  return semi([lw](double y) { return sech(y) * sech(y) * (lw + 2.0 * log_cosh(y)); }, 2.0);
}

inline double fisher(double xi) {
  const double w = width(xi);
  const double J =
      semi([](double y) { return std::pow(sech(y) * std::tanh(y), 2); }, 2.0);
  return 4.0 * J / (w * w);
}

inline double disequilibrium(double xi) {
  return semi([](double y) { return std::pow(sech(y), 4); }, 4.0) / width(xi);
}

// T_q = int P (P^{q-1} - 1) / (1 - q) dx
inline double tsallis(double xi, double q) {
  const double lw = std::log(width(xi));
  return semi(
      [=](double y) {
        const double lnP = -lw - 2.0 * log_cosh(y);
        return sech(y) * sech(y) * std::expm1((q - 1.0) * lnP) / (1.0 - q);
      },
      2.0 * std::min(q, 1.0));  // the slower of the P and P^q terms
}

// I_q = int P^{1-2q} P'^2 dx = 4 w^{2q-4} int sech^{6-4q} tanh^2 dy, finite for q < 1.5
inline double fisher_q(double xi, double q) {
  const double J = semi(
      [q](double y) {
        const double t = std::tanh(y);
        return std::exp(-(6.0 - 4.0 * q) * log_cosh(y)) * t * t;
      },
      6.0 - 4.0 * q);
  return 4.0 * std::pow(width(xi), 2.0 * q - 4.0) * J;
}

// --- truncated density P = N tanh^2(y) on [0, n xi] ----------------------------

inline double truncated_norm(double xi, double n) {
  const double a = n / std::numbers::sqrt2;
  const double mass = finite([](double y) { return std::pow(std::tanh(y), 2); }, a);
  return 1.0 / (width(xi) * mass);
}

inline double shannon_truncated(double xi, double n) {
  const double N = truncated_norm(xi, n);
  const double lN = std::log(N);
  const double a = n / std::numbers::sqrt2;
  const double J = finite(
      [lN](double y) {
        const double t = std::tanh(y);
        return t == 0.0 ? 0.0 : t * t * (lN + 2.0 * std::log(t));
      },
      a);
  return -N * width(xi) * J;
}

inline double fisher_truncated(double xi, double n) {
  const double N = truncated_norm(xi, n);
  const double a = n / std::numbers::sqrt2;
  return 4.0 * N / width(xi) * finite([](double y) { return std::pow(sech(y), 4); }, a);
}

inline double disequilibrium_truncated(double xi, double n) {
  const double N = truncated_norm(xi, n);
  const double a = n / std::numbers::sqrt2;
  return N * N * width(xi) * finite([](double y) { return std::pow(std::tanh(y), 4); }, a);
}

}  // namespace glinfo::oracle
