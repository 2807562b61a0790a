#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Finite-difference solution of the dimensionless Ginzburg-Landau interface
// problem  xi^2 u'' = u^3 - u,  u(0) = 0,  u(L) = 1.

namespace glinfo {

enum class InitialGuess {
  Ramp,      // u0 = min(1, x / (sqrt2 xi))
  Analytic,  // u0 = tanh(x / (sqrt2 xi))
};

struct BvpOptions {
  InitialGuess initial_guess = InitialGuess::Ramp;
  // Grid x_i = L sinh(stretch * i/(N-1)) / sinh(stretch); 0 gives a uniform grid.
  double stretch = 1.5;
  int max_iterations = 100;
};

struct BvpSolution {
  std::vector<double> grid;  // nm, ascending, grid.front() = 0, grid.back() = L
  std::vector<double> u;
  double max_deviation = 0.0;  // max |u - tanh(x / (sqrt2 xi))|
  double residual = 0.0;       // max scaled discrete residual at exit
  int iterations = 0;
};

/// Builds the (possibly stretched) grid used by solve_profile.
std::vector<double> bvp_grid(double L, std::size_t n_points, double stretch);

/// Discrete operator xi^2 D2 u - (u^3 - u) at the interior nodes (unscaled).
std::vector<double> bvp_operator(std::span<const double> grid,
                                 std::span<const double> u, double xi);

/// Damped Newton on second-order central differences.
/// Throws DomainError for L < 8 xi or n_points < 100, ConvergenceError when the
/// scaled residual does not drop below tol within max_iterations.
BvpSolution solve_profile(double xi, double L, std::size_t n_points, double tol,
                          const BvpOptions& opts = {});

/// max over the grid of |u(x) - tanh(x / (sqrt2 xi))|.
double verify_profile(const BvpSolution& sol, double xi);

}  // namespace glinfo
