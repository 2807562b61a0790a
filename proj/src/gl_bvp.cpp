#include "glinfo/gl_bvp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "glinfo/errors.hpp"

namespace glinfo {

namespace {

using std::numbers::sqrt2;

// Three-point second-derivative stencil on a non-uniform grid.
struct Stencil {
  double lower, diag, upper;  // coefficients of u_{i-1}, u_i, u_{i+1}
  double scale;               // h_l h_r / 2: turns D2 into an O(1) equation
};

std::vector<Stencil> stencils(std::span<const double> x) {
  std::vector<Stencil> s(x.size() - 2);
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double hl = x[i] - x[i - 1];
    const double hr = x[i + 1] - x[i];
    const double lo = 2.0 / (hl * (hl + hr));
    const double up = 2.0 / (hr * (hl + hr));
    s[i - 1] = {lo, -(lo + up), up, 0.5 * hl * hr};
  }
  return s;
}

// Scaled residual r_i = (h_l h_r / 2 xi^2) (xi^2 D2 u - u^3 + u).
double residual(const std::vector<Stencil>& st, const std::vector<double>& u,
                double xi2, std::vector<double>& r) {
  double worst = 0.0;
  for (std::size_t k = 0; k < st.size(); ++k) {
    const double ui = u[k + 1];
    const double f = xi2 * (st[k].lower * u[k] + st[k].diag * ui + st[k].upper * u[k + 2]) -
                     (ui * ui * ui - ui);
    r[k] = st[k].scale / xi2 * f;
    worst = std::max(worst, std::abs(r[k]));
  }
  return worst;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

// Thomas algorithm; overwrites rhs with the solution.
void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                       std::vector<double> upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
  }
}

}  // namespace

std::vector<double> bvp_grid(double L, std::size_t n_points, double stretch) {
  std::vector<double> x(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double e = static_cast<double>(i) / last;
    x[i] = stretch > 0.0 ? L * std::sinh(stretch * e) / std::sinh(stretch) : L * e;
  }
  x.front() = 0.0;
  x.back() = L;
  return x;
}

std::vector<double> bvp_operator(std::span<const double> grid,
                                 std::span<const double> u, double xi) {
  const auto st = stencils(grid);
  std::vector<double> out(st.size());
  for (std::size_t k = 0; k < st.size(); ++k) {
    const double ui = u[k + 1];
    out[k] = xi * xi * (st[k].lower * u[k] + st[k].diag * ui + st[k].upper * u[k + 2]) -
             (ui * ui * ui - ui);
  }
  return out;
}

BvpSolution solve_profile(double xi, double L, std::size_t n_points, double tol,
                          const BvpOptions& opts) {
  if (!(xi > 0.0)) throw DomainError("solve_profile: xi must be > 0");
  if (!(L >= 8.0 * xi)) {
    std::ostringstream msg;
    msg << "solve_profile: L = " << L << " < 8 xi = " << 8.0 * xi
        << "; u(L) = 1 is not a valid far-field condition";
    throw DomainError(msg.str());
  }
  if (n_points < 100) throw DomainError("solve_profile: n_points must be >= 100");
  if (!(tol > 0.0)) throw DomainError("solve_profile: tol must be > 0");

  BvpSolution sol;
  sol.grid = bvp_grid(L, n_points, opts.stretch);
  const auto& x = sol.grid;
  sol.u.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double y = x[i] / (sqrt2 * xi);
    sol.u[i] = opts.initial_guess == InitialGuess::Analytic ? std::tanh(y)
                                                            : std::min(1.0, y);
  }
  sol.u.front() = 0.0;
  sol.u.back() = 1.0;

  const auto st = stencils(x);
  const double xi2 = xi * xi;
  const std::size_t m = st.size();
  std::vector<double> r(m);
  std::vector<double> trial_r(m);
  std::vector<double> trial(n_points);
  std::vector<double> lower(m), diag(m), upper(m), step(m);

  double worst = residual(st, sol.u, xi2, r);
  int it = 0;
  while (worst > tol) {
    if (it == opts.max_iterations) {
      std::ostringstream msg;
      msg << "solve_profile: residual " << worst << " > tol " << tol << " after "
          << it << " Newton iterations";
      throw ConvergenceError(msg.str());
    }
    ++it;
    // Jacobian of the scaled residual.
    for (std::size_t k = 0; k < m; ++k) {
      const double ui = sol.u[k + 1];
      const double c = st[k].scale / xi2;
      lower[k] = c * xi2 * st[k].lower;
      diag[k] = c * (xi2 * st[k].diag - (3.0 * ui * ui - 1.0));
      upper[k] = c * xi2 * st[k].upper;
      step[k] = -r[k];
    }
    solve_tridiagonal(lower, diag, upper, step);

    // Backtrack until the residual norm decreases sufficiently.
    const double r0 = norm2(r);
    double lambda = 1.0;
    for (;;) {
      trial = sol.u;
      for (std::size_t k = 0; k < m; ++k) trial[k + 1] += lambda * step[k];
      const double w = residual(st, trial, xi2, trial_r);
      if (norm2(trial_r) <= (1.0 - 1e-4 * lambda) * r0 || lambda < 1e-10) {
        worst = w;
        break;
      }
      lambda *= 0.5;
    }
    sol.u.swap(trial);
    r.swap(trial_r);
  }
  sol.iterations = it;
  sol.residual = worst;
  sol.max_deviation = verify_profile(sol, xi);
  return sol;
}

double verify_profile(const BvpSolution& sol, double xi) {
  double worst = 0.0;
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    const double exact = std::tanh(sol.grid[i] / (sqrt2 * xi));
    worst = std::max(worst, std::abs(sol.u[i] - exact));
  }
  return worst;
}

}  // namespace glinfo
