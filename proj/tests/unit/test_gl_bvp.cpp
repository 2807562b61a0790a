#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "glinfo/errors.hpp"
#include "glinfo/gl_bvp.hpp"

using namespace glinfo;
using doctest::Approx;

namespace {

double analytic_residual(double L, std::size_t n, double stretch) {
  const auto x = bvp_grid(L, n, stretch);
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = std::tanh(x[i] / std::numbers::sqrt2);
  const auto r = bvp_operator(x, u, 1.0);
  double worst = 0.0;
  for (double v : r) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace

TEST_CASE("profile at 2001 points matches tanh") {
  const auto sol = solve_profile(1.0, 12.0, 2001, 1e-12);
  CHECK(sol.u.front() == 0.0);
  CHECK(sol.u.back() == 1.0);
  CHECK(sol.grid.size() == 2001);
  CHECK(sol.grid.front() == 0.0);
  CHECK(sol.grid.back() == 12.0);
  CHECK(sol.max_deviation <= 1e-6);
  CHECK(sol.residual <= 1e-12);
  CHECK(sol.iterations > 0);
  CHECK(verify_profile(sol, 1.0) == sol.max_deviation);
  CHECK(std::is_sorted(sol.u.begin(), sol.u.end()));
}

TEST_CASE("analytic initial guess converges to the same profile") {
  const auto ramp = solve_profile(1.0, 12.0, 1001, 1e-12);
  const auto exact = solve_profile(1.0, 12.0, 1001, 1e-12, {.initial_guess = InitialGuess::Analytic});
  for (std::size_t i = 0; i < ramp.u.size(); ++i) {
    REQUIRE(ramp.u[i] == Approx(exact.u[i]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("profile is scale invariant") {
  const auto one = solve_profile(1.0, 12.0, 2001, 1e-12);
  const auto nb = solve_profile(38.0, 12.0 * 38.0, 2001, 1e-12);
  for (std::size_t i = 0; i < one.u.size(); ++i) {
    REQUIRE(nb.grid[i] / 38.0 == Approx(one.grid[i]).epsilon(1e-14).scale(1.0));
    REQUIRE(std::abs(nb.u[i] - one.u[i]) <= 1e-8);
  }
}

TEST_CASE("discrete operator on the analytic solution is O(h^2)") {
  const double uniform = analytic_residual(12.0, 501, 0.0) / analytic_residual(12.0, 1001, 0.0);
  CHECK(uniform == Approx(4.0).epsilon(0.05));
  const double stretched = analytic_residual(12.0, 1001, 1.5) / analytic_residual(12.0, 2001, 1.5);
  CHECK(stretched == Approx(4.0).epsilon(0.05));
}

TEST_CASE("deviation shrinks under refinement") {
  double prev = INFINITY;
  for (std::size_t n : {201u, 801u, 3201u}) {
    const double dev = solve_profile(1.0, 12.0, n, 1e-12).max_deviation;
    CAPTURE(n);
    CHECK(dev < prev);
    prev = dev;
  }
  const double ratio = solve_profile(1.0, 12.0, 1001, 1e-12).max_deviation /
                       solve_profile(1.0, 12.0, 2001, 1e-12).max_deviation;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("verify_profile detects deviations") {
  BvpSolution exact;
  exact.grid = bvp_grid(12.0, 500, 0.0);
  for (double x : exact.grid) exact.u.push_back(std::tanh(x / std::numbers::sqrt2));
  CHECK(verify_profile(exact, 1.0) == 0.0);

  auto bumped = solve_profile(1.0, 12.0, 2001, 1e-12);
  for (std::size_t i = 0; i < bumped.grid.size(); ++i) {
    bumped.u[i] += 1e-3 * std::exp(-std::pow(bumped.grid[i] - 3.0, 2));
  }
  CHECK(verify_profile(bumped, 1.0) >= 9e-4);
}

TEST_CASE("grid construction") {
  const auto g = bvp_grid(5.0, 101, 1.5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 5.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    REQUIRE(g[i] > g[i - 1]);
    // Spacing grows away from the interface.
    if (i > 1) REQUIRE(g[i] - g[i - 1] >= g[i - 1] - g[i - 2]);
  }
}

TEST_CASE("solver rejects bad inputs") {
  CHECK_THROWS_AS(solve_profile(1.0, 7.9, 2001, 1e-12), DomainError);
  CHECK_THROWS_AS(solve_profile(1.0, 12.0, 99, 1e-12), DomainError);
  CHECK_THROWS_AS(solve_profile(0.0, 12.0, 2001, 1e-12), DomainError);
  CHECK_THROWS_AS(solve_profile(1.0, 12.0, 2001, 0.0), DomainError);
  CHECK_THROWS_AS(solve_profile(1.0, 12.0, 2001, 1e-12, {.max_iterations = 1}), ConvergenceError);
}
