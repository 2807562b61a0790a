#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "glinfo/errors.hpp"
#include "glinfo/numerics.hpp"

namespace glinfo::numerics {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kPanelEvaluations = 15;

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double roundoff = 0.0;  // error floor from rounding in the panel sum
};

struct LargerError {
  bool operator()(const Panel& l, const Panel& r) const {
    return l.error < r.error;
  }
};

// QUADPACK-style error estimate for a single G7/K15 panel.
Panel gk15_panel(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};

  const double fc = f(center);
  double gauss = fc * kWg[3];
  double kronrod = fc * kWgk[7];
  double abs_k = std::abs(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    kronrod += kWgk[j] * sum;
    abs_k += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double value = kronrod * half;
  abs_k *= std::abs(half);
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  const double roundoff = 50.0 * kEps * abs_k;
  if (abs_k > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(roundoff, err);
  }
  if (!std::isfinite(value)) {
    throw ConvergenceError("quadrature: non-finite integrand value on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return {a, b, value, err, roundoff};
}

}  // namespace

const FixedRule& kronrod15_rule() {
  static const FixedRule rule = [] {
    FixedRule r{};
    for (std::size_t j = 0; j < 7; ++j) {
      r.nodes[j] = -kXgk[j];
      r.weights[j] = kWgk[j];
      r.nodes[14 - j] = kXgk[j];
      r.weights[14 - j] = kWgk[j];
    }
    r.nodes[7] = 0.0;
    r.weights[7] = kWgk[7];
    return r;
  }();
  return rule;
}

double kronrod15(const Integrand& f, double a, double b) {
  return gk15_panel(f, a, b).value;
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a < b)) {
    throw DomainError("integrate_finite: requires a < b");
  }
  if (!(opts.rel_tol > 0.0) && !(opts.abs_tol > 0.0)) {
    throw DomainError("integrate_finite: tolerance must be positive");
  }

  std::priority_queue<Panel, std::vector<Panel>, LargerError> panels;
  const Panel first = gk15_panel(f, a, b);
  panels.push(first);
  double total = first.value;
  double total_err = first.error;
  double total_roundoff = first.roundoff;
  std::size_t evaluations = kPanelEvaluations;

  auto target = [&] {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };

  // Stop when the requested accuracy is reached or only rounding is left.
  while (total_err > target() && total_err > 2.0 * total_roundoff) {
    if (evaluations + 2 * kPanelEvaluations > opts.max_evaluations) {
      throw ConvergenceError(
          "integrate_finite: no convergence within " +
          std::to_string(opts.max_evaluations) + " evaluations (estimate " +
          std::to_string(total) + ", error " + std::to_string(total_err) + ")");
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      // Interval can no longer be split in double precision.
      throw ConvergenceError("integrate_finite: subdivision limit reached near x = " +
                             std::to_string(mid));
    }
    panels.pop();
    const Panel left = gk15_panel(f, worst.a, mid);
    const Panel right = gk15_panel(f, mid, worst.b);
    evaluations += 2 * kPanelEvaluations;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_roundoff += left.roundoff + right.roundoff - worst.roundoff;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to drop the rounding drift of the incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {value, err, evaluations, false};
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& opts,
                                         double scale) {
  if (!(scale > 0.0)) {
    throw DomainError("integrate_semi_infinite: scale must be positive");
  }
  auto mapped = [&](double u) {
    const double w = 1.0 - u;
    if (w <= 0.0) return 0.0;
    const double x = a - scale * std::log(w);
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx * scale / w;
  };
  QuadratureResult r = integrate_finite(mapped, 0.0, 1.0, opts);
  const double near_end = std::abs(mapped(1.0 - 1e-4));
  const double at_end = std::abs(mapped(1.0 - 1e-8));
  r.tail_warning = at_end > near_end && at_end > 0.0;
  return r;
}

}  // namespace glinfo::numerics
