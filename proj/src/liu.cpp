#include "glinfo/liu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "glinfo/errors.hpp"
#include "glinfo/gl_model.hpp"
#include "glinfo/measures.hpp"

namespace glinfo {

namespace {

using std::numbers::sqrt2;

// Outer panel width in units of sqrt2 xi.
constexpr double kPanelWidth = 0.25;
constexpr int kMaxCutoffMultiple = 100000;

struct Moments {
  double m0 = 0.0;  // int_0^x g
  double m1 = 0.0;  // int_0^x t g(t)
};

}  // namespace

double shannon_density(double x, double xi) {
  const auto spec = DistributionSpec::semi_infinite(xi);
  const double p = pdf(spec, x);
  if (p == 0.0) return 0.0;
  return -p * log_pdf(spec, x);
}

double fisher_density(double x, double xi) {
  const auto spec = DistributionSpec::semi_infinite(xi);
  const double p = pdf(spec, x);
  // P'/P = -2 tanh(y) / (sqrt2 xi)
  const double dlog = -2.0 * std::tanh(x / (sqrt2 * xi)) / (sqrt2 * xi);
  return p * dlog * dlog;
}

double curvature_log_density(double x, double xi) {
  const auto spec = DistributionSpec::semi_infinite(xi);
  const double d2 = pdf_second_derivative(spec, x);
  if (d2 == 0.0) return 0.0;
  return d2 * log_pdf(spec, x);
}

LiuTerms liu_terms(double x, double xi, const numerics::QuadratureOptions& opts) {
  const auto spec = DistributionSpec::semi_infinite(xi);
  LiuTerms t{pdf(spec, 0.0), shannon_density(0.0, xi)};
  if (x == 0.0) return t;
  auto weighted = [&](double (*g)(double, double)) {
    return numerics::integrate_finite(
               [&](double u) { return g(u, xi) * (x - u); }, 0.0, x, opts)
        .value;
  };
  t.i1f -= weighted(fisher_density);
  t.i2f -= weighted(curvature_log_density);
  return t;
}

double liu_pointwise_defect(double x, double xi,
                            const numerics::QuadratureOptions& opts) {
  const auto t = liu_terms(x, xi, opts);
  const double p = pdf(DistributionSpec::semi_infinite(xi), x);
  return std::abs(-p + t.i1f + t.i2f - shannon_density(x, xi));
}

LiuReport liu_identity(double xi, double tol) {
  if (!(tol > 0.0)) throw DomainError("liu_identity: tol must be > 0");
  const auto spec = DistributionSpec::semi_infinite(xi);
  const double w = sqrt2 * xi;

  int k = 1;
  for (; k <= kMaxCutoffMultiple; ++k) {
    const double x = k * xi;
    if ((std::abs(shannon_density(x, xi)) + pdf(spec, x)) * x <= tol) break;
  }
  if (k > kMaxCutoffMultiple) {
    throw ConvergenceError("liu_identity: no cutoff satisfies the tail tolerance");
  }
  const double cutoff = k * xi;

  const auto& rule = numerics::kronrod15_rule();
  const int panels = static_cast<int>(std::ceil(cutoff / (kPanelWidth * w)));
  const double width = cutoff / panels;

  const double p0 = pdf(spec, 0.0);
  const double s0 = shannon_density(0.0, xi);
  auto combined_kernel = [xi](double t) {
    return fisher_density(t, xi) + curvature_log_density(t, xi);
  };

  Moments fisher_m;
  Moments curv_m;
  Moments comb_m;
  auto advance = [](Moments& m, auto&& g, double a, double b) {
    m.m0 += numerics::kronrod15([&](double t) { return g(t); }, a, b);
    m.m1 += numerics::kronrod15([&](double t) { return t * g(t); }, a, b);
  };
  auto fisher_g = [xi](double t) { return fisher_density(t, xi); };
  auto curv_g = [xi](double t) { return curvature_log_density(t, xi); };

  LiuReport r;
  r.xi = xi;
  r.cutoff = cutoff;
  r.shannon = shannon_entropy(xi);
  double prev = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = p * width;
    const double half = 0.5 * width;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double x = a + half * (1.0 + rule.nodes[j]);
      const double weight = half * rule.weights[j];
      advance(fisher_m, fisher_g, prev, x);
      advance(curv_m, curv_g, prev, x);
      advance(comb_m, combined_kernel, prev, x);
      prev = x;

      const double i1f = p0 - (x * fisher_m.m0 - fisher_m.m1);
      const double i2f = s0 - (x * curv_m.m0 - curv_m.m1);
      const double sum = p0 + s0 - (x * comb_m.m0 - comb_m.m1);
      r.i1F += weight * i1f;
      r.i2F += weight * i2f;
      r.combined += weight * sum;

      const double defect =
          std::abs(-pdf(spec, x) + i1f + i2f - shannon_density(x, xi));
      r.max_pointwise_defect = std::max(r.max_pointwise_defect, defect);
    }
  }
  r.residual = std::abs(r.shannon - (-1.0 + r.combined));
  return r;
}

}  // namespace glinfo
