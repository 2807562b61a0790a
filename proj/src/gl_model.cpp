#include "glinfo/gl_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "glinfo/errors.hpp"

namespace glinfo {

namespace {

using std::numbers::sqrt2;

// ln cosh y for y >= 0 without overflow.
double log_cosh(double y) {
  return y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
}

double sech(double y) { return 1.0 / std::cosh(y); }

void check_length(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be a positive length");
  }
}

}  // namespace

double coherence_length(const CoherenceInput& inp) {
  check_length(inp.xi0, "xi0");
  if (!(inp.Tc > 0.0)) throw DomainError("Tc must be positive");
  if (!(inp.T >= 0.0)) throw DomainError("T must be non-negative");
  if (inp.T >= inp.Tc) {
    std::ostringstream msg;
    msg << "coherence length diverges: T = " << inp.T << " K >= Tc = " << inp.Tc
        << " K (no superconducting phase)";
    throw DivergenceError(msg.str());
  }
  return inp.xi0 / std::sqrt(1.0 - inp.T / inp.Tc);
}

double order_parameter(double x, double xi) {
  check_length(xi, "xi");
  if (!(x >= 0.0)) throw DomainError("order_parameter: x must be >= 0");
  return std::tanh(x / (sqrt2 * xi));
}

DistributionKind DistributionKind::truncated(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("truncated distribution: cutoff multiple n must be > 0");
  }
  DistributionKind k;
  k.family_ = Family::Truncated;
  k.n_ = n;
  return k;
}

std::string DistributionKind::name() const {
  if (!is_truncated()) return "semi-infinite";
  std::ostringstream s;
  s << "truncated(n=" << n_ << ")";
  return s.str();
}

DistributionSpec::DistributionSpec(DistributionKind kind, double xi)
    : kind_(kind), xi_(xi) {
  check_length(xi, "xi");
}

double DistributionSpec::support_end() const {
  if (kind_.is_truncated()) return kind_.cutoff_multiple() * xi_;
  return std::numeric_limits<double>::infinity();
}

double truncation_norm(double xi, double n) {
  check_length(xi, "xi");
  if (!(n > 0.0)) throw DomainError("truncation_norm: n must be > 0");
  const double a = n / sqrt2;
  return 1.0 / (sqrt2 * xi * (a - std::tanh(a)));
}

namespace {

void check_support(const DistributionSpec& spec, double x) {
  if (!(x >= 0.0) || x > spec.support_end()) {
    std::ostringstream msg;
    msg << "x = " << x << " outside the support of the " << spec.kind().name()
        << " density";
    throw DomainError(msg.str());
  }
}

}  // namespace

double pdf(const DistributionSpec& spec, double x) {
  check_support(spec, x);
  const double w = sqrt2 * spec.xi();
  const double y = x / w;
  if (spec.kind().is_truncated()) {
    const double t = std::tanh(y);
    return truncation_norm(spec.xi(), spec.kind().cutoff_multiple()) * t * t;
  }
  const double s = sech(y);
  return s * s / w;
}

double log_pdf(const DistributionSpec& spec, double x) {
  check_support(spec, x);
  const double w = sqrt2 * spec.xi();
  const double y = x / w;
  if (spec.kind().is_truncated()) {
    const double t = std::tanh(y);
    return std::log(truncation_norm(spec.xi(), spec.kind().cutoff_multiple())) +
           2.0 * std::log(t);
  }
  return -std::log(w) - 2.0 * log_cosh(y);
}

double log_pdf_derivative(const DistributionSpec& spec, double x) {
  check_support(spec, x);
  const double w = sqrt2 * spec.xi();
  const double y = x / w;
  if (spec.kind().is_truncated()) {
    // 2 sech^2 / tanh = 4 / sinh(2y)
    return 4.0 / (std::sinh(2.0 * y) * w);
  }
  return -2.0 * std::tanh(y) / w;
}

double pdf_derivative(const DistributionSpec& spec, double x) {
  check_support(spec, x);
  const double w = sqrt2 * spec.xi();
  const double y = x / w;
  const double t = std::tanh(y);
  const double s2 = sech(y) * sech(y);
  if (spec.kind().is_truncated()) {
    const double norm = truncation_norm(spec.xi(), spec.kind().cutoff_multiple());
    return norm * 2.0 * t * s2 / w;
  }
  return -2.0 * s2 * t / (w * w);
}

double pdf_second_derivative(const DistributionSpec& spec, double x) {
  check_support(spec, x);
  const double w = sqrt2 * spec.xi();
  const double y = x / w;
  const double s2 = sech(y) * sech(y);
  if (spec.kind().is_truncated()) {
    // d2/dy2 tanh^2 = 2 sech^2 (sech^2 - 2 tanh^2) = 2 sech^2 (3 sech^2 - 2)
    const double norm = truncation_norm(spec.xi(), spec.kind().cutoff_multiple());
    return norm * 2.0 * s2 * (3.0 * s2 - 2.0) / (w * w);
  }
  // d2/dy2 sech^2 = sech^2 (4 - 6 sech^2)
  return s2 * (4.0 - 6.0 * s2) / (w * w * w);
}

double surface_to_bulk_ratio(double xi) {
  check_length(xi, "xi");
  return 4.0 * sqrt2 / 3.0 * xi;
}

double fisher_from_energy_ratio(double r) {
  if (!(r > 0.0)) throw DomainError("fisher_from_energy_ratio: r must be > 0");
  constexpr double c = (4.0 / 3.0) * (4.0 / 3.0) * (4.0 / 3.0);
  return c / (r * r);
}

}  // namespace glinfo
