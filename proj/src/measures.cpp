#include "glinfo/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "glinfo/errors.hpp"

namespace glinfo {

namespace {

using std::numbers::ln2;
using std::numbers::pi;
using std::numbers::sqrt2;

// Closed forms are abandoned for quadrature once they cancel more than this.
constexpr double kMaxCancellation = 1e6;

void check_xi(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("xi must be a positive length");
  }
}

void check_q(double q) {
  if (!(q > kMinQ && q <= kMaxQ)) {
    std::ostringstream msg;
    msg << "q = " << q << " outside the validity window (" << kMinQ << ", "
        << kMaxQ << "]";
    throw DomainError(msg.str());
  }
}

double integrate(const DistributionSpec& spec, const numerics::Integrand& f,
                 double decay_rate, double rel_tol) {
  numerics::QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  if (spec.kind().is_truncated()) {
    return numerics::integrate_finite(f, 0.0, spec.support_end(), opts).value;
  }
  // The integrand decays like exp(-decay_rate * x / (sqrt2 xi)); the scale
  // makes the mapped integrand vanish linearly at u = 1.
  const double scale = 2.0 * sqrt2 * spec.xi() / decay_rate;
  return numerics::integrate_semi_infinite(f, 0.0, opts, scale).value;
}

}  // namespace

MeasureSet make_measure_set(double shannon, double fisher, double disequilibrium) {
  return {shannon, fisher, disequilibrium, shannon * disequilibrium,
          shannon * fisher};
}

double shannon_entropy(double xi) {
  check_xi(xi);
  return 2.0 + std::log(xi) - 1.5 * ln2;
}

double fisher_information(double xi) {
  check_xi(xi);
  return 2.0 / (3.0 * xi * xi);
}

double disequilibrium(double xi) {
  check_xi(xi);
  return sqrt2 / (3.0 * xi);
}

double shannon_entropy_truncated(double xi, double n) {
  const double norm = truncation_norm(xi, n);
  const double a = n / sqrt2;
  const double t = std::tanh(a);
  const double log_t2 = 2.0 * std::log(t);
  const double e = std::exp(-sqrt2 * n);
  // arccoth(e^{sqrt2 n}) = artanh(e^{-sqrt2 n})
  const double bracket = 4.0 * n * std::atanh(e) + n * log_t2 -
                         sqrt2 * numerics::dilog(-e) + sqrt2 * numerics::dilog(e) -
                         sqrt2 * (log_t2 - 2.0) * t - pi * pi / (2.0 * sqrt2);
  return -std::log(norm) - norm * xi * bracket;
}

double fisher_information_truncated(double xi, double n) {
  const double norm = truncation_norm(xi, n);
  const double a = n / sqrt2;
  const double sech = 1.0 / std::cosh(a);
  return norm * sqrt2 / (3.0 * xi) * sech * sech * sech *
         (3.0 * std::sinh(a) + std::sinh(3.0 * a));
}

double disequilibrium_truncated(double xi, double n,
                                const numerics::QuadratureOptions& opts) {
  const auto spec = DistributionSpec::truncated(xi, n);
  auto p2 = [&](double x) {
    const double p = pdf(spec, x);
    return p * p;
  };
  return numerics::integrate_finite(p2, 0.0, spec.support_end(), opts).value;
}

MeasureSet measure_set(double xi) {
  return make_measure_set(shannon_entropy(xi), fisher_information(xi),
                          disequilibrium(xi));
}

MeasureSet measure_set_truncated(double xi, double n,
                                 const numerics::QuadratureOptions& opts) {
  return make_measure_set(shannon_entropy_truncated(xi, n),
                          fisher_information_truncated(xi, n),
                          disequilibrium_truncated(xi, n, opts));
}

MeasureSet measure_set(const DistributionSpec& spec,
                       const numerics::QuadratureOptions& opts) {
  if (spec.kind().is_truncated()) {
    return measure_set_truncated(spec.xi(), spec.kind().cutoff_multiple(), opts);
  }
  return measure_set(spec.xi());
}

MeasureSet measures_at_temperature(double xi0, double Tc, double T,
                                   const DistributionKind& kind,
                                   const numerics::QuadratureOptions& opts) {
  const double xi = coherence_length({xi0, T, Tc});
  return measure_set(DistributionSpec(kind, xi), opts);
}

double tsallis_closed_form(double xi, double q) {
  check_xi(xi);
  // Gamma(q) / Gamma(1 + q) = 1 / q
  const double mass = std::exp2(0.5 * (3.0 * q - 1.0)) * std::pow(xi, 1.0 - q) *
                      numerics::hyp2f1_neg1(q, 2.0 * q, 1.0 + q) / q;
  return (1.0 - mass) / (q - 1.0);
}

namespace {

struct FisherQTerms {
  double prefactor;
  double pole_term;
  double series_term;
};

FisherQTerms fisher_q_terms(double xi, double q) {
  const double g = numerics::gamma(4.5 - 2.0 * q);
  const double prefactor = std::exp2(q - 3.0) * std::pow(xi, 2.0 * q - 4.0) /
                           ((2.0 * q - 5.0) * (2.0 * q - 3.0) * g);
  const double pole_term = -std::sqrt(pi) * (q - 1.0) *
                           numerics::gamma(6.0 - 2.0 * q) / (q - 2.0);
  const double series_term =
      2.0 * g *
      (5.0 - 2.0 * q +
       (3.0 - 2.0 * q) * numerics::hyp2f1_neg1(1.0, 2.0 * q - 2.0, 6.0 - 2.0 * q));
  return {prefactor, pole_term, series_term};
}

}  // namespace

double fisher_q_closed_form(double xi, double q) {
  check_xi(xi);
  if (q == 1.5 || q == 2.0) {
    throw PoleError("I_q closed form has a pole at q = " + std::to_string(q));
  }
  const auto t = fisher_q_terms(xi, q);
  return t.prefactor * (t.pole_term + t.series_term);
}

double tsallis_entropy(double xi, double q, const numerics::QuadratureOptions& opts) {
  check_xi(xi);
  if (std::abs(q - 1.0) < kQStitch) return shannon_entropy(xi);
  const double mass = 1.0 - (q - 1.0) * tsallis_closed_form(xi, q);
  const double defect = std::abs(1.0 - mass);
  if (defect == 0.0 || std::abs(mass) / defect > kMaxCancellation) {
    return measure_numeric(DistributionSpec::semi_infinite(xi),
                           {Measure::Tsallis, q}, opts.rel_tol);
  }
  return tsallis_closed_form(xi, q);
}

std::optional<double> fisher_q(double xi, double q,
                               const numerics::QuadratureOptions& opts) {
  check_xi(xi);
  if (!(q > kMinQ && q < kFisherQLimit)) return std::nullopt;
  if (std::abs(q - 1.0) < kQStitch) return fisher_information(xi);
  const auto t = fisher_q_terms(xi, q);
  const double sum = t.pole_term + t.series_term;
  const double scale = std::abs(t.pole_term) + std::abs(t.series_term);
  if (sum == 0.0 || scale / std::abs(sum) > kMaxCancellation) {
    return measure_numeric(DistributionSpec::semi_infinite(xi),
                           {Measure::FisherQ, q}, opts.rel_tol);
  }
  return t.prefactor * sum;
}

GeneralizedSet generalized_set(double xi, double q,
                               const numerics::QuadratureOptions& opts) {
  check_xi(xi);
  check_q(q);
  GeneralizedSet g;
  g.q = q;
  g.tsallis = tsallis_entropy(xi, q, opts);
  g.fisher_q = fisher_q(xi, q, opts);
  g.complexity_q = disequilibrium(xi) * g.tsallis;
  return g;
}

double measure_numeric(const DistributionSpec& spec, MeasureKind kind,
                       double rel_tol) {
  if (!(rel_tol > 0.0)) throw DomainError("measure_numeric: rel_tol must be > 0");
  const double q = kind.q;
  switch (kind.measure) {
    case Measure::Shannon:
      return integrate(
          spec,
          [&](double x) {
            const double p = pdf(spec, x);
            return p == 0.0 ? 0.0 : -p * log_pdf(spec, x);
          },
          2.0, rel_tol);
    case Measure::Fisher:
      return integrate(
          spec,
          [&](double x) {
            // P'^2 / P = P (ln P)'^2
            const double p = pdf(spec, x);
            if (p == 0.0) return 0.0;
            const double dlog = log_pdf_derivative(spec, x);
            return p * dlog * dlog;
          },
          2.0, rel_tol);
    case Measure::Disequilibrium:
      return integrate(
          spec,
          [&](double x) {
            const double p = pdf(spec, x);
            return p * p;
          },
          4.0, rel_tol);
    case Measure::Tsallis:
      if (!(q > 0.0) || q == 1.0) {
        throw DomainError("measure_numeric: Tsallis needs q > 0, q != 1");
      }
      // P ln_q(1/P) = P (P^{q-1} - 1) / (1 - q)
      return integrate(
          spec,
          [&](double x) {
            const double p = pdf(spec, x);
            if (p == 0.0) return 0.0;
            return p * std::expm1((q - 1.0) * log_pdf(spec, x)) / (1.0 - q);
          },
          2.0 * std::min(q, 1.0), rel_tol);
    case Measure::FisherQ: {
      if (!spec.kind().is_truncated() && !(q < kFisherQLimit)) {
        throw DomainError("measure_numeric: I_q integral diverges for q >= 1.5");
      }
      return integrate(
          spec,
          [&](double x) {
            // P^{1-2q} P'^2 = P^{3-2q} (ln P)'^2
            if (pdf(spec, x) == 0.0) return 0.0;
            const double dlog = log_pdf_derivative(spec, x);
            return std::exp((3.0 - 2.0 * q) * log_pdf(spec, x)) * dlog * dlog;
          },
          2.0 * (3.0 - 2.0 * q), rel_tol);
    }
  }
  throw DomainError("measure_numeric: unknown measure");
}

}  // namespace glinfo
