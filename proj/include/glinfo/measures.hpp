#pragma once

#include <optional>

#include "glinfo/gl_model.hpp"
#include "glinfo/numerics.hpp"

namespace glinfo {

/// Information and complexity measures of one interface density, nm units.
struct MeasureSet {
  double shannon = 0.0;            // S, nats
  double fisher = 0.0;             // I_F, nm^-2
  double disequilibrium = 0.0;     // D, nm^-1
  double complexity = 0.0;         // C = S * D
  double fisher_complexity = 0.0;  // C~ = S * I_F
};

/// Builds a MeasureSet; the two complexities are formed as products.
MeasureSet make_measure_set(double shannon, double fisher, double disequilibrium);

// Closed forms for the semi-infinite density.
double shannon_entropy(double xi);      // 2 + ln(xi / 2^{3/2})
double fisher_information(double xi);   // 2 / (3 xi^2)
double disequilibrium(double xi);       // sqrt2 / (3 xi)

// Truncated density on [0, n xi]. D has no closed form and is integrated.
double shannon_entropy_truncated(double xi, double n);
double fisher_information_truncated(double xi, double n);
double disequilibrium_truncated(double xi, double n,
                                const numerics::QuadratureOptions& opts = {});

MeasureSet measure_set(double xi);
MeasureSet measure_set_truncated(double xi, double n,
                                 const numerics::QuadratureOptions& opts = {});
MeasureSet measure_set(const DistributionSpec& spec,
                       const numerics::QuadratureOptions& opts = {});

/// measure_set at xi(T). Throws DivergenceError for T >= Tc.
MeasureSet measures_at_temperature(double xi0, double Tc, double T,
                                   const DistributionKind& kind,
                                   const numerics::QuadratureOptions& opts = {});

// Nonextensive (Tsallis) measures of the semi-infinite density.

/// q range accepted by generalized_set and the Tsallis commands.
inline constexpr double kMinQ = 0.5;   // exclusive
inline constexpr double kMaxQ = 2.0;   // inclusive
/// I_q's defining integral diverges at and beyond this q.
inline constexpr double kFisherQLimit = 1.5;
/// Below this |q - 1| the Shannon/Fisher limits are returned.
inline constexpr double kQStitch = 1e-6;

struct GeneralizedSet {
  double q = 1.0;
  double tsallis = 0.0;                // T_q
  std::optional<double> fisher_q;      // I_q; empty where its integral diverges
  double complexity_q = 0.0;           // C_q = D * T_q
};

/// T_q in closed form with Gamma and 2F1(q, 2q; 1+q; -1). No limit handling.
double tsallis_closed_form(double xi, double q);
/// I_q in closed form with Gamma and 2F1(1, 2q-2; 6-2q; -1). No validity check
/// beyond the Gamma/2F1 poles; for q > 1.5 the value is an analytic continuation.
double fisher_q_closed_form(double xi, double q);

/// T_q with q -> 1 stitching and quadrature fallback when the closed form
/// cancels badly.
double tsallis_entropy(double xi, double q,
                       const numerics::QuadratureOptions& opts = {});
/// I_q for q in (0.5, 1.5); empty outside that range.
std::optional<double> fisher_q(double xi, double q,
                               const numerics::QuadratureOptions& opts = {});

/// Throws DomainError for q outside (0.5, 2].
GeneralizedSet generalized_set(double xi, double q,
                               const numerics::QuadratureOptions& opts = {});

// Direct quadrature of the defining integrals; the oracle for the closed forms.

enum class Measure { Shannon, Fisher, Disequilibrium, Tsallis, FisherQ };

struct MeasureKind {
  Measure measure = Measure::Shannon;
  double q = 1.0;  // Tsallis / FisherQ only
};

double measure_numeric(const DistributionSpec& spec, MeasureKind kind,
                       double rel_tol = 1e-10);

}  // namespace glinfo
