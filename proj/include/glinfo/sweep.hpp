#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glinfo/gl_model.hpp"
#include "glinfo/liu.hpp"
#include "glinfo/materials.hpp"
#include "glinfo/measures.hpp"

// Data-parallel evaluation over independent sweep points. Every kernel has a
// serial reference path and an OpenMP path sharing the same per-point code,
// so both return bitwise-identical, input-ordered results.

namespace glinfo {

enum class Execution { Serial, Parallel };

/// n points from a to b inclusive (n = 1 gives {a}).
std::vector<double> linspace(double a, double b, std::size_t n);

/// Parses "start:stop:count"; start and stop accept a "Tc" suffix meaning a
/// multiple of Tc ("0.99Tc", "Tc"). Throws DomainError on malformed input.
std::vector<double> parse_temperature_sweep(std::string_view spec, double Tc);

struct TemperaturePoint {
  double T = 0.0;
  double T_over_Tc = 0.0;
  double xi = 0.0;
  MeasureSet measures;
  std::string error;  // non-empty when the point was rejected
  bool ok() const { return error.empty(); }
};

std::vector<TemperaturePoint> temperature_sweep(
    double xi0, double Tc, std::span<const double> temperatures,
    const DistributionKind& kind, const numerics::QuadratureOptions& opts,
    Execution exec = Execution::Parallel);

struct TsallisRow {
  double T = 0.0;
  double xi = 0.0;
  std::vector<double> tsallis;  // one entry per q, in q order
  std::string error;
  bool ok() const { return error.empty(); }
};

/// T_q over the (T, q) grid. Every q must lie in (0.5, 2].
std::vector<TsallisRow> tsallis_grid(double xi0, double Tc,
                                     std::span<const double> qs,
                                     std::span<const double> temperatures,
                                     const numerics::QuadratureOptions& opts,
                                     Execution exec = Execution::Parallel);

/// Measures at T = 0 (xi = xi0) for every catalog entry.
std::vector<MeasureSet> catalog_measures(const Catalog& catalog,
                                         const DistributionKind& kind,
                                         const numerics::QuadratureOptions& opts,
                                         Execution exec = Execution::Parallel);

std::vector<LiuReport> catalog_liu(const Catalog& catalog, double tol,
                                   Execution exec = Execution::Parallel);

}  // namespace glinfo
