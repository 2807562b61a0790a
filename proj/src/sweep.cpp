#include "glinfo/sweep.hpp"

#include <charconv>
#include <cstddef>
#include <exception>
#include <sstream>

#include "glinfo/errors.hpp"

namespace glinfo {

namespace {

// Runs body(i) for i in [0, n). Exceptions are captured per index and the
// lowest-index one is rethrown, so failures are reported deterministically.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double parse_bound(std::string_view s, double Tc, std::string_view whole) {
  double factor = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "Tc") {
    factor = Tc;
    s.remove_suffix(2);
    if (s.empty()) return Tc;
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("malformed temperature sweep '" + std::string(whole) +
                      "' (expected start:stop:count)");
  }
  return v * factor;
}

}  // namespace

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 1) v.back() = b;
  return v;
}

std::vector<double> parse_temperature_sweep(std::string_view spec, double Tc) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw DomainError("malformed temperature sweep '" + std::string(spec) +
                      "' (expected start:stop:count)");
  }
  const double start = parse_bound(spec.substr(0, c1), Tc, spec);
  const double stop = parse_bound(spec.substr(c1 + 1, c2 - c1 - 1), Tc, spec);
  const auto count_str = spec.substr(c2 + 1);
  std::size_t count = 0;
  const auto [ptr, ec] =
      std::from_chars(count_str.data(), count_str.data() + count_str.size(), count);
  if (ec != std::errc() || ptr != count_str.data() + count_str.size() || count == 0) {
    throw DomainError("temperature sweep count must be a positive integer in '" +
                      std::string(spec) + "'");
  }
  if (count > 1 && !(start < stop)) {
    throw DomainError("temperature sweep must be ascending: '" + std::string(spec) + "'");
  }
  return linspace(start, stop, count);
}

std::vector<TemperaturePoint> temperature_sweep(
    double xi0, double Tc, std::span<const double> temperatures,
    const DistributionKind& kind, const numerics::QuadratureOptions& opts,
    Execution exec) {
  std::vector<TemperaturePoint> out(temperatures.size());
  for_each_index(out.size(), exec, [&](std::size_t i) {
    auto& p = out[i];
    p.T = temperatures[i];
    p.T_over_Tc = p.T / Tc;
    try {
      p.xi = coherence_length({xi0, p.T, Tc});
      p.measures = measure_set(DistributionSpec(kind, p.xi), opts);
    } catch (const DomainError& e) {
      p.error = e.what();
    }
  });
  return out;
}

std::vector<TsallisRow> tsallis_grid(double xi0, double Tc,
                                     std::span<const double> qs,
                                     std::span<const double> temperatures,
                                     const numerics::QuadratureOptions& opts,
                                     Execution exec) {
  for (double q : qs) {
    if (!(q > kMinQ && q <= kMaxQ)) {
      std::ostringstream msg;
      msg << "q = " << q << " outside the validity window (" << kMinQ << ", "
          << kMaxQ << "]";
      throw DomainError(msg.str());
    }
  }
  std::vector<TsallisRow> rows(temperatures.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].T = temperatures[i];
    rows[i].tsallis.assign(qs.size(), 0.0);
    try {
      rows[i].xi = coherence_length({xi0, rows[i].T, Tc});
    } catch (const DomainError& e) {
      rows[i].error = e.what();
    }
  }
  // Flattened over (T, q) so the parallel loop balances across both axes.
  const std::size_t nq = qs.size();
  for_each_index(rows.size() * nq, exec, [&](std::size_t k) {
    auto& row = rows[k / nq];
    if (!row.ok()) return;
    row.tsallis[k % nq] = tsallis_entropy(row.xi, qs[k % nq], opts);
  });
  return rows;
}

std::vector<MeasureSet> catalog_measures(const Catalog& catalog,
                                         const DistributionKind& kind,
                                         const numerics::QuadratureOptions& opts,
                                         Execution exec) {
  std::vector<MeasureSet> out(catalog.size());
  for_each_index(out.size(), exec, [&](std::size_t i) {
    out[i] = measure_set(DistributionSpec(kind, catalog[i].xi0), opts);
  });
  return out;
}

std::vector<LiuReport> catalog_liu(const Catalog& catalog, double tol,
                                   Execution exec) {
  std::vector<LiuReport> out(catalog.size());
  for_each_index(out.size(), exec,
                 [&](std::size_t i) { out[i] = liu_identity(catalog[i].xi0, tol); });
  return out;
}

}  // namespace glinfo
