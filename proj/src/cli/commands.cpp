#include "glinfo/cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "glinfo/errors.hpp"
#include "glinfo/gl_bvp.hpp"
#include "glinfo/liu.hpp"
#include "glinfo/measures.hpp"

namespace glinfo::cli {

namespace {

struct ResolvedMaterial {
  std::string label;
  double xi0;
  double Tc;
};

ResolvedMaterial resolve(const Context& ctx, const MaterialRef& ref) {
  if (ref.name) {
    if (ref.xi0 || ref.Tc) {
      throw UsageError("give either --material or --xi0/--Tc, not both");
    }
    try {
      const auto& m = lookup(ctx.catalog, *ref.name);
      return {m.name, m.xi0, m.Tc};
    } catch (const NotFoundError& e) {
      throw UsageError(e.what());
    }
  }
  if (!ref.xi0 || !ref.Tc) {
    throw UsageError("a material (--material) or both --xi0 and --Tc are required");
  }
  if (!(*ref.xi0 > 0.0) || !(*ref.Tc > 0.0)) {
    throw UsageError("--xi0 and --Tc must be positive");
  }
  return {"custom", *ref.xi0, *ref.Tc};
}

std::vector<double> resolve_temperatures(const TemperatureSpec& spec, double Tc) {
  if (spec.T && spec.sweep) throw UsageError("give either --T or --sweep, not both");
  if (spec.sweep) {
    try {
      return parse_temperature_sweep(*spec.sweep, Tc);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return {spec.T.value_or(0.0)};
}

Cell num(double v) { return v; }
Cell integer(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

CommandResult cmd_measures(const Context& ctx, const MeasuresRequest& req) {
  const auto mat = resolve(ctx, req.material);
  const auto temps = resolve_temperatures(req.temperature, mat.Tc);
  const auto points =
      temperature_sweep(mat.xi0, mat.Tc, temps, req.kind, ctx.quadrature, ctx.execution);

  CommandResult res;
  res.table = OutputTable({"T", "T/Tc", "xi", "S", "I_F", "D", "C", "C_tilde"});
  for (const auto& p : points) {
    if (!p.ok()) {
      res.diagnostics.push_back("rejected T = " + format_shortest(p.T) + " K: " + p.error);
      res.exit_code = kComputationFailure;
      continue;
    }
    const auto& m = p.measures;
    res.table.add_row({num(p.T), num(p.T_over_Tc), num(p.xi), num(m.shannon),
                       num(m.fisher), num(m.disequilibrium), num(m.complexity),
                       num(m.fisher_complexity)});
  }
  return res;
}

CommandResult cmd_table(const Context& ctx, int which) {
  CommandResult res;
  const auto& cat = ctx.catalog;
  if (which == 1) {
    const auto reports = catalog_liu(cat, 1e-10, ctx.execution);
    res.table = OutputTable({"Atom", "Z", "xi0_nm", "S", "cutoff_nm", "I1F", "I2F",
                             "-1+I1F+I2F", "residual"});
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto& r = reports[i];
      res.table.add_row({cat[i].name, integer(cat[i].Z), num(cat[i].xi0), num(r.shannon),
                         num(r.cutoff), num(r.i1F), num(r.i2F), num(-1.0 + r.combined),
                         num(r.residual)});
      if (r.residual > 1e-6) res.exit_code = kComputationFailure;
    }
    res.table.set_pretty_scale(2, 0, 0);
    res.table.set_pretty_scale(3, 0, 3);
    res.table.set_pretty_scale(4, 0, 1);
    res.table.set_pretty_scale(5, 0, 3);
    res.table.set_pretty_scale(6, 0, 3);
    res.table.set_pretty_scale(7, 0, 3);
    return res;
  }
  if (which != 2 && which != 3) throw UsageError("table must be 1, 2 or 3");

  const auto kind =
      which == 2 ? DistributionKind::semi_infinite() : DistributionKind::truncated(5.0);
  const auto sets = catalog_measures(cat, kind, ctx.quadrature, ctx.execution);
  res.table = OutputTable({"Atom", "Z", "xi0_nm", "Tc_K", "S", "I_F", "D", "C"});
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& m = sets[i];
    res.table.add_row({cat[i].name, integer(cat[i].Z), num(cat[i].xi0), num(cat[i].Tc),
                       num(m.shannon), num(m.fisher), num(m.disequilibrium),
                       num(m.complexity)});
  }
  res.table.set_pretty_scale(2, 0, 0);
  res.table.set_pretty_scale(3, 0, 3);
  res.table.set_pretty_scale(4, 0, 3);
  res.table.set_pretty_scale(5, -5, 4);
  res.table.set_pretty_scale(6, -4, 3);
  res.table.set_pretty_scale(7, -3, 3);
  return res;
}

std::vector<double> tsallis_q_grid(const TsallisRequest& req) {
  auto in_window = [](double q) { return q > kMinQ && q <= kMaxQ; };
  std::vector<double> qs;
  if (!req.qs.empty()) {
    qs = req.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  } else {
    if (!(req.q_min < req.q_max) || req.steps < 2) {
      throw UsageError("q range needs q_min < q_max and at least 2 steps");
    }
    qs = linspace(req.q_min, req.q_max, req.steps);
    // Drop linspace round-off so q = 0.8 is 0.8, not 0.7999999999999999.
    for (double& q : qs) q = std::round(q * 1e12) / 1e12;
    if (req.q_min < 1.0 && req.q_max > 1.0 &&
        std::none_of(qs.begin(), qs.end(), [](double q) { return q == 1.0; })) {
      qs.insert(std::upper_bound(qs.begin(), qs.end(), 1.0), 1.0);
    }
  }
  for (double q : qs) {
    if (!in_window(q)) {
      throw UsageError("q = " + format_shortest(q) +
                       " outside the validity window (0.5, 2]");
    }
  }
  return qs;
}

CommandResult cmd_tsallis(const Context& ctx, const TsallisRequest& req) {
  const auto mat = resolve(ctx, req.material);
  const auto temps = resolve_temperatures(req.temperature, mat.Tc);
  const auto qs = tsallis_q_grid(req);
  const auto rows = tsallis_grid(mat.xi0, mat.Tc, qs, temps, ctx.quadrature, ctx.execution);

  std::vector<std::string> headers = {"T", "T/Tc", "xi"};
  for (double q : qs) headers.push_back("T_q[q=" + format_shortest(q) + "]");
  CommandResult res;
  res.table = OutputTable(std::move(headers));
  for (const auto& r : rows) {
    if (!r.ok()) {
      res.diagnostics.push_back("rejected T = " + format_shortest(r.T) + " K: " + r.error);
      res.exit_code = kComputationFailure;
      continue;
    }
    std::vector<Cell> row = {num(r.T), num(r.T / mat.Tc), num(r.xi)};
    for (double v : r.tsallis) row.push_back(num(v));
    res.table.add_row(std::move(row));
  }
  return res;
}

CommandResult cmd_liu(const Context& ctx, const LiuRequest& req) {
  if (!(req.tol > 0.0)) throw UsageError("--tol must be positive");
  Catalog targets;
  if (req.xi) {
    if (req.material) throw UsageError("give either --material or --xi, not both");
    if (!(*req.xi > 0.0)) throw UsageError("--xi must be positive");
    targets.push_back({"custom", 1, *req.xi, 1.0});
  } else if (req.material) {
    try {
      targets.push_back(lookup(ctx.catalog, *req.material));
    } catch (const NotFoundError& e) {
      throw UsageError(e.what());
    }
  } else {
    targets = ctx.catalog;
  }
  const auto reports = catalog_liu(targets, req.tol, ctx.execution);

  CommandResult res;
  res.table = OutputTable({"Atom", "xi_nm", "cutoff_nm", "I1F", "I2F", "-1+I1F+I2F",
                           "S", "residual", "max_pointwise_defect"});
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& r = reports[i];
    res.table.add_row({targets[i].name, num(r.xi), num(r.cutoff), num(r.i1F), num(r.i2F),
                       num(-1.0 + r.combined), num(r.shannon), num(r.residual),
                       num(r.max_pointwise_defect)});
    if (r.residual > 1e-6) {
      res.diagnostics.push_back(targets[i].name + ": identity residual " +
                                format_scientific(r.residual) + " exceeds 1e-6");
      res.exit_code = kComputationFailure;
    }
  }
  return res;
}

CommandResult cmd_bvp_check(const Context&, const BvpRequest& req) {
  if (!(req.xi > 0.0)) throw UsageError("--xi must be positive");
  const double L = req.L.value_or(12.0 * req.xi);
  BvpOptions opts;
  opts.stretch = req.stretch;
  BvpSolution sol;
  try {
    sol = solve_profile(req.xi, L, req.n_points, req.tol, opts);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  CommandResult res;
  if (req.profile) {
    res.table = OutputTable({"x", "u", "tanh", "deviation"});
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
      const double exact = order_parameter(sol.grid[i], req.xi);
      res.table.add_row({num(sol.grid[i]), num(sol.u[i]), num(exact),
                         num(std::abs(sol.u[i] - exact))});
    }
  } else {
    res.table = OutputTable(
        {"xi", "L", "n_points", "iterations", "residual", "max_deviation"});
    res.table.add_row({num(req.xi), num(L), static_cast<std::int64_t>(req.n_points),
                       static_cast<std::int64_t>(sol.iterations), num(sol.residual),
                       num(sol.max_deviation)});
  }
  if (sol.max_deviation > req.max_deviation) {
    res.diagnostics.push_back("max deviation " + format_scientific(sol.max_deviation) +
                              " exceeds " + format_scientific(req.max_deviation));
    res.exit_code = kComputationFailure;
  }
  return res;
}

CommandResult cmd_materials(const Context& ctx) {
  CommandResult res;
  res.table = OutputTable({"name", "Z", "xi0_nm", "Tc_K"});
  for (const auto& m : ctx.catalog) {
    res.table.add_row({m.name, integer(m.Z), num(m.xi0), num(m.Tc)});
  }
  res.table.set_pretty_scale(2, 0, 0);
  res.table.set_pretty_scale(3, 0, 3);
  return res;
}

}  // namespace glinfo::cli
