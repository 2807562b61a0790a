#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "glinfo/cli/commands.hpp"
#include "glinfo/errors.hpp"
#include "glinfo/gl_bvp.hpp"
#include "glinfo/liu.hpp"
#include "glinfo/measures.hpp"

namespace glinfo::cli {

namespace {

constexpr double kXiGrid[] = {1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0};
constexpr double kTsallisQGrid[] = {0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9};
constexpr double kFisherQGrid[] = {0.6, 0.8, 0.95, 1.05, 1.2, 1.49};
constexpr const char* kTargets[] = {"shannon", "fisher", "disequilibrium", "tsallis",
                                    "fisher_q"};

double rel_dev(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

struct Harness {
  std::optional<std::string> target;
  double amount = 0.0;

  double factor(const char* name) const {
    return target && *target == name ? 1.0 + amount : 1.0;
  }
};

}  // namespace

CommandResult cmd_verify(const Context& ctx, const VerifyRequest& req) {
  if (!(req.rel_tol > 0.0)) throw UsageError("--rel-tol must be positive");
  if (req.perturb &&
      std::none_of(std::begin(kTargets), std::end(kTargets),
                   [&](const char* t) { return *req.perturb == t; })) {
    throw UsageError("unknown --perturb target '" + *req.perturb +
                     "' (shannon, fisher, disequilibrium, tsallis, fisher_q)");
  }
  const Harness h{req.perturb, req.perturb_amount};
  const double qtol = std::clamp(req.rel_tol * 1e-2, 1e-13, 1e-10);
  numerics::QuadratureOptions qopts = ctx.quadrature;
  qopts.rel_tol = qtol;

  CommandResult res;
  res.table = OutputTable({"check", "deviation", "tolerance", "status"});

  auto run = [&](const std::string& name, double tol, const std::function<double()>& f) {
    double dev = std::numeric_limits<double>::infinity();
    std::string status;
    try {
      dev = f();
      status = dev <= tol ? "pass" : "FAIL";
    } catch (const std::exception& e) {
      status = "FAIL";
      res.diagnostics.push_back(name + ": " + e.what());
    }
    if (status != "pass") res.exit_code = kComputationFailure;
    res.table.add_row({name, dev, tol, status});
  };

  auto semi_vs_quad = [&](Measure m, double (*closed)(double), const char* target) {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      const double c = closed(xi) * h.factor(target);
      const double n = measure_numeric(DistributionSpec::semi_infinite(xi), {m}, qtol);
      worst = std::max(worst, rel_dev(c, n));
    }
    return worst;
  };
  run("closed-vs-quadrature S", req.rel_tol,
      [&] { return semi_vs_quad(Measure::Shannon, shannon_entropy, "shannon"); });
  run("closed-vs-quadrature I_F", req.rel_tol,
      [&] { return semi_vs_quad(Measure::Fisher, fisher_information, "fisher"); });
  run("closed-vs-quadrature D", req.rel_tol, [&] {
    return semi_vs_quad(Measure::Disequilibrium, disequilibrium, "disequilibrium");
  });

  auto trunc_vs_quad = [&](Measure m, double (*closed)(double, double),
                           const char* target) {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      const double c = closed(xi, 5.0) * h.factor(target);
      const double n = measure_numeric(DistributionSpec::truncated(xi, 5.0), {m}, qtol);
      worst = std::max(worst, rel_dev(c, n));
    }
    return worst;
  };
  run("closed-vs-quadrature S truncated(n=5)", req.rel_tol, [&] {
    return trunc_vs_quad(Measure::Shannon, shannon_entropy_truncated, "shannon");
  });
  run("closed-vs-quadrature I_F truncated(n=5)", req.rel_tol, [&] {
    return trunc_vs_quad(Measure::Fisher, fisher_information_truncated, "fisher");
  });

  run("closed-vs-quadrature T_q", req.rel_tol, [&] {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      for (double q : kTsallisQGrid) {
        const double c = tsallis_closed_form(xi, q) * h.factor("tsallis");
        const double n = measure_numeric(DistributionSpec::semi_infinite(xi),
                                         {Measure::Tsallis, q}, qtol);
        worst = std::max(worst, rel_dev(c, n));
      }
    }
    return worst;
  });
  run("closed-vs-quadrature I_q (q < 1.5)", req.rel_tol, [&] {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      for (double q : kFisherQGrid) {
        const double c = fisher_q_closed_form(xi, q) * h.factor("fisher_q");
        const double n = measure_numeric(DistributionSpec::semi_infinite(xi),
                                         {Measure::FisherQ, q}, qtol);
        worst = std::max(worst, rel_dev(c, n));
      }
    }
    return worst;
  });

  run("normalization of both densities", std::max(req.rel_tol, 1e-9), [&] {
    double worst = 0.0;
    for (double xi : {1.0, 38.0, 230.0, 1600.0}) {
      for (const auto& spec :
           {DistributionSpec::semi_infinite(xi), DistributionSpec::truncated(xi, 5.0)}) {
        auto f = [&](double x) { return pdf(spec, x); };
        const double mass =
            spec.kind().is_truncated()
                ? numerics::integrate_finite(f, 0.0, spec.support_end(), qopts).value
                : numerics::integrate_semi_infinite(f, 0.0, qopts, std::numbers::sqrt2 * xi)
                      .value;
        worst = std::max(worst, std::abs(mass - 1.0));
      }
    }
    return worst;
  });

  run("scaling laws I_F xi^2, D xi, S - ln xi", 1e-12, [&] {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      worst = std::max(worst, rel_dev(fisher_information(xi) * h.factor("fisher") * xi * xi,
                                      2.0 / 3.0));
      worst = std::max(worst,
                       rel_dev(disequilibrium(xi) * h.factor("disequilibrium") * xi,
                               std::numbers::sqrt2 / 3.0));
      worst = std::max(worst, rel_dev(shannon_entropy(xi) * h.factor("shannon") -
                                          std::log(xi),
                                      2.0 - 1.5 * std::numbers::ln2));
    }
    return worst;
  });

  run("energy-profile identity", 1e-12, [&] {
    double worst = 0.0;
    for (const auto& m : ctx.catalog) {
      worst = std::max(worst, rel_dev(fisher_information(m.xi0) * h.factor("fisher"),
                                      fisher_from_energy_ratio(surface_to_bulk_ratio(m.xi0))));
    }
    return worst;
  });

  run("temperature law I_F(T)/I_F(0) = 1 - T/Tc", 1e-12, [&] {
    double worst = 0.0;
    for (const auto& m : ctx.catalog) {
      const double f0 = fisher_information(m.xi0);
      for (double r : {0.25, 0.5, 0.75}) {
        const double fT = measures_at_temperature(m.xi0, m.Tc, r * m.Tc,
                                                  DistributionKind::semi_infinite())
                              .fisher *
                          h.factor("fisher");
        worst = std::max(worst, rel_dev(fT / f0, 1.0 - r));
      }
    }
    return worst;
  });

  run("q -> 1 continuity of T_q at q = 1 +- 1e-4", 1e-3, [&] {
    double worst = 0.0;
    for (double xi : {38.0, 230.0, 1600.0}) {
      for (double q : {1.0 - 1e-4, 1.0 + 1e-4}) {
        const double t = generalized_set(xi, q, qopts).tsallis * h.factor("tsallis");
        worst = std::max(worst, rel_dev(t, shannon_entropy(xi)));
      }
    }
    return worst;
  });

  // I_q ~ xi^{2q-4} moves by ~2 ln(xi) * 1e-4 per side, so the limit is
  // checked through the symmetric mean.
  run("q -> 1 limit of I_q (two-sided mean)", 1e-3, [&] {
    double worst = 0.0;
    for (double xi : {38.0, 230.0, 1600.0}) {
      const double lo = *generalized_set(xi, 1.0 - 1e-4, qopts).fisher_q;
      const double hi = *generalized_set(xi, 1.0 + 1e-4, qopts).fisher_q;
      worst = std::max(worst, rel_dev(0.5 * (lo + hi) * h.factor("fisher_q"),
                                      fisher_information(xi)));
    }
    return worst;
  });

  run("T_2 = 1 - D", 1e-10, [&] {
    double worst = 0.0;
    for (double xi : kXiGrid) {
      const double t2 = generalized_set(xi, 2.0, qopts).tsallis * h.factor("tsallis");
      worst = std::max(worst, std::abs(t2 - (1.0 - disequilibrium(xi))));
    }
    return worst;
  });

  run("Liu identity |S - (-1 + I1F + I2F)|", 1e-6, [&] {
    double worst = 0.0;
    for (const auto& r : catalog_liu(ctx.catalog, 1e-10, ctx.execution)) {
      worst = std::max(worst, std::abs(r.shannon * h.factor("shannon") -
                                       (-1.0 + r.combined)));
    }
    return worst;
  });

  run("Liu pointwise -P + I1f + I2f = s", 1e-9, [&] {
    numerics::QuadratureOptions o;
    o.rel_tol = 1e-13;
    double worst = 0.0;
    for (double xi : {1.0, 38.0, 1600.0}) {
      for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        worst = std::max(worst, liu_pointwise_defect(r * xi, xi, o));
      }
    }
    return worst;
  });

  run("BVP profile vs tanh (xi = 1, 2001 points)", 1e-6,
      [&] { return solve_profile(1.0, 12.0, 2001, 1e-12).max_deviation; });

  return res;
}

}  // namespace glinfo::cli
