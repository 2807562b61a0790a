// glinfo: information and complexity measures of the normal-metal /
// superconductor interface.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "glinfo/cli/commands.hpp"
#include "glinfo/errors.hpp"

namespace {

using namespace glinfo;
using namespace glinfo::cli;

struct MaterialOptions {
  std::optional<std::string> name;
  std::optional<double> xi0;
  std::optional<double> Tc;
  std::optional<double> T;
  std::optional<std::string> sweep;

  void attach(CLI::App* cmd) {
    cmd->add_option("--material,-m", name, "Material name from the catalog");
    cmd->add_option("--xi0", xi0, "Zero-temperature coherence length (nm)");
    cmd->add_option("--Tc", Tc, "Critical temperature (K)");
    cmd->add_option("--T", T, "Temperature (K), default 0");
    cmd->add_option("--sweep", sweep,
                    "Temperature sweep start:stop:count, bounds may use a Tc "
                    "suffix (e.g. 0:0.99Tc:100)");
  }
  MaterialRef material() const { return {name, xi0, Tc}; }
  TemperatureSpec temperature() const { return {T, sweep}; }
};

int emit(const CommandResult& r, TableFormat format) {
  std::cout << r.table.render(format);
  for (const auto& d : r.diagnostics) std::cerr << "glinfo: " << d << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information and complexity measures of the Ginzburg-Landau "
               "normal-metal/superconductor interface"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::optional<std::string> materials_file;
  std::optional<double> rel_tol;
  bool serial = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv", "pretty"}))
      ->capture_default_str();
  app.add_option("--materials-file", materials_file,
                 "Material catalog (name,Z,xi0_nm,Tc_K) replacing the builtin one");
  app.add_option("--rel-tol", rel_tol,
                 "Relative tolerance: quadrature for computations, checks for verify");
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  MaterialOptions measures_opts;
  std::string kind_name = "semi-infinite";
  double cutoff_n = 5.0;
  auto* measures = app.add_subcommand("measures", "Measures at one temperature or a sweep");
  measures_opts.attach(measures);
  measures->add_option("--kind", kind_name, "Interface density")
      ->check(CLI::IsMember({"semi-infinite", "truncated"}))
      ->capture_default_str();
  measures->add_option("--n", cutoff_n, "Cutoff multiple for the truncated density")
      ->capture_default_str();

  int table_which = 2;
  auto* table = app.add_subcommand("table", "Recompute material table 1, 2 or 3");
  table->add_option("which", table_which, "Table number")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));

  MaterialOptions tsallis_opts;
  TsallisRequest tsallis_req;
  auto* tsallis = app.add_subcommand("tsallis", "Tsallis entropy over a (q, T) grid");
  tsallis_opts.attach(tsallis);
  tsallis->add_option("--q", tsallis_req.qs, "Explicit q values (comma separated)")
      ->delimiter(',');
  tsallis->add_option("--q-min", tsallis_req.q_min)->capture_default_str();
  tsallis->add_option("--q-max", tsallis_req.q_max)->capture_default_str();
  tsallis->add_option("--steps", tsallis_req.steps)->capture_default_str();

  LiuRequest liu_req;
  auto* liu = app.add_subcommand("liu", "Shannon = -1 + I1F + I2F decomposition");
  liu->add_option("--material,-m", liu_req.material, "Material (default: whole catalog)");
  liu->add_option("--xi", liu_req.xi, "Coherence length (nm) instead of a material");
  liu->add_option("--tol", liu_req.tol, "Tail tolerance selecting the cutoff")
      ->capture_default_str();

  BvpRequest bvp_req;
  auto* bvp = app.add_subcommand("bvp-check", "Solve the interface BVP and compare to tanh");
  bvp->add_option("--xi", bvp_req.xi, "Coherence length (nm)")->capture_default_str();
  bvp->add_option("--L", bvp_req.L, "Domain length (nm), default 12 xi");
  bvp->add_option("--points", bvp_req.n_points)->capture_default_str();
  bvp->add_option("--tol", bvp_req.tol, "Newton residual tolerance")->capture_default_str();
  bvp->add_option("--stretch", bvp_req.stretch, "Grid stretch (0 = uniform)")
      ->capture_default_str();
  bvp->add_option("--max-deviation", bvp_req.max_deviation)->capture_default_str();
  bvp->add_flag("--profile", bvp_req.profile, "Print the solved profile");

  VerifyRequest verify_req;
  std::vector<std::string> perturb;
  auto* verify = app.add_subcommand("verify", "Run every closed-form/oracle check");
  verify->add_option("--perturb", perturb, "Fault injection: <target> <relative amount>")
      ->expected(2);

  std::string materials_action = "list";
  std::optional<std::string> materials_path;
  auto* materials = app.add_subcommand("materials", "List or load a material catalog");
  materials->add_option("action", materials_action)
      ->check(CLI::IsMember({"list", "load"}))
      ->capture_default_str();
  materials->add_option("path", materials_path, "File for 'load'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    Context ctx;
    const auto fmt = parse_format(format);
    if (serial) ctx.execution = Execution::Serial;
    if (materials_file) ctx.catalog = load_materials(*materials_file);
    if (rel_tol) {
      if (!(*rel_tol > 0.0)) throw UsageError("--rel-tol must be positive");
      ctx.quadrature.rel_tol = *rel_tol;
    }

    if (*measures) {
      MeasuresRequest req{measures_opts.material(), measures_opts.temperature(),
                          kind_name == "truncated" ? DistributionKind::truncated(cutoff_n)
                                                   : DistributionKind::semi_infinite()};
      return emit(cmd_measures(ctx, req), fmt);
    }
    if (*table) return emit(cmd_table(ctx, table_which), fmt);
    if (*tsallis) {
      tsallis_req.material = tsallis_opts.material();
      tsallis_req.temperature = tsallis_opts.temperature();
      return emit(cmd_tsallis(ctx, tsallis_req), fmt);
    }
    if (*liu) return emit(cmd_liu(ctx, liu_req), fmt);
    if (*bvp) return emit(cmd_bvp_check(ctx, bvp_req), fmt);
    if (*verify) {
      if (rel_tol) verify_req.rel_tol = *rel_tol;
      if (!perturb.empty()) {
        verify_req.perturb = perturb[0];
        try {
          verify_req.perturb_amount = std::stod(perturb[1]);
        } catch (const std::exception&) {
          throw UsageError("--perturb amount must be a number");
        }
      }
      return emit(cmd_verify(ctx, verify_req), fmt);
    }
    if (*materials) {
      if (materials_action == "load") {
        if (!materials_path) throw UsageError("materials load requires a path");
        ctx.catalog = load_materials(*materials_path);
      }
      return emit(cmd_materials(ctx), fmt);
    }
  } catch (const UsageError& e) {
    std::cerr << "glinfo: " << e.what() << '\n';
    return kUsageError;
  } catch (const MaterialsError& e) {
    std::cerr << "glinfo: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "glinfo: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "glinfo: " << e.what() << '\n';
    return kComputationFailure;
  }
  return kUsageError;
}
