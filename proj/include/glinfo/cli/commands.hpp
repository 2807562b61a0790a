#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glinfo/cli/output_table.hpp"
#include "glinfo/gl_model.hpp"
#include "glinfo/materials.hpp"
#include "glinfo/numerics.hpp"
#include "glinfo/sweep.hpp"

// Command implementations behind the `glinfo` executable. Each returns the
// result table plus diagnostics; the executable only parses arguments and
// prints.

namespace glinfo::cli {

enum ExitCode : int { kSuccess = 0, kComputationFailure = 1, kUsageError = 2 };

struct Context {
  Catalog catalog = builtin_materials();
  numerics::QuadratureOptions quadrature;
  Execution execution = Execution::Parallel;
};

struct CommandResult {
  OutputTable table;
  std::vector<std::string> diagnostics;  // written to stderr
  int exit_code = kSuccess;
};

/// Thrown for invalid command input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A material from the catalog or an explicit (xi0, Tc) pair.
struct MaterialRef {
  std::optional<std::string> name;
  std::optional<double> xi0;
  std::optional<double> Tc;
};

// Temperatures: a single value, or a "start:stop:count" sweep.
struct TemperatureSpec {
  std::optional<double> T;
  std::optional<std::string> sweep;
};

struct MeasuresRequest {
  MaterialRef material;
  TemperatureSpec temperature;
  DistributionKind kind = DistributionKind::semi_infinite();
};

CommandResult cmd_measures(const Context& ctx, const MeasuresRequest& req);

/// Recomputes table 1 (Liu decomposition), 2 (semi-infinite) or 3 (truncated,
/// n = 5) from the catalog at T = 0.
CommandResult cmd_table(const Context& ctx, int which);

struct TsallisRequest {
  MaterialRef material;
  TemperatureSpec temperature;
  std::vector<double> qs;  // explicit list; overrides the range when non-empty
  double q_min = 0.95;
  double q_max = 1.03;
  std::size_t steps = 9;
};

CommandResult cmd_tsallis(const Context& ctx, const TsallisRequest& req);

struct LiuRequest {
  std::optional<std::string> material;  // all catalog entries when empty
  std::optional<double> xi;
  double tol = 1e-10;
};

CommandResult cmd_liu(const Context& ctx, const LiuRequest& req);

struct BvpRequest {
  double xi = 1.0;
  std::optional<double> L;  // default 12 xi
  std::size_t n_points = 2001;
  double tol = 1e-12;
  double stretch = 1.5;
  double max_deviation = 1e-6;
  bool profile = false;
};

CommandResult cmd_bvp_check(const Context& ctx, const BvpRequest& req);

struct VerifyRequest {
  double rel_tol = 1e-8;
  // Fault injection: scales one closed form by (1 + amount) inside the checks.
  std::optional<std::string> perturb;
  double perturb_amount = 0.0;
};

CommandResult cmd_verify(const Context& ctx, const VerifyRequest& req);

CommandResult cmd_materials(const Context& ctx);

/// q grid of the tsallis command: explicit list, or linspace(q_min, q_max,
/// steps) with q = 1 inserted when bracketed. Throws UsageError.
std::vector<double> tsallis_q_grid(const TsallisRequest& req);

}  // namespace glinfo::cli
