#include <cstring>
#include <vector>

#include "doctest.h"
#include "glinfo/errors.hpp"
#include "glinfo/sweep.hpp"

using namespace glinfo;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const MeasureSet& a, const MeasureSet& b) {
  return same_bits(a.shannon, b.shannon) && same_bits(a.fisher, b.fisher) &&
         same_bits(a.disequilibrium, b.disequilibrium) && same_bits(a.complexity, b.complexity) &&
         same_bits(a.fisher_complexity, b.fisher_complexity);
}

}  // namespace

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 1.0, 5);
  CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
}

TEST_CASE("temperature sweep specifications") {
  const auto t = parse_temperature_sweep("0:0.99Tc:100", 9.25);
  REQUIRE(t.size() == 100);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == doctest::Approx(0.99 * 9.25).epsilon(1e-15));
  for (std::size_t i = 1; i < t.size(); ++i) REQUIRE(t[i] > t[i - 1]);

  CHECK(parse_temperature_sweep("1:2:3", 5.0) == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(parse_temperature_sweep("0.1Tc:0.5Tc:2", 2.0) == std::vector<double>{0.2, 1.0});
  for (const char* bad : {"", "1:2", "1:2:x", "1:2:0", "2:1:5", "a:2:3", "1:2:3:4", "1:2:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_temperature_sweep(bad, 5.0), DomainError);
  }
}

TEST_CASE("temperature sweep rejects points at or above Tc individually") {
  const std::vector<double> temps = {0.0, 4.0, 9.25, 10.0};
  const auto pts = temperature_sweep(38.0, 9.25, temps, DistributionKind::semi_infinite(), {});
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].ok());
  CHECK(pts[1].ok());
  CHECK_FALSE(pts[2].ok());
  CHECK_FALSE(pts[3].ok());
  CHECK(pts[0].xi == 38.0);
  CHECK(pts[1].T_over_Tc == doctest::Approx(4.0 / 9.25));
}

TEST_CASE("parallel and serial sweeps are bitwise identical") {
  const auto temps = linspace(0.0, 0.99 * 4.47, 64);
  for (const auto& kind : {DistributionKind::semi_infinite(), DistributionKind::truncated(5.0)}) {
    const auto par = temperature_sweep(93.0, 4.47, temps, kind, {}, Execution::Parallel);
    const auto ser = temperature_sweep(93.0, 4.47, temps, kind, {}, Execution::Serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      REQUIRE(same_bits(par[i].T, ser[i].T));
      REQUIRE(same_bits(par[i].xi, ser[i].xi));
      REQUIRE(same_bits(par[i].measures, ser[i].measures));
    }
  }

  const std::vector<double> qs = {0.6, 0.95, 1.0, 1.03, 2.0};
  const auto gp = tsallis_grid(230.0, 3.72, qs, temps, {}, Execution::Parallel);
  const auto gs = tsallis_grid(230.0, 3.72, qs, temps, {}, Execution::Serial);
  REQUIRE(gp.size() == gs.size());
  for (std::size_t i = 0; i < gp.size(); ++i) {
    REQUIRE(gp[i].tsallis.size() == qs.size());
    for (std::size_t j = 0; j < qs.size(); ++j) REQUIRE(same_bits(gp[i].tsallis[j], gs[i].tsallis[j]));
  }

  const auto cp = catalog_measures(builtin_materials(), DistributionKind::truncated(5.0), {},
                                   Execution::Parallel);
  const auto cs = catalog_measures(builtin_materials(), DistributionKind::truncated(5.0), {},
                                   Execution::Serial);
  for (std::size_t i = 0; i < cp.size(); ++i) REQUIRE(same_bits(cp[i], cs[i]));

  const auto lp = catalog_liu(builtin_materials(), 1e-10, Execution::Parallel);
  const auto ls = catalog_liu(builtin_materials(), 1e-10, Execution::Serial);
  for (std::size_t i = 0; i < lp.size(); ++i) REQUIRE(same_bits(lp[i].combined, ls[i].combined));
}

TEST_CASE("sweeps are deterministic across repeated runs") {
  const auto temps = linspace(0.0, 3.0, 17);
  const auto a = temperature_sweep(230.0, 3.72, temps, DistributionKind::truncated(5.0), {});
  const auto b = temperature_sweep(230.0, 3.72, temps, DistributionKind::truncated(5.0), {});
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(same_bits(a[i].measures, b[i].measures));
}

TEST_CASE("Tsallis grid entries") {
  const std::vector<double> qs = {0.95, 1.0, 1.03, 2.0};
  const std::vector<double> temps = {0.0};
  const auto rows = tsallis_grid(230.0, 3.72, qs, temps, {});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].tsallis[1] == shannon_entropy(230.0));
  CHECK(rows[0].tsallis[3] == doctest::Approx(1.0 - disequilibrium(230.0)).epsilon(1e-13));
  CHECK(rows[0].tsallis[0] > rows[0].tsallis[1]);
  CHECK(rows[0].tsallis[1] > rows[0].tsallis[2]);
}

TEST_CASE("Tsallis grid validates q") {
  const std::vector<double> temps = {0.0};
  const std::vector<double> bad = {1.0, 2.5};
  CHECK_THROWS_AS(tsallis_grid(230.0, 3.72, bad, temps, {}), DomainError);
}
