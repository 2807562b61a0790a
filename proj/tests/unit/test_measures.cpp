#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "glinfo/errors.hpp"
#include "glinfo/measures.hpp"
#include "oracles.hpp"

using namespace glinfo;
using doctest::Approx;

namespace {

const std::vector<double> kXiGrid = {1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0};
const std::vector<double> kQGrid = {0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("semi-infinite closed forms reproduce the material table") {
  const auto al = measure_set(1600.0);
  CHECK(al.shannon == Approx(8.338).epsilon(6e-5));
  CHECK(al.fisher * 1e5 == Approx(0.0260).epsilon(2e-3));
  CHECK(al.disequilibrium * 1e4 == Approx(2.946).epsilon(2e-4));

  const auto sn = measure_set(230.0);
  CHECK(sn.shannon == Approx(6.398).epsilon(1e-4));
  CHECK(sn.fisher * 1e5 == Approx(1.260).epsilon(4e-4));
  CHECK(sn.disequilibrium * 1e4 == Approx(20.496).epsilon(3e-5));
  CHECK(sn.complexity * 1e3 == Approx(13.113).epsilon(1e-4));

  CHECK(fisher_information(std::sqrt(2.0 / 3.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(shannon_entropy(std::pow(2.0, 1.5)) == Approx(2.0).epsilon(1e-15));

  const auto nb = measure_set(38.0);
  CHECK(nb.complexity == nb.shannon * nb.disequilibrium);
  CHECK(nb.complexity == Approx(5.704e-2).epsilon(1e-4));
  CHECK(nb.fisher_complexity == nb.shannon * nb.fisher);
}

TEST_CASE("measures reject non-positive lengths") {
  CHECK_THROWS_AS(shannon_entropy(0.0), DomainError);
  CHECK_THROWS_AS(fisher_information(-1.0), DomainError);
  CHECK_THROWS_AS(disequilibrium(NAN), DomainError);
  CHECK_THROWS_AS(measure_set_truncated(38.0, 0.0), DomainError);
}

TEST_CASE("closed forms agree with quadrature of the defining integrals") {
  for (double xi : kXiGrid) {
    CAPTURE(xi);
    CHECK(rel(shannon_entropy(xi), oracle::shannon(xi)) <= 1e-10);
    CHECK(rel(fisher_information(xi), oracle::fisher(xi)) <= 1e-10);
    CHECK(rel(disequilibrium(xi), oracle::disequilibrium(xi)) <= 1e-10);
    CHECK(rel(shannon_entropy_truncated(xi, 5.0), oracle::shannon_truncated(xi, 5.0)) <= 1e-10);
    CHECK(rel(fisher_information_truncated(xi, 5.0), oracle::fisher_truncated(xi, 5.0)) <= 1e-10);
    CHECK(rel(disequilibrium_truncated(xi, 5.0), oracle::disequilibrium_truncated(xi, 5.0)) <=
          1e-10);
    for (double q : kQGrid) {
      CAPTURE(q);
      CHECK(rel(tsallis_entropy(xi, q), oracle::tsallis(xi, q)) <= 1e-10);
      if (q < kFisherQLimit) {
        REQUIRE(fisher_q(xi, q).has_value());
        CHECK(rel(*fisher_q(xi, q), oracle::fisher_q(xi, q)) <= 1e-10);
      } else {
        CHECK_FALSE(fisher_q(xi, q).has_value());
      }
    }
  }
}

TEST_CASE("library quadrature path agrees with the oracle") {
  for (double xi : {1.0, 230.0, 1600.0}) {
    const auto si = DistributionSpec::semi_infinite(xi);
    const auto tr = DistributionSpec::truncated(xi, 5.0);
    CHECK(rel(measure_numeric(si, {Measure::Shannon}), oracle::shannon(xi)) <= 1e-9);
    CHECK(rel(measure_numeric(si, {Measure::Fisher}), oracle::fisher(xi)) <= 1e-9);
    CHECK(rel(measure_numeric(si, {Measure::Disequilibrium}), oracle::disequilibrium(xi)) <= 1e-9);
    CHECK(rel(measure_numeric(si, {Measure::Tsallis, 0.8}), oracle::tsallis(xi, 0.8)) <= 1e-9);
    CHECK(rel(measure_numeric(si, {Measure::FisherQ, 1.2}), oracle::fisher_q(xi, 1.2)) <= 1e-9);
    CHECK(rel(measure_numeric(tr, {Measure::Shannon}), oracle::shannon_truncated(xi, 5.0)) <= 1e-9);
    CHECK(rel(measure_numeric(tr, {Measure::Fisher}), oracle::fisher_truncated(xi, 5.0)) <= 1e-9);
  }
  CHECK(measure_numeric(DistributionSpec::semi_infinite(1.0), {Measure::Fisher}) ==
        Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(measure_numeric(DistributionSpec::semi_infinite(std::pow(2.0, 1.5)), {Measure::Shannon}) ==
        Approx(2.0).epsilon(1e-10));
  CHECK(measure_numeric(DistributionSpec::truncated(1600.0, 5.0), {Measure::Disequilibrium}) ==
        Approx(1.514e-4).epsilon(4e-4));

  const auto si = DistributionSpec::semi_infinite(1.0);
  CHECK_THROWS_AS(measure_numeric(si, {Measure::Tsallis, 1.0}), DomainError);
  CHECK_THROWS_AS(measure_numeric(si, {Measure::FisherQ, 1.5}), DomainError);
  CHECK_THROWS_AS(measure_numeric(si, {Measure::Fisher}, 0.0), DomainError);
}

TEST_CASE("truncated density reproduces the n = 5 table") {
  const auto nb = measure_set_truncated(38.0, 5.0);
  CHECK(nb.shannon == Approx(5.099).epsilon(1e-4));
  CHECK(nb.fisher * 1e5 == Approx(36.400).epsilon(2e-3));
  CHECK(nb.disequilibrium * 1e4 == Approx(63.750).epsilon(2e-3));
  CHECK(nb.complexity * 1e3 == Approx(32.506).epsilon(2e-3));
  const auto al = measure_set_truncated(1600.0, 5.0);
  CHECK(al.shannon == Approx(8.839).epsilon(1e-4));
  CHECK(al.fisher * 1e5 == Approx(0.0205).epsilon(2e-3));
}

TEST_CASE("truncated and semi-infinite entropies differ by a constant") {
  // Both are ln xi + const; the offset is frozen from a 30-digit evaluation.
  for (double xi : {38.0, 230.0, 1600.0}) {
    CHECK(shannon_entropy_truncated(xi, 5.0) - shannon_entropy(xi) ==
          Approx(0.500916379698644).epsilon(1e-12));
  }
}

TEST_CASE("measures follow the coherence-length scaling laws") {
  for (double xi : kXiGrid) {
    for (double k : {2.0, 10.0}) {
      CHECK(shannon_entropy(k * xi) - shannon_entropy(xi) == Approx(std::log(k)).epsilon(1e-13));
      CHECK(fisher_information(k * xi) * k * k == Approx(fisher_information(xi)).epsilon(1e-14));
      CHECK(disequilibrium(k * xi) * k == Approx(disequilibrium(xi)).epsilon(1e-14));
    }
  }
}

TEST_CASE("measures at temperature") {
  const auto direct = measure_set(230.0);
  const auto at0 = measures_at_temperature(230.0, 3.72, 0.0, DistributionKind::semi_infinite());
  CHECK(at0.shannon == direct.shannon);
  CHECK(at0.fisher == direct.fisher);

  const auto half = measures_at_temperature(230.0, 3.72, 1.86, DistributionKind::semi_infinite());
  const auto ref = measure_set(230.0 * std::numbers::sqrt2);
  CHECK(half.shannon == Approx(ref.shannon).epsilon(1e-14));
  CHECK(half.fisher == Approx(ref.fisher).epsilon(1e-14));
  CHECK(half.disequilibrium == Approx(ref.disequilibrium).epsilon(1e-14));

  for (double t : {0.25, 0.5, 0.75}) {
    const auto m = measures_at_temperature(38.0, 9.25, t * 9.25, DistributionKind::semi_infinite());
    CHECK(m.fisher / fisher_information(38.0) == Approx(1.0 - t).epsilon(1e-12));
  }
  CHECK_THROWS_AS(measures_at_temperature(38.0, 9.25, 9.25, DistributionKind::semi_infinite()),
                  DivergenceError);
}

TEST_CASE("monotone temperature behaviour") {
  for (const auto& kind : {DistributionKind::semi_infinite(), DistributionKind::truncated(5.0)}) {
    MeasureSet prev = measures_at_temperature(93.0, 4.47, 0.0, kind);
    for (int i = 1; i < 200; ++i) {
      const double T = 4.47 * i / 200.0;
      const auto m = measures_at_temperature(93.0, 4.47, T, kind);
      CAPTURE(T);
      REQUIRE(m.shannon > prev.shannon);
      REQUIRE(m.fisher < prev.fisher);
      REQUIRE(m.disequilibrium < prev.disequilibrium);
      REQUIRE(m.complexity < prev.complexity);
      prev = m;
    }
  }
  const auto near = measures_at_temperature(93.0, 4.47, 4.47 * (1.0 - 1e-12),
                                            DistributionKind::semi_infinite());
  CHECK(near.complexity < 1e-3 * measure_set(93.0).complexity);
}

TEST_CASE("generalized measures: q -> 1 and q = 2") {
  const auto one = generalized_set(230.0, 1.0);
  CHECK(one.tsallis == Approx(6.398).epsilon(1e-4));
  REQUIRE(one.fisher_q.has_value());
  CHECK(*one.fisher_q * 1e5 == Approx(1.260).epsilon(4e-4));

  const double S = shannon_entropy(230.0);
  const double I = fisher_information(230.0);
  const double tq = 0.5 * (tsallis_entropy(230.0, 1.0 - 1e-4) + tsallis_entropy(230.0, 1.0 + 1e-4));
  const double iq = 0.5 * (*fisher_q(230.0, 1.0 - 1e-4) + *fisher_q(230.0, 1.0 + 1e-4));
  // The symmetric mean is off by O(h^2 (2 ln xi)^2).
  CHECK(rel(tq, S) <= 1e-5);
  CHECK(rel(iq, I) <= 1e-5);
  // Across the stitch the function stays continuous.
  CHECK(rel(tsallis_entropy(230.0, 1.0 + 2e-6), S) <= 1e-4);
  CHECK(rel(*fisher_q(230.0, 1.0 + 2e-6), I) <= 1e-4);

  const auto two = generalized_set(360.0, 2.0);
  CHECK(two.tsallis == Approx(1.0 - disequilibrium(360.0)).epsilon(1e-13));
  CHECK(two.tsallis == Approx(0.99869).epsilon(1e-5));
  CHECK_FALSE(two.fisher_q.has_value());
  CHECK(two.complexity_q == Approx(disequilibrium(360.0) * two.tsallis).epsilon(1e-15));

  const auto g = generalized_set(230.0, 0.97);
  CHECK(rel(g.tsallis, oracle::tsallis(230.0, 0.97)) <= 1e-8);
}

TEST_CASE("generalized measures match 30-digit reference values") {
  CHECK(tsallis_entropy(38.0, 0.8) == Approx(7.75243345626257).epsilon(1e-12));
  CHECK(*fisher_q(38.0, 0.8) == Approx(6.05463735543264e-05).epsilon(1e-12));
}

TEST_CASE("generalized measures: validity window") {
  CHECK_THROWS_AS(generalized_set(230.0, 2.5), DomainError);
  CHECK_THROWS_AS(generalized_set(230.0, 0.5), DomainError);
  CHECK_THROWS_AS(generalized_set(230.0, 0.2), DomainError);
  CHECK_NOTHROW(generalized_set(230.0, 0.5001));
  for (double q : {1.5, 1.51, 1.7, 2.0}) {
    CHECK_FALSE(generalized_set(230.0, q).fisher_q.has_value());
  }
  CHECK_THROWS_AS(fisher_q_closed_form(230.0, 1.5), PoleError);
  CHECK_THROWS_AS(fisher_q_closed_form(230.0, 2.0), PoleError);
  // Beyond the pole the closed form is only an analytic continuation.
  CHECK(fisher_q_closed_form(230.0, 1.7) < 0.0);
}

TEST_CASE("Tsallis entropy decreases with q") {
  for (double xi : {38.0, 1600.0}) {
    double prev = tsallis_entropy(xi, 0.51);
    for (int i = 1; i <= 149; ++i) {
      const double q = 0.51 + 0.01 * i;
      const double t = tsallis_entropy(xi, q);
      CAPTURE(q);
      REQUIRE(t < prev);
      prev = t;
    }
  }
}
