// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "macrocorr/analytic.hpp"
#include "macrocorr/errors.hpp"

using namespace macrocorr;

namespace {

std::vector<double> grid(int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(static_cast<double>(i) / (points - 1));
  return g;
}

double ln(const StateFamily& f, ChannelKind c, double p) {
  return analytic_log_negativity(make_analytic_case(f, c), p);
}

}  // namespace

TEST_CASE("formula coverage") {
  CHECK(has_formula(StateFamily::hcnm(5, 2, 1), ChannelKind::PhaseDamping));
  CHECK(has_formula(StateFamily::hcnm(5, 2, 2), ChannelKind::AmplitudeDamping));
  CHECK(has_formula(StateFamily::hcnm(5, 4, 1), ChannelKind::Depolarizing));
  CHECK_FALSE(has_formula(StateFamily::hcnm(5, 2, 1), ChannelKind::Depolarizing));
  CHECK_FALSE(has_formula(StateFamily::hcnm(5, 4, 2), ChannelKind::Depolarizing));
  CHECK(has_formula(StateFamily::ghz(5, 2), ChannelKind::Depolarizing));
  CHECK(has_formula(StateFamily::g_state(4), ChannelKind::PhaseDamping));
  CHECK_FALSE(has_formula(StateFamily::g_state(5), ChannelKind::PhaseDamping));
  CHECK(has_formula(StateFamily::g_state(5), ChannelKind::AmplitudeDamping));
  CHECK_FALSE(has_formula(StateFamily::g_state(2), ChannelKind::AmplitudeDamping));
  CHECK_FALSE(has_formula(StateFamily::g_state(4), ChannelKind::Depolarizing));
  CHECK_FALSE(has_formula(StateFamily::dicke(4, 2), ChannelKind::PhaseDamping));
  CHECK_THROWS_AS(make_analytic_case(StateFamily::g_state(5), ChannelKind::PhaseDamping), NoFormulaError);
  CHECK_THROWS_AS(make_analytic_case(StateFamily::hcnm(3, 5), ChannelKind::PhaseDamping), DomainError);
  CHECK_THROWS_AS(ln(StateFamily::ghz(3), ChannelKind::PhaseDamping, 1.5), DomainError);
}

TEST_CASE("worked values") {
  SUBCASE("H_C phase damping at p = 0.5 is log2(1.25) for every N") {
    for (int N = 2; N <= 20; ++N) {
      CHECK(ln(StateFamily::hcnm(N, 1, 1), ChannelKind::PhaseDamping, 0.5) ==
            doctest::Approx(std::log2(1.25)).epsilon(1e-14));
    }
  }
  SUBCASE("H_C amplitude damping, k = m = 1, p = 0.5") {
    // p^k + p^m = 1 and 4 gamma^2 = 1, so lambda = (1 - sqrt 2) / 4.
    const auto c = make_analytic_case(StateFamily::hcnm(6, 1, 1), ChannelKind::AmplitudeDamping);
    const double lambda = analytic_eigenvalues(c, 0.5).front().value;
    CHECK(lambda == doctest::Approx(-0.1035534).epsilon(1e-7));
    CHECK(analytic_log_negativity(c, 0.5) == doctest::Approx(0.2715533).epsilon(1e-7));
  }
  SUBCASE("GHZ phase damping") {
    CHECK(ln(StateFamily::ghz(6, 1), ChannelKind::PhaseDamping, 0.5) ==
          doctest::Approx(std::log2(1.0 + std::pow(0.5, 7))).epsilon(1e-14));
  }
  SUBCASE("GHZ depolarizing at p = 0") {
    for (int N = 1; N <= 8; ++N) {
      for (int k = 1; k <= 3; ++k) {
        const auto c = make_analytic_case(StateFamily::ghz(N, k), ChannelKind::Depolarizing);
        CHECK(analytic_eigenvalues(c, 0.0).front().value == doctest::Approx(-0.5));
        CHECK(analytic_log_negativity(c, 0.0) == doctest::Approx(1.0));
      }
    }
  }
  SUBCASE("G phase damping multiplicities") {
    const auto ev = analytic_eigenvalues(make_analytic_case(StateFamily::g_state(6), ChannelKind::PhaseDamping), 0.3);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0].multiplicity == 5);
    CHECK(ev[1].multiplicity == 5);
    CHECK(ev[2].multiplicity == 1);
  }
}

TEST_CASE("N-independence is structural for H_C under damping") {
  for (ChannelKind kind : {ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping}) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 2; ++k) {
        for (double p : grid(11)) {
          const double ref = ln(StateFamily::hcnm(m, m, k), kind, p);
          for (int N = m + 1; N <= 12; ++N) CHECK(ln(StateFamily::hcnm(N, m, k), kind, p) == ref);
        }
      }
    }
  }
}

TEST_CASE("boundary identities") {
  const std::vector<std::pair<StateFamily, ChannelKind>> cases = {
      {StateFamily::hcnm(5, 2, 1), ChannelKind::PhaseDamping},
      {StateFamily::hcnm(5, 2, 2), ChannelKind::AmplitudeDamping},
      {StateFamily::hcnm(5, 4, 1), ChannelKind::Depolarizing},
      {StateFamily::ghz(5, 1), ChannelKind::PhaseDamping},
      {StateFamily::ghz(5, 2), ChannelKind::AmplitudeDamping},
      {StateFamily::ghz(5, 1), ChannelKind::Depolarizing},
      {StateFamily::g_state(4), ChannelKind::PhaseDamping},
      {StateFamily::g_state(3), ChannelKind::AmplitudeDamping},
      {StateFamily::g_state(5), ChannelKind::AmplitudeDamping},
  };
  for (const auto& [f, kind] : cases) {
    CAPTURE(f.label());
    CHECK(ln(f, kind, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ln(f, kind, 1.0) == doctest::Approx(0.0));
  }
}

TEST_CASE("H_C at m = N matches GHZ under phase damping") {
  for (int N = 1; N <= 8; ++N) {
    for (int k = 1; k <= 3; ++k) {
      for (double p : grid(11)) {
        CHECK(ln(StateFamily::hcnm(N, N, k), ChannelKind::PhaseDamping, p) ==
              doctest::Approx(ln(StateFamily::ghz(N, k), ChannelKind::PhaseDamping, p)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("dense cross-checks") {
  const auto g11 = grid(11);
  SUBCASE("H_C phase damping N=6") {
    const auto r = validate_against_dense(make_analytic_case(StateFamily::hcnm(6, 1, 1), ChannelKind::PhaseDamping), g11);
    CHECK(r.max_deviation <= 1e-10);
    CHECK(r.points.size() == 11);
  }
  SUBCASE("GHZ amplitude damping N=6") {
    const auto r = validate_against_dense(make_analytic_case(StateFamily::ghz(6, 1), ChannelKind::AmplitudeDamping), g11);
    CHECK(r.max_deviation <= 1e-10);
  }
  SUBCASE("H_C^(N-1) depolarizing for N = 2..6") {
    for (int N = 2; N <= 6; ++N) {
      CAPTURE(N);
      const auto r =
          validate_against_dense(make_analytic_case(StateFamily::hcnm(N, N - 1, 1), ChannelKind::Depolarizing), g11);
      CHECK(r.max_deviation <= 1e-10);
    }
  }
  SUBCASE("G amplitude damping at N = 3 needs its correction") {
    const auto c = make_analytic_case(StateFamily::g_state(3), ChannelKind::AmplitudeDamping);
    CHECK(c.corrections.size() == 1);
    const auto r = validate_against_dense(c, g11);
    CHECK(r.max_deviation <= 1e-10);
    CHECK(r.max_deviation_as_printed > 1e-3);
  }
  SUBCASE("oversized systems are refused") {
    CHECK_THROWS_AS(
        validate_against_dense(make_analytic_case(StateFamily::ghz(14, 1), ChannelKind::PhaseDamping), g11),
        ResourceError);
  }
}

TEST_CASE("H_C^(N-1) depolarizing: printed prefactor overshoots at p = 0") {
  const auto c = make_analytic_case(StateFamily::hcnm(4, 3, 1), ChannelKind::Depolarizing);
  CHECK(c.corrections.size() == 3);
  const auto printed = analytic_eigenvalues(c, 0.0, Transcription::AsPrinted);
  const auto corrected = analytic_eigenvalues(c, 0.0);
  CHECK(printed[0].value == doctest::Approx(-1.0));
  CHECK(corrected[0].value == doctest::Approx(-0.5));
  const auto r = validate_against_dense(c, std::vector<double>{0.0});
  CHECK(r.points[0].dense == doctest::Approx(1.0));
  CHECK(r.points[0].analytic == doctest::Approx(1.0));
}
