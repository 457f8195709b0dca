// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "macrocorr/channels.hpp"
#include "macrocorr/correlations.hpp"
#include "macrocorr/errors.hpp"
#include "macrocorr/linalg.hpp"
#include "../support/random_states.hpp"

using namespace macrocorr;
using macrocorr::testing::Rng;

namespace {

DensityMatrix bell() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return to_density(PureState(2, v));
}

DensityMatrix classical_pair() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  return DensityMatrix(2, m);
}

DensityMatrix diag1(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix(1, m);
}

const Bipartition kCut = Bipartition::micro_first(1, 2);

}  // namespace

TEST_CASE("partial trace") {
  SUBCASE("noiseless GHZ micro marginal is I/2") {
    const DensityMatrix rho = to_density(build_pure(StateFamily::ghz(2, 1)));
    const DensityMatrix micro = partial_trace(rho, {0});
    CHECK((micro.entries() - CMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("product |01>") {
    const DensityMatrix rho = to_density(basis_state({0, 1}));
    CHECK(partial_trace(rho, {0})(0, 0).real() == doctest::Approx(1.0));
    CHECK(partial_trace(rho, {1})(1, 1).real() == doctest::Approx(1.0));
  }
  SUBCASE("dephased Bell pair keeps I/2 marginals") {
    const DensityMatrix rho = apply_all(make_channel(ChannelKind::PhaseDamping, 0.4), bell());
    const DensityMatrix m = partial_trace(rho, {0});
    CHECK((m.entries() - CMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("keep order is honoured") {
    const DensityMatrix rho = to_density(basis_state({0, 1, 1}));
    CHECK(partial_trace(rho, {2, 0})(0b10, 0b10).real() == doctest::Approx(1.0));
  }
  SUBCASE("errors") {
    const DensityMatrix rho = bell();
    CHECK_THROWS_AS(partial_trace(rho, {}), DomainError);
    CHECK_THROWS_AS(partial_trace(rho, {0, 0}), DomainError);
    CHECK_THROWS_AS(partial_trace(rho, {2}), DomainError);
  }
}

TEST_CASE("partial transpose") {
  SUBCASE("Bell spectrum") {
    const auto ev = linalg::hermitian_eigenvalues(partial_transpose(bell(), kCut));
    CHECK(ev[0] == doctest::Approx(-0.5));
    for (int i = 1; i < 4; ++i) CHECK(ev[static_cast<std::size_t>(i)] == doctest::Approx(0.5));
  }
  SUBCASE("transpose on either side gives the same spectrum") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const DensityMatrix rho = macrocorr::testing::random_density(rng, 3);
      const Bipartition a = Bipartition::micro_first(1, 3);
      const Bipartition b({1, 2}, {0});
      const auto ea = linalg::hermitian_eigenvalues_dense(partial_transpose(rho, a));
      const auto eb = linalg::hermitian_eigenvalues_dense(partial_transpose(rho, b));
      for (std::size_t i = 0; i < ea.size(); ++i) CHECK(std::abs(ea[i] - eb[i]) < 1e-12);
    }
  }
  SUBCASE("bipartition size mismatch") {
    CHECK_THROWS_AS(partial_transpose(bell(), Bipartition::micro_first(1, 3)), DomainError);
  }
}

TEST_CASE("log-negativity") {
  CHECK(log_negativity(bell(), kCut) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negativity(bell(), kCut) == doctest::Approx(0.5));
  CHECK(log_negativity(to_density(basis_state({0, 1})), kCut) == 0.0);
  SUBCASE("frozen values") {
    const StateFamily hc = StateFamily::hcnm(6, 1, 1);
    const DensityMatrix a = noisy_state(hc, ChannelKind::PhaseDamping, 0.5);
    CHECK(log_negativity(a, Bipartition::for_family(hc)) == doctest::Approx(0.3219281).epsilon(1e-7));
    CHECK(log_negativity(a, Bipartition::for_family(hc)) == doctest::Approx(std::log2(1.25)).epsilon(1e-12));
    const StateFamily ghz = StateFamily::ghz(6, 1);
    const DensityMatrix b = noisy_state(ghz, ChannelKind::PhaseDamping, 0.5);
    CHECK(log_negativity(b, Bipartition::for_family(ghz)) ==
          doctest::Approx(std::log2(1.0 + std::pow(0.5, 7))).epsilon(1e-12));
    CHECK(log_negativity(b, Bipartition::for_family(ghz)) == doctest::Approx(0.0112273).epsilon(1e-6));
  }
  SUBCASE("PPT: random separable states report exactly zero") {
    Rng rng(1234);
    int nonzero = 0;
    for (int i = 0; i < 200; ++i) {
      const int micro = 1 + i % 2;
      const DensityMatrix rho = macrocorr::testing::random_separable(rng, micro, 2, 1 + i % 6);
      if (log_negativity(rho, Bipartition::micro_first(micro, micro + 2)) != 0.0) ++nonzero;
    }
    CHECK(nonzero == 0);
  }
}

TEST_CASE("entropies") {
  CHECK(von_neumann_entropy(to_density(basis_state({1, 0}))) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(diag1(0.5, 0.5)) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(diag1(0.25, 0.75)) == doctest::Approx(0.8112781).epsilon(1e-7));
  CHECK(linalg::entropy_bits({0.5, 0.5, -5e-11}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(linalg::entropy_bits({0.5, 0.5, -1e-9}), InvariantViolation);
}

TEST_CASE("mutual information") {
  CHECK(std::abs(mutual_information(to_density(basis_state({0, 1})), kCut)) < 1e-12);
  CHECK(mutual_information(classical_pair(), kCut) == doctest::Approx(1.0));
  for (int N = 1; N <= 4; ++N) {
    for (int k = 1; k <= 2; ++k) {
      const StateFamily f = StateFamily::ghz(N, k);
      CHECK(mutual_information(to_density(build_pure(f)), Bipartition::for_family(f)) ==
            doctest::Approx(2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("measurement bases") {
  const MeasurementBasis b = bloch_basis(0.7, 1.9);
  CHECK(b.size() == 2);
  CMatrix sum = b.projector(0) + b.projector(1);
  CHECK((sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((b.projector(0) * b.projector(1)).cwiseAbs().maxCoeff() < 1e-10);
  const MeasurementBasis pb = product_basis({0.3, 0.1, 2.0, 4.0});
  CHECK(pb.size() == 4);
  sum = CMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < 4; ++i) sum += pb.projector(i);
  CHECK((sum - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(product_basis({0.3}), DomainError);
}

TEST_CASE("conditional entropy and discord examples") {
  SUBCASE("Bell: Schmidt-basis measurement leaves the macro side pure") {
    CHECK(std::abs(min_conditional_entropy(bell(), kCut).value) < 1e-9);
    CHECK(discord(bell(), kCut).discord == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("product state: conditional entropy is S(rho_M)") {
    const CMatrix m = Eigen::kroneckerProduct(diag1(0.3, 0.7).entries(), diag1(0.25, 0.75).entries());
    const DensityMatrix rho(2, m);
    CHECK(min_conditional_entropy(rho, kCut).value == doctest::Approx(0.8112781).epsilon(1e-7));
    CHECK(discord(rho, kCut).discord == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("classically correlated state") {
    const DensityMatrix rho = classical_pair();
    CHECK(std::abs(conditional_entropy(rho, kCut, bloch_basis(0.0, 0.0))) < 1e-12);
    CHECK(std::abs(min_conditional_entropy(rho, kCut).value) < 1e-9);
    CHECK(std::abs(discord(rho, kCut).discord) < 1e-9);
  }
  SUBCASE("noiseless cat states carry one bit of discord") {
    for (const auto& f : {StateFamily::ghz(6, 1), StateFamily::hcnm(6, 1, 1), StateFamily::hcnm(4, 2, 2),
                          StateFamily::ghz(3, 2)}) {
      CHECK(discord(to_density(build_pure(f)), Bipartition::for_family(f)).discord ==
            doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("fully damped H_C has no discord") {
    const StateFamily f = StateFamily::hcnm(6, 1, 1);
    CHECK(std::abs(discord(noisy_state(f, ChannelKind::AmplitudeDamping, 1.0), Bipartition::for_family(f)).discord) <
          1e-9);
  }
  SUBCASE("result bookkeeping") {
    const StateFamily f = StateFamily::hcnm(3, 1, 1);
    const DiscordResult r = discord(noisy_state(f, ChannelKind::Depolarizing, 0.3), Bipartition::for_family(f));
    CHECK(std::abs(r.discord - (r.mutual_information - r.classical_correlation)) < 1e-10);
    CHECK(r.classical_correlation >= 0.0);
    CHECK(r.classical_correlation <= r.mutual_information + 1e-9);
    CHECK(r.optimizer_evals > 64 * 64);
    CHECK(r.optimizer_basis.angles.size() == 2);
  }
  SUBCASE("more than two micro qubits is unsupported") {
    const StateFamily f = StateFamily::ghz(2, 3);
    CHECK_THROWS_AS(discord(to_density(build_pure(f)), Bipartition::for_family(f)), UnsupportedError);
  }
  SUBCASE("basis size mismatch") {
    const StateFamily f = StateFamily::ghz(2, 2);
    CHECK_THROWS_AS(conditional_entropy(to_density(build_pure(f)), Bipartition::for_family(f), bloch_basis(0, 0)),
                    DomainError);
  }
}

TEST_CASE("discord is deterministic for a fixed seed") {
  const StateFamily f = StateFamily::hcnm(4, 2, 1);
  const DensityMatrix rho = noisy_state(f, ChannelKind::Depolarizing, 0.2);
  const auto a = discord(rho, Bipartition::for_family(f));
  const auto b = discord(rho, Bipartition::for_family(f));
  CHECK(a.discord == b.discord);
  CHECK(a.optimizer_evals == b.optimizer_evals);
}

TEST_CASE("optimizer is not beaten by random bases (k = 1)") {
  Rng rng(99);
  const std::vector<std::pair<StateFamily, ChannelKind>> corpus = {
      {StateFamily::hcnm(3, 1, 1), ChannelKind::PhaseDamping},
      {StateFamily::hcnm(3, 2, 1), ChannelKind::Depolarizing},
      {StateFamily::ghz(3, 1), ChannelKind::AmplitudeDamping},
      {StateFamily::g_state(3), ChannelKind::AmplitudeDamping},
  };
  for (const auto& [f, kind] : corpus) {
    const DensityMatrix rho = noisy_state(f, kind, 0.35);
    const Bipartition part = Bipartition::for_family(f);
    const double best = min_conditional_entropy(rho, part).value;
    double random_best = 1e9;
    for (int i = 0; i < 1000; ++i) {
      random_best = std::min(random_best,
                             conditional_entropy(rho, part, macrocorr::testing::random_product_basis(rng, 1)));
    }
    CHECK(best <= random_best + 1e-9);
  }
}

TEST_CASE("optimizer is not beaten by random product bases (k = 2)") {
  Rng rng(7);
  const StateFamily f = StateFamily::hcnm(3, 1, 2);
  const DensityMatrix rho = noisy_state(f, ChannelKind::Depolarizing, 0.25);
  const Bipartition part = Bipartition::for_family(f);
  const double best = min_conditional_entropy(rho, part).value;
  for (int i = 0; i < 500; ++i) {
    CHECK(best <= conditional_entropy(rho, part, macrocorr::testing::random_product_basis(rng, 2)) + 1e-9);
  }
}

TEST_CASE("local-unitary invariance") {
  Rng rng(42);
  const StateFamily f = StateFamily::hcnm(3, 1, 1);
  const Bipartition part = Bipartition::for_family(f);
  const DensityMatrix rho = noisy_state(f, ChannelKind::AmplitudeDamping, 0.3);
  const double ln0 = log_negativity(rho, part);
  const double d0 = discord(rho, part).discord;
  for (int q = 0; q < f.num_qubits(); ++q) {
    const DensityMatrix r = macrocorr::testing::rotate_qubit(rho, macrocorr::testing::random_unitary(rng), q);
    CHECK(std::abs(log_negativity(r, part) - ln0) < 1e-8);
    CHECK(std::abs(discord(r, part).discord - d0) < 1e-8);
  }
}

TEST_CASE("block eigen-solver agrees with a dense solve") {
  Rng rng(8);
  for (const auto& f : {StateFamily::hcnm(4, 2, 1), StateFamily::g_state(4), StateFamily::ghz(3, 2)}) {
    for (ChannelKind kind : {ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing}) {
      const CMatrix pt = partial_transpose(noisy_state(f, kind, 0.3), Bipartition::for_family(f));
      const auto a = linalg::hermitian_eigenvalues(pt);
      const auto b = linalg::hermitian_eigenvalues_dense(pt);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    }
  }
  const DensityMatrix rho = macrocorr::testing::random_density(rng, 3);
  const auto a = linalg::hermitian_eigenvalues(rho.entries());
  const auto b = linalg::hermitian_eigenvalues_dense(rho.entries());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
}

TEST_CASE("qubit permutation") {
  const DensityMatrix rho = to_density(basis_state({1, 0, 0}));
  const CMatrix p = linalg::permute_qubits(rho.entries(), 3, {2, 0, 1});
  CHECK(p(0b010, 0b010).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(linalg::permute_qubits(rho.entries(), 3, {0, 1}), DomainError);
}
