// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "macrocorr/errors.hpp"

namespace macrocorr {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr int kMaxQubits = 24;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw DomainError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(num_qubits));
  }
}

// Applies X to every qubit: index -> bitwise complement.
CVector flip_all(const CVector& v, int num_qubits) {
  const std::size_t mask = (std::size_t{1} << num_qubits) - 1;
  CVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(static_cast<std::size_t>(i) ^ mask)) = v(i);
  }
  return out;
}

PureState cat(const PureState& zero_branch, const PureState& one_branch) {
  return PureState(zero_branch.num_qubits(),
                   (zero_branch.amplitudes() + one_branch.amplitudes()) / std::sqrt(2.0));
}

PureState all_same(int num_qubits, int bit) {
  return basis_state(std::vector<int>(static_cast<std::size_t>(num_qubits), bit));
}

}  // namespace

PureState::PureState(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits_);
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << num_qubits_)) {
    throw DomainError("amplitude vector length must be 2^num_qubits");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "state is not normalized: |psi|^2 = " << norm2;
    throw InvariantViolation(msg.str());
  }
}

DensityMatrix::DensityMatrix(int num_qubits, CMatrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  check_qubit_count(num_qubits_);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits_);
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DomainError("density matrix must be 2^n x 2^n");
  }
  double asym = 0.0;
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      asym = std::max(asym, std::abs(entries_(r, c) - std::conj(entries_(c, r))));
    }
  }
  if (asym > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max |rho - rho^dagger| = " << asym;
    throw InvariantViolation(msg.str());
  }
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr;
    throw InvariantViolation(msg.str());
  }
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

void DensityMatrix::check_positive(double tol) const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << min_eig;
    throw InvariantViolation(msg.str());
  }
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::HCNm: return "hcnm";
    case StateKind::GHZ: return "ghz";
    case StateKind::GState: return "g";
    case StateKind::Dicke: return "dicke";
    case StateKind::BasisProduct: return "product";
  }
  return "unknown";
}

int StateFamily::num_qubits() const {
  switch (kind) {
    case StateKind::HCNm:
    case StateKind::GHZ:
    case StateKind::BasisProduct: return N + k;
    case StateKind::GState: return N + 1;
    case StateKind::Dicke: return N;
  }
  return 0;
}

void StateFamily::validate() const {
  auto fail = [this](const std::string& why) {
    throw DomainError(label() + ": " + why);
  };
  if (N < 1) fail("N must be positive");
  switch (kind) {
    case StateKind::HCNm:
      if (k < 1) fail("k must be at least 1");
      if (m < 1 || m > N) fail("m must satisfy 1 <= m <= N");
      break;
    case StateKind::GHZ:
      if (k < 1) fail("k must be at least 1");
      break;
    case StateKind::GState:
      if (N < 2) fail("the G state needs N >= 2");
      if (k != 1) fail("the G state has exactly one micro qubit");
      break;
    case StateKind::Dicke:
      if (m < 0 || m > N) fail("m must satisfy 0 <= m <= N");
      if (k < 1 || k >= N) fail("micro part must satisfy 1 <= k < N");
      break;
    case StateKind::BasisProduct:
      if (k < 1) fail("k must be at least 1");
      if (m < 0 || m > N) fail("m must satisfy 0 <= m <= N");
      break;
  }
  check_qubit_count(num_qubits());
}

std::string StateFamily::label() const {
  std::ostringstream out;
  out << to_string(kind) << "(N=" << N;
  if (kind == StateKind::HCNm || kind == StateKind::Dicke || kind == StateKind::BasisProduct) {
    out << ",m=" << m;
  }
  out << ",k=" << micro_qubits() << ")";
  return out.str();
}

Bipartition::Bipartition(std::vector<int> micro, std::vector<int> macro)
    : micro_(std::move(micro)), macro_(std::move(macro)) {
  if (micro_.empty() || macro_.empty()) {
    throw DomainError("bipartition needs non-empty micro and macro parts");
  }
  std::vector<int> all = micro_;
  all.insert(all.end(), macro_.begin(), macro_.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) {
      throw DomainError("bipartition must cover qubits 0..n-1 exactly once");
    }
  }
}

Bipartition Bipartition::micro_first(int k, int num_qubits) {
  if (k < 1 || k >= num_qubits) {
    throw DomainError("micro part must satisfy 1 <= k < num_qubits");
  }
  std::vector<int> micro(static_cast<std::size_t>(k));
  std::vector<int> macro(static_cast<std::size_t>(num_qubits - k));
  std::iota(micro.begin(), micro.end(), 0);
  std::iota(macro.begin(), macro.end(), k);
  return Bipartition(std::move(micro), std::move(macro));
}

Bipartition Bipartition::for_family(const StateFamily& family) {
  return micro_first(family.micro_qubits(), family.num_qubits());
}

PureState dicke(int N, int m) {
  check_qubit_count(N);
  if (m < 0 || m > N) {
    throw DomainError("dicke: excitation count " + std::to_string(m) + " outside [0, " +
                      std::to_string(N) + "]");
  }
  const std::size_t dim = std::size_t{1} << N;
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  std::size_t count = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::popcount(i) == m) {
      v(static_cast<Eigen::Index>(i)) = 1.0;
      ++count;
    }
  }
  v /= std::sqrt(static_cast<double>(count));
  return PureState(N, std::move(v));
}

PureState basis_state(const std::vector<int>& bits) {
  const int n = static_cast<int>(bits.size());
  check_qubit_count(n);
  std::size_t index = 0;
  for (int q = 0; q < n; ++q) {
    if (bits[static_cast<std::size_t>(q)] != 0 && bits[static_cast<std::size_t>(q)] != 1) {
      throw DomainError("basis_state: bits must be 0 or 1");
    }
    if (bits[static_cast<std::size_t>(q)] == 1) index |= qubit_bit(n, q);
  }
  CVector v = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n, std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
  const int n = a.num_qubits() + b.num_qubits();
  check_qubit_count(n);
  CVector v(static_cast<Eigen::Index>(a.dim() * b.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    v.segment(static_cast<Eigen::Index>(i * b.dim()), static_cast<Eigen::Index>(b.dim())) =
        a[i] * b.amplitudes();
  }
  // Renormalize away the rounding of the product.
  v /= v.norm();
  return PureState(n, std::move(v));
}

PureState build_pure(const StateFamily& family) {
  family.validate();
  const int N = family.N;
  const int k = family.micro_qubits();
  switch (family.kind) {
    case StateKind::HCNm:
      return cat(tensor(all_same(k, 0), dicke(N, family.m)),
                 tensor(all_same(k, 1), all_same(N, 0)));
    case StateKind::GHZ:
      return cat(all_same(k + N, 0), all_same(k + N, 1));
    case StateKind::GState: {
      const PureState w = dicke(N, 1);
      const PureState w_flipped(N, flip_all(w.amplitudes(), N));
      return cat(tensor(all_same(1, 0), w), tensor(all_same(1, 1), w_flipped));
    }
    case StateKind::Dicke:
      return dicke(N, family.m);
    case StateKind::BasisProduct: {
      std::vector<int> bits(static_cast<std::size_t>(k + N), 0);
      for (int j = 0; j < family.m; ++j) bits[static_cast<std::size_t>(k + j)] = 1;
      return basis_state(bits);
    }
  }
  throw DomainError("unknown state family");
}

DensityMatrix to_density(const PureState& psi) {
  CMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(psi.num_qubits(), std::move(rho));
}

}  // namespace macrocorr
