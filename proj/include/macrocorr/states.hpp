// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace macrocorr {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Basis ordering convention used everywhere in the library: qubit 0 is the
// most significant bit of a computational-basis index, so |q0 q1 ... q(n-1)>
// reads left to right exactly like a ket.
inline std::size_t qubit_bit(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

/// Normalized state vector on `num_qubits` qubits.
class PureState {
 public:
  PureState(int num_qubits, CVector amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

 private:
  int num_qubits_;
  CVector amplitudes_;
};

/// Dense density matrix. Construction checks shape, Hermiticity (1e-12) and
/// unit trace (1e-12); positivity is an eigenvalue computation and is only
/// checked on request through `check_positive`.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, CMatrix entries);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  double trace() const { return entries_.trace().real(); }
  double purity() const;

  // Throws InvariantViolation when the smallest eigenvalue is below -tol.
  void check_positive(double tol = 1e-10) const;

 private:
  int num_qubits_;
  CMatrix entries_;
};

enum class StateKind { HCNm, GHZ, GState, Dicke, BasisProduct };

std::string to_string(StateKind kind);

/// One of the named state families.
///
///   HCNm          (|0^k>|W_N^m> + |1^k>|0^N>)/sqrt2 on k + N qubits
///   GHZ           (|0^(k+N)> + |1^(k+N)>)/sqrt2
///   GState        (|0>|W_N^1> + |1> X^N |W_N^1>)/sqrt2, k fixed to 1
///   Dicke         |W_N^m> on N qubits; the first k qubits form the micro side
///   BasisProduct  |0^k>|1^m 0^(N-m)>, a product reference state
///
/// m = N is accepted for HCNm; `ghz_equivalent_boundary()` flags it.
struct StateFamily {
  StateKind kind = StateKind::HCNm;
  int N = 1;
  int m = 1;
  int k = 1;

  static StateFamily hcnm(int N, int m, int k = 1) { return {StateKind::HCNm, N, m, k}; }
  static StateFamily ghz(int N, int k = 1) { return {StateKind::GHZ, N, 0, k}; }
  static StateFamily g_state(int N) { return {StateKind::GState, N, 1, 1}; }
  static StateFamily dicke(int N, int m, int k = 1) { return {StateKind::Dicke, N, m, k}; }
  static StateFamily basis_product(int N, int m, int k = 1) { return {StateKind::BasisProduct, N, m, k}; }

  int num_qubits() const;
  int micro_qubits() const { return kind == StateKind::GState ? 1 : k; }
  bool ghz_equivalent_boundary() const { return kind == StateKind::HCNm && m == N; }

  // Throws DomainError on parameters outside the family's definition.
  void validate() const;

  std::string label() const;

  friend bool operator==(const StateFamily&, const StateFamily&) = default;
};

/// Split of the register into a microscopic and a macroscopic part.
class Bipartition {
 public:
  Bipartition(std::vector<int> micro, std::vector<int> macro);

  // micro = {0..k-1}, macro = {k..n-1}.
  static Bipartition micro_first(int k, int num_qubits);
  static Bipartition for_family(const StateFamily& family);

  const std::vector<int>& micro() const { return micro_; }
  const std::vector<int>& macro() const { return macro_; }
  int num_qubits() const { return static_cast<int>(micro_.size() + macro_.size()); }

 private:
  std::vector<int> micro_;
  std::vector<int> macro_;
};

/// Equal superposition of the C(N, m) weight-m basis states of N qubits.
PureState dicke(int N, int m);

PureState build_pure(const StateFamily& family);

DensityMatrix to_density(const PureState& psi);

/// |psi> for an explicit bit string, e.g. {0, 1, 1}.
PureState basis_state(const std::vector<int>& bits);

/// Kronecker product a (x) b, with a on the leading qubits.
PureState tensor(const PureState& a, const PureState& b);

}  // namespace macrocorr
