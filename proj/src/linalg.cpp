// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "macrocorr/errors.hpp"

namespace macrocorr::linalg {

namespace {

constexpr double kClipTol = 1e-10;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<double> hermitian_eigenvalues_dense(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  DisjointSets sets(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < c; ++r) {
      if (m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) != Complex(0.0, 0.0)) {
        sets.unite(r, c);
      }
    }
  }

  std::vector<std::vector<Eigen::Index>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[sets.find(i)].push_back(static_cast<Eigen::Index>(i));

  std::vector<double> out;
  out.reserve(n);
  for (const auto& idx : blocks) {
    if (idx.empty()) continue;
    if (idx.size() == 1) {
      out.push_back(m(idx[0], idx[0]).real());
      continue;
    }
    const auto size = static_cast<Eigen::Index>(idx.size());
    CMatrix block(size, size);
    for (Eigen::Index c = 0; c < size; ++c)
      for (Eigen::Index r = 0; r < size; ++r) block(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    const auto ev = hermitian_eigenvalues_dense(block);
    out.insert(out.end(), ev.begin(), ev.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double entropy_bits(const std::vector<double>& eigenvalues) {
  double h = 0.0;
  for (double x : eigenvalues) {
    if (x < -kClipTol) {
      std::ostringstream msg;
      msg << "entropy of an operator with eigenvalue " << x;
      throw InvariantViolation(msg.str());
    }
    x = std::clamp(x, 0.0, 1.0);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

CMatrix permute_qubits(const CMatrix& m, int num_qubits, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != num_qubits) {
    throw DomainError("qubit permutation has wrong length");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  // new index bit for position i is old bit order[i].
  std::vector<std::size_t> map(dim);
  for (std::size_t old_index = 0; old_index < dim; ++old_index) {
    std::size_t new_index = 0;
    for (int i = 0; i < num_qubits; ++i) {
      if (old_index & qubit_bit(num_qubits, order[static_cast<std::size_t>(i)])) {
        new_index |= qubit_bit(num_qubits, i);
      }
    }
    map[old_index] = new_index;
  }
  CMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r)
      out(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c])) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

}  // namespace macrocorr::linalg
