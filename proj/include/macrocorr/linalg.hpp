// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "macrocorr/states.hpp"

namespace macrocorr::linalg {

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The matrix is first split into the connected components of its nonzero
/// pattern (entries that are exactly zero decouple), and each component is
/// diagonalized on its own. Noisy cat states have very sparse patterns, so
/// this keeps 2^12-dimensional spectra cheap; a dense matrix falls through to
/// a single solve.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Same, without the block split.
std::vector<double> hermitian_eigenvalues_dense(const CMatrix& m);

/// -sum x log2 x over the values, 0 log 0 = 0. Values in [-1e-10, 0) are
/// clipped to zero, more negative values throw InvariantViolation.
double entropy_bits(const std::vector<double>& eigenvalues);

/// Reorders qubits so that `order[i]` becomes qubit i.
CMatrix permute_qubits(const CMatrix& m, int num_qubits, const std::vector<int>& order);

}  // namespace macrocorr::linalg
