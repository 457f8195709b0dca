// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace macrocorr {

// Invalid parameters: out-of-range excitation counts, qubit indices,
// malformed bipartitions, p outside [0, 1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A valid request the library does not implement, e.g. discord with more
// than two measured qubits.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No closed-form eigenvalue expression exists for a (family, channel) pair.
class NoFormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The system is too large for dense simulation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical result broke a density-matrix invariant beyond tolerance.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace macrocorr
