// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "macrocorr/states.hpp"

namespace macrocorr {

/// Reduced state on `keep`, in the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Transpose on the micro qubits. The result is Hermitian with unit trace
/// but may have negative eigenvalues, so it is returned as a bare matrix.
CMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part);

/// Sum of |negative eigenvalues| of the micro partial transpose. Eigenvalues
/// above -1e-12 count as zero.
double negativity(const DensityMatrix& rho, const Bipartition& part);

/// log2(2 * negativity + 1), in ebits.
double log_negativity(const DensityMatrix& rho, const Bipartition& part);

/// -tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(micro) + S(macro) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho, const Bipartition& part);

/// Complete set of rank-1 orthogonal projectors |v_i><v_i| on the micro
/// register. `angles` holds (theta, phi) per measured qubit; bases that were
/// not built from angles leave it empty.
struct MeasurementBasis {
  std::vector<CVector> vectors;
  std::vector<double> angles;

  std::size_t size() const { return vectors.size(); }
  CMatrix projector(std::size_t i) const { return vectors[i] * vectors[i].adjoint(); }
};

/// Projective basis {|v>, |v_perp>} with |v> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
MeasurementBasis bloch_basis(double theta, double phi);

/// Tensor product of single-qubit Bloch bases; angles = (theta_0, phi_0, theta_1, phi_1, ...).
MeasurementBasis product_basis(const std::vector<double>& angles);

struct DiscordOptions {
  // k = 1: grid_points x grid_points seed grid over (theta, phi).
  int grid_points = 64;
  // k = 2: per-angle grid size for the four product-measurement angles.
  int grid_points_two_qubit = 8;
  // Best grid points handed to local refinement.
  int refine_starts = 3;
  // Extra uniformly random starting points, drawn from `seed`.
  int random_starts = 2;
  std::uint64_t seed = 0;
  int max_refine_rounds = 200;
  double improvement_tol = 1e-8;
  // Refinement stops once the compass step drops below this (radians).
  double min_step = 1e-7;
};

struct ConditionalEntropyResult {
  double value = 0.0;
  MeasurementBasis basis;
  int evaluations = 0;
};

/// sum_i p_i S(rho_macro|i) for one measurement on the micro register.
/// Outcomes with p_i < 1e-14 contribute nothing.
double conditional_entropy(const DensityMatrix& rho, const Bipartition& part,
                           const MeasurementBasis& basis);

/// Minimum of `conditional_entropy` over rank-1 projective measurements on
/// the micro register. One micro qubit: the full Bloch sphere. Two micro
/// qubits: products of single-qubit projective measurements only, so the
/// result is an upper bound on the unrestricted minimum. Throws
/// UnsupportedError for larger micro registers.
ConditionalEntropyResult min_conditional_entropy(const DensityMatrix& rho, const Bipartition& part,
                                                 const DiscordOptions& options = {});

struct DiscordResult {
  double discord = 0.0;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  MeasurementBasis optimizer_basis;
  int optimizer_evals = 0;
};

/// Quantum discord with the measurement on the micro side:
/// D = I - J, J = S(macro) - min_conditional_entropy.
DiscordResult discord(const DensityMatrix& rho, const Bipartition& part,
                      const DiscordOptions& options = {});

}  // namespace macrocorr
