// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "macrocorr/states.hpp"

namespace macrocorr {

enum class ChannelKind { PhaseDamping, AmplitudeDamping, Depolarizing };

// Short CLI names: lpdc, ladc, ldpc.
std::string to_string(ChannelKind kind);
ChannelKind parse_channel_kind(const std::string& name);

/// Single-qubit Kraus map with parameter p in [0, 1].
///
/// PhaseDamping      {sqrt(1-p) I, sqrt(p)|0><0|, sqrt(p)|1><1|}
/// AmplitudeDamping  {[[1,0],[0,sqrt(1-p)]], [[0,sqrt(p)],[0,0]]}
/// Depolarizing      rho -> (1-p) rho + p I/2, written as the Pauli mixture
///                   with p' = 3p/4 so that p = 1 is fully depolarizing.
struct KrausChannel {
  ChannelKind kind;
  double p;
  std::vector<Eigen::Matrix2cd> kraus_ops;

  // sum_i K_i^dagger K_i - I, max-abs entry.
  double completeness_error() const;
};

KrausChannel make_channel(ChannelKind kind, double p);

/// Pauli-error probability p' of the depolarizing map for white-noise
/// parameter p.
inline double depolarizing_pauli_probability(double p) { return 0.75 * p; }

/// Applies the channel to one qubit: rho -> sum_i K_i rho K_i^dagger with
/// K_i acting on `qubit`.
DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, int qubit);

/// Applies the channel independently to every qubit.
DensityMatrix apply_all(const KrausChannel& channel, const DensityMatrix& rho);

/// build_pure -> to_density -> apply_all for one family and channel setting.
DensityMatrix noisy_state(const StateFamily& family, ChannelKind kind, double p);

}  // namespace macrocorr
