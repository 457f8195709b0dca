// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/channels.hpp"

#include <cmath>

#include "macrocorr/errors.hpp"

namespace macrocorr {

namespace {

using Superop = Eigen::Matrix4cd;

// Superoperator acting on the row-major vectorization (m00, m01, m10, m11)
// of a 2x2 block: S = sum_i K_i (x) conj(K_i).
Superop superoperator(const KrausChannel& channel) {
  Superop s = Superop::Zero();
  for (const auto& k : channel.kraus_ops) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) s(2 * a + b, 2 * c + d) += k(a, c) * std::conj(k(b, d));
  }
  return s;
}

// In-place application on the full matrix. Every (row pair, column pair)
// differing only in `qubit` forms an independent 2x2 block.
void apply_in_place(const Superop& s, CMatrix& m, int num_qubits, int qubit) {
  const std::size_t bit = qubit_bit(num_qubits, qubit);
  const auto dim = static_cast<std::size_t>(m.rows());
  for (std::size_t c0 = 0; c0 < dim; ++c0) {
    if (c0 & bit) continue;
    const auto ci0 = static_cast<Eigen::Index>(c0);
    const auto ci1 = static_cast<Eigen::Index>(c0 | bit);
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
      if (r0 & bit) continue;
      const auto ri0 = static_cast<Eigen::Index>(r0);
      const auto ri1 = static_cast<Eigen::Index>(r0 | bit);
      const Complex v0 = m(ri0, ci0), v1 = m(ri0, ci1), v2 = m(ri1, ci0), v3 = m(ri1, ci1);
      m(ri0, ci0) = s(0, 0) * v0 + s(0, 1) * v1 + s(0, 2) * v2 + s(0, 3) * v3;
      m(ri0, ci1) = s(1, 0) * v0 + s(1, 1) * v1 + s(1, 2) * v2 + s(1, 3) * v3;
      m(ri1, ci0) = s(2, 0) * v0 + s(2, 1) * v1 + s(2, 2) * v2 + s(2, 3) * v3;
      m(ri1, ci1) = s(3, 0) * v0 + s(3, 1) * v1 + s(3, 2) * v2 + s(3, 3) * v3;
    }
  }
}

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseDamping: return "lpdc";
    case ChannelKind::AmplitudeDamping: return "ladc";
    case ChannelKind::Depolarizing: return "ldpc";
  }
  return "unknown";
}

ChannelKind parse_channel_kind(const std::string& name) {
  if (name == "lpdc" || name == "phase" || name == "pd") return ChannelKind::PhaseDamping;
  if (name == "ladc" || name == "amplitude" || name == "ad") return ChannelKind::AmplitudeDamping;
  if (name == "ldpc" || name == "depolarizing" || name == "dp") return ChannelKind::Depolarizing;
  throw DomainError("unknown channel '" + name + "' (expected lpdc, ladc or ldpc)");
}

double KrausChannel::completeness_error() const {
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& k : kraus_ops) sum += k.adjoint() * k;
  return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel make_channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("channel parameter p must lie in [0, 1], got " + std::to_string(p));
  }
  using M = Eigen::Matrix2cd;
  KrausChannel ch{kind, p, {}};
  switch (kind) {
    case ChannelKind::PhaseDamping: {
      M k1 = M::Zero(), k2 = M::Zero();
      k1(0, 0) = std::sqrt(p);
      k2(1, 1) = std::sqrt(p);
      ch.kraus_ops = {std::sqrt(1.0 - p) * M::Identity(), k1, k2};
      break;
    }
    case ChannelKind::AmplitudeDamping: {
      M k0 = M::Zero(), k1 = M::Zero();
      k0(0, 0) = 1.0;
      k0(1, 1) = std::sqrt(1.0 - p);
      k1(0, 1) = std::sqrt(p);
      ch.kraus_ops = {k0, k1};
      break;
    }
    case ChannelKind::Depolarizing: {
      const double pauli = depolarizing_pauli_probability(p);
      const double w = std::sqrt(pauli / 3.0);
      M x, y, z;
      x << 0, 1, 1, 0;
      y << 0, Complex(0, -1), Complex(0, 1), 0;
      z << 1, 0, 0, -1;
      ch.kraus_ops = {std::sqrt(1.0 - pauli) * M::Identity(), w * x, w * y, w * z};
      break;
    }
  }
  return ch;
}

DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, int qubit) {
  if (qubit < 0 || qubit >= rho.num_qubits()) {
    throw DomainError("qubit index " + std::to_string(qubit) + " out of range for " +
                      std::to_string(rho.num_qubits()) + " qubits");
  }
  CMatrix m = rho.entries();
  apply_in_place(superoperator(channel), m, rho.num_qubits(), qubit);
  return DensityMatrix(rho.num_qubits(), std::move(m));
}

DensityMatrix apply_all(const KrausChannel& channel, const DensityMatrix& rho) {
  const Superop s = superoperator(channel);
  CMatrix m = rho.entries();
  for (int q = 0; q < rho.num_qubits(); ++q) apply_in_place(s, m, rho.num_qubits(), q);
  return DensityMatrix(rho.num_qubits(), std::move(m));
}

DensityMatrix noisy_state(const StateFamily& family, ChannelKind kind, double p) {
  return apply_all(make_channel(kind, p), to_density(build_pure(family)));
}

}  // namespace macrocorr
