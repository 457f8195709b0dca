// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "macrocorr/channels.hpp"
#include "macrocorr/states.hpp"

namespace macrocorr {

// Closed-form partial-transpose eigenvalues for noisy cat states. Each
// formula is the negative-eigenvalue candidate(s) of the block of rho^{T_micro}
// that carries the entanglement; everything else in the spectrum is
// non-negative.

enum class FormulaId {
  HcnmPhaseDamping,        // -(1/2) gamma^(k+m)
  HcnmAmplitudeDamping,    // (1/4)(p^k + p^m - sqrt((p^k + p^m)^2 + 4 gamma^(k+m)))
  GhzPhaseDamping,         // -(1/2) gamma^(N+k)
  GhzAmplitudeDamping,     // 2x2 block, one candidate
  GhzDepolarizing,         // (1/2)(alpha^k beta^N + alpha^N beta^k - gamma^(N+k))
  GStatePhaseDamping,      // three families, multiplicities N-1, N-1, 1 (even N)
  GStateAmplitudeDamping,  // lambda_G1, lambda_G2
  HcnmNMinus1Depolarizing, // two (N+1)x(N+1) blocks, k = 1
};

std::string to_string(FormulaId id);

/// Shorthand shared by every formula: alpha = 1 - p/2, beta = p/2, gamma = 1 - p.
struct NoiseSymbols {
  double p;
  double alpha;
  double beta;
  double gamma;

  static NoiseSymbols at(double p) { return {p, 1.0 - p / 2.0, p / 2.0, 1.0 - p}; }
};

struct AnalyticCase {
  StateFamily family;
  ChannelKind channel;
  FormulaId formula_id;
  // Human-readable list of corrections applied to the reference expression
  // for this case; empty when the expression is used verbatim.
  std::vector<std::string> corrections;
};

/// Which version of an expression to evaluate. AsPrinted reproduces the
/// reference symbols exactly, errors included; it exists so the corrections
/// can be shown to matter.
enum class Transcription { Corrected, AsPrinted };

bool has_formula(const StateFamily& family, ChannelKind channel);

/// Throws NoFormulaError for unsupported pairs (HCNm under depolarizing
/// other than m = N-1, k = 1; Dicke; product; G under depolarizing; G with
/// N < 3; G under phase damping with odd N).
AnalyticCase make_analytic_case(const StateFamily& family, ChannelKind channel);

struct AnalyticEigenvalue {
  double value;
  int multiplicity;
};

std::vector<AnalyticEigenvalue> analytic_eigenvalues(const AnalyticCase& c, double p,
                                                     Transcription t = Transcription::Corrected);

/// log2(2 sum_i mult_i |min(0, lambda_i)| + 1).
double analytic_log_negativity(const AnalyticCase& c, double p,
                               Transcription t = Transcription::Corrected);

struct ValidationPoint {
  double p;
  double analytic;
  double analytic_as_printed;
  double dense;
};

struct ValidationReport {
  AnalyticCase analytic_case;
  std::vector<ValidationPoint> points;
  double max_deviation = 0.0;
  double max_deviation_as_printed = 0.0;
};

/// Dense log-negativity of the noisy state at every p, against both
/// transcriptions of the closed form. Throws ResourceError above 14 qubits.
ValidationReport validate_against_dense(const AnalyticCase& c, std::span<const double> p_grid);

}  // namespace macrocorr
