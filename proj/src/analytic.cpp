// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "macrocorr/correlations.hpp"
#include "macrocorr/errors.hpp"

namespace macrocorr {

namespace {

constexpr int kMaxDenseQubits = 14;

double ipow(double x, int e) { return std::pow(x, e); }

// Smaller eigenvalue of (1/2)[[x, y], [y, z]] scaled by `scale`:
// scale * (x + z - sqrt((x - z)^2 + 4 y^2)).
double lower_root(double scale, double x, double z, double four_y2) {
  return scale * (x + z - std::sqrt((z - x) * (z - x) + four_y2));
}

std::vector<AnalyticEigenvalue> hcnm_phase(const StateFamily& f, const NoiseSymbols& s) {
  return {{-0.5 * ipow(s.gamma, f.k + f.m), 1}};
}

std::vector<AnalyticEigenvalue> hcnm_amplitude(const StateFamily& f, const NoiseSymbols& s) {
  const double diag = ipow(s.p, f.k) + ipow(s.p, f.m);
  return {{lower_root(0.25, diag, 0.0, 4.0 * ipow(s.gamma, f.k + f.m)), 1}};
}

std::vector<AnalyticEigenvalue> ghz_phase(const StateFamily& f, const NoiseSymbols& s) {
  return {{-0.5 * ipow(1.0 - 2.0 * s.beta, f.N + f.k), 1}};
}

std::vector<AnalyticEigenvalue> ghz_amplitude(const StateFamily& f, const NoiseSymbols& s) {
  const int N = f.N, k = f.k;
  const double sum = ipow(s.p, k) * ipow(s.gamma, N) + ipow(s.p, N) * ipow(s.gamma, k);
  const double value =
      0.25 * (sum - std::sqrt(sum * sum + 4.0 * ipow(s.gamma, N + k) * (1.0 - ipow(s.p, N + k))));
  return {{value, 1}};
}

std::vector<AnalyticEigenvalue> ghz_depolarizing(const StateFamily& f, const NoiseSymbols& s) {
  const int N = f.N, k = f.k;
  const double a = ipow(s.alpha, k) * ipow(s.beta, N) + ipow(s.alpha, N) * ipow(s.beta, k);
  return {{0.5 * (a - ipow(s.gamma, N + k)), 1}};
}

std::vector<AnalyticEigenvalue> g_phase(const StateFamily& f, const NoiseSymbols& s) {
  const int N = f.N;
  const double g = s.gamma;
  const double scale = 1.0 / (2.0 * N);
  return {
      {scale * ipow(g, N - 1) * (g * g - 1.0), N - 1},
      {scale * (ipow(g, N - 1) - ipow(g, N + 1)), N - 1},
      {scale * (-(N - 1) * ipow(g, N - 1) - ipow(g, N + 1)), 1},
  };
}

std::vector<AnalyticEigenvalue> g_amplitude(const StateFamily& f, const NoiseSymbols& s, Transcription t) {
  const int N = f.N;
  const double n = N, p = s.p, g = s.gamma;

  // 2N x 2N block: W-branch rows couple to the X^N W branch.
  const double l1 = p * ipow(g, N - 1) / n;
  const double l2 = std::pow(g, (n + 1.0) / 2.0) / n;
  const double l3 = (n - 1.0) / n * g * g * ipow(p, N - 2);
  const double l4 = g * g * ipow(p, N - 2) / n;
  const double lambda1 = lower_root(0.25, n * l1, l3 + (n - 1.0) * l4, 4.0 * n * n * l2 * l2);

  // |1>|0^N> against the weight-(N-2) micro-0 states.
  const double a1 = ipow(p, N - 1) * g;
  const double b1 = 2.0 / n * std::pow(g, (n - 1.0) / 2.0) * p;
  double c1 = 2.0 / n * p * p * ipow(g, N - 2);
  double d1 = p * p * ipow(g, N - 2) / n;
  if (N == 3 && t == Transcription::Corrected) {
    // For N = 3 the weight-(N-2) states are the weight-1 states carrying
    // |W><W|, which adds gamma/N to the diagonal and the coupling.
    c1 += g / n;
    d1 += g / n;
  }
  const double lambda2 =
      lower_root(0.25, a1, c1 + (2.0 * n - 4.0) * d1, 2.0 * n * (n - 1.0) * b1 * b1);
  return {{lambda1, 1}, {lambda2, 1}};
}

std::vector<AnalyticEigenvalue> hcnm_n_minus_1_depolarizing(const StateFamily& f, const NoiseSymbols& s,
                                                           Transcription t) {
  const int N = f.N;
  const double n = N, al = s.alpha, be = s.beta, g = s.gamma;
  const bool printed = t == Transcription::AsPrinted;

  // Block coupling |0>|0^N> to |1>|W-bar_j>.
  const double a = be * ipow(al, N) + (printed ? 1.0 / n : 1.0) * al * al * ipow(be, N - 1);
  const double b = ipow(g, N) * al / std::sqrt(n);
  const double c = al * al * ipow(be, N - 1) + (be * ipow(al, N) + (n - 1.0) * ipow(be, 3) * ipow(al, N - 2)) / n;
  const double d = be * g * g * ipow(al, N - 2) / n;

  // Block coupling |1>|1^N> to |0>|e_j>.
  const double at = al * ipow(be, N) + be * be * ipow(al, N - 1);
  const double bt = be * ipow(g, N) / std::sqrt(n);
  const double ct = be * be * ipow(al, N - 1) + (al * ipow(be, N) + (n - 1.0) * ipow(al, 3) * ipow(be, N - 2)) / n;
  const double dt = printed ? be * g * g * ipow(al, N - 2) / n : al * g * g * ipow(be, N - 2) / n;

  const double lambda1 = lower_root(printed ? 0.5 : 0.25, a, c + (n - 1.0) * d, 4.0 * n * b * b);
  const double lambda2 = lower_root(0.25, at, ct + (n - 1.0) * dt, 4.0 * n * bt * bt);
  return {{lambda1, 1}, {lambda2, 1}};
}

}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::HcnmPhaseDamping: return "hcnm-lpdc";
    case FormulaId::HcnmAmplitudeDamping: return "hcnm-ladc";
    case FormulaId::GhzPhaseDamping: return "ghz-lpdc";
    case FormulaId::GhzAmplitudeDamping: return "ghz-ladc";
    case FormulaId::GhzDepolarizing: return "ghz-ldpc";
    case FormulaId::GStatePhaseDamping: return "g-lpdc";
    case FormulaId::GStateAmplitudeDamping: return "g-ladc";
    case FormulaId::HcnmNMinus1Depolarizing: return "hcn(n-1)-ldpc";
  }
  return "unknown";
}

bool has_formula(const StateFamily& family, ChannelKind channel) {
  try {
    make_analytic_case(family, channel);
    return true;
  } catch (const NoFormulaError&) {
    return false;
  }
}

AnalyticCase make_analytic_case(const StateFamily& family, ChannelKind channel) {
  family.validate();
  auto none = [&](const std::string& why) -> AnalyticCase {
    throw NoFormulaError("no closed form for " + family.label() + " under " + to_string(channel) +
                         ": " + why);
  };
  AnalyticCase c{family, channel, FormulaId::HcnmPhaseDamping, {}};
  switch (family.kind) {
    case StateKind::HCNm:
      if (channel == ChannelKind::PhaseDamping) {
        c.formula_id = FormulaId::HcnmPhaseDamping;
      } else if (channel == ChannelKind::AmplitudeDamping) {
        c.formula_id = FormulaId::HcnmAmplitudeDamping;
      } else if (family.m == family.N - 1 && family.k == 1 && family.N >= 2) {
        c.formula_id = FormulaId::HcnmNMinus1Depolarizing;
        c.corrections = {
            "lambda_1 prefactor 1/2 -> 1/4 (the block carries an overall 1/2)",
            "a = beta alpha^N + alpha^2 beta^(N-1) (printed with a spurious 1/N on the second term)",
            "d~ = (1/N) alpha gamma^2 beta^(N-2) (printed as a copy of d)",
        };
      } else {
        return none("only the m = N-1, k = 1 depolarizing case has a closed form");
      }
      break;
    case StateKind::GHZ:
      c.formula_id = channel == ChannelKind::PhaseDamping       ? FormulaId::GhzPhaseDamping
                     : channel == ChannelKind::AmplitudeDamping ? FormulaId::GhzAmplitudeDamping
                                                                : FormulaId::GhzDepolarizing;
      break;
    case StateKind::GState:
      if (family.N < 3) return none("the N = 2 G state is a product state");
      if (channel == ChannelKind::PhaseDamping) {
        if (family.N % 2 != 0) return none("the phase-damping block needs even N");
        c.formula_id = FormulaId::GStatePhaseDamping;
      } else if (channel == ChannelKind::AmplitudeDamping) {
        c.formula_id = FormulaId::GStateAmplitudeDamping;
        if (family.N == 3) {
          c.corrections = {"N = 3: c1 and d1 gain gamma/N from the overlapping |W><W| sector"};
        }
      } else {
        return none("depolarizing G state is numerical only");
      }
      break;
    case StateKind::Dicke:
    case StateKind::BasisProduct:
      return none("family has no closed form");
  }
  return c;
}

std::vector<AnalyticEigenvalue> analytic_eigenvalues(const AnalyticCase& c, double p, Transcription t) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  const NoiseSymbols s = NoiseSymbols::at(p);
  const StateFamily& f = c.family;
  switch (c.formula_id) {
    case FormulaId::HcnmPhaseDamping: return hcnm_phase(f, s);
    case FormulaId::HcnmAmplitudeDamping: return hcnm_amplitude(f, s);
    case FormulaId::GhzPhaseDamping: return ghz_phase(f, s);
    case FormulaId::GhzAmplitudeDamping: return ghz_amplitude(f, s);
    case FormulaId::GhzDepolarizing: return ghz_depolarizing(f, s);
    case FormulaId::GStatePhaseDamping: return g_phase(f, s);
    case FormulaId::GStateAmplitudeDamping: return g_amplitude(f, s, t);
    case FormulaId::HcnmNMinus1Depolarizing: return hcnm_n_minus_1_depolarizing(f, s, t);
  }
  throw NoFormulaError("unknown formula id");
}

double analytic_log_negativity(const AnalyticCase& c, double p, Transcription t) {
  double negativity = 0.0;
  for (const auto& e : analytic_eigenvalues(c, p, t)) {
    negativity += e.multiplicity * -std::min(0.0, e.value);
  }
  return std::log2(2.0 * negativity + 1.0);
}

ValidationReport validate_against_dense(const AnalyticCase& c, std::span<const double> p_grid) {
  if (c.family.num_qubits() > kMaxDenseQubits) {
    throw ResourceError("dense validation is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  ValidationReport report{c, {}, 0.0, 0.0};
  const Bipartition part = Bipartition::for_family(c.family);
  const DensityMatrix pure = to_density(build_pure(c.family));
  for (double p : p_grid) {
    const double dense = log_negativity(apply_all(make_channel(c.channel, p), pure), part);
    ValidationPoint pt{p, analytic_log_negativity(c, p), analytic_log_negativity(c, p, Transcription::AsPrinted),
                       dense};
    report.max_deviation = std::max(report.max_deviation, std::abs(pt.analytic - dense));
    report.max_deviation_as_printed =
        std::max(report.max_deviation_as_printed, std::abs(pt.analytic_as_printed - dense));
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace macrocorr
