// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "macrocorr/errors.hpp"
#include "macrocorr/linalg.hpp"

namespace macrocorr {

namespace {

constexpr double kNegativeEigTol = 1e-12;
constexpr double kOutcomeTol = 1e-14;
constexpr double kSupportTol = 1e-14;
constexpr double kDiscordClip = 1e-9;

std::size_t mask_of(const std::vector<int>& qubits, int num_qubits) {
  std::size_t mask = 0;
  for (int q : qubits) mask |= qubit_bit(num_qubits, q);
  return mask;
}

// Full-register index bits for every index of a sub-register.
std::vector<std::size_t> embed_indices(const std::vector<int>& qubits, int num_qubits) {
  const int n = static_cast<int>(qubits.size());
  std::vector<std::size_t> out(std::size_t{1} << n);
  for (std::size_t local = 0; local < out.size(); ++local) {
    std::size_t full = 0;
    for (int i = 0; i < n; ++i) {
      if (local & qubit_bit(n, i)) full |= qubit_bit(num_qubits, qubits[static_cast<std::size_t>(i)]);
    }
    out[local] = full;
  }
  return out;
}

CMatrix reduce(const CMatrix& rho, int num_qubits, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const auto keep_idx = embed_indices(keep, num_qubits);
  const auto trace_idx = embed_indices(traced, num_qubits);
  const auto dk = static_cast<Eigen::Index>(keep_idx.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index b = 0; b < dk; ++b) {
    for (Eigen::Index a = 0; a < dk; ++a) {
      Complex sum = 0.0;
      for (std::size_t t : trace_idx) {
        sum += rho(static_cast<Eigen::Index>(keep_idx[static_cast<std::size_t>(a)] | t),
                   static_cast<Eigen::Index>(keep_idx[static_cast<std::size_t>(b)] | t));
      }
      out(a, b) = sum;
    }
  }
  return out;
}

void check_keep(const std::vector<int>& keep, int num_qubits) {
  if (keep.empty()) throw DomainError("partial_trace: keep list is empty");
  std::set<int> seen;
  for (int q : keep) {
    if (q < 0 || q >= num_qubits) throw DomainError("partial_trace: qubit index out of range");
    if (!seen.insert(q).second) throw DomainError("partial_trace: duplicate qubit index");
  }
}

void check_part(const DensityMatrix& rho, const Bipartition& part) {
  if (part.num_qubits() != rho.num_qubits()) {
    throw DomainError("bipartition covers " + std::to_string(part.num_qubits()) +
                      " qubits but the state has " + std::to_string(rho.num_qubits()));
  }
}

// Unnormalized entropy term H(sigma) + p log2 p = p S(sigma / p).
double weighted_conditional_entropy(const CMatrix& sigma) {
  const double p = sigma.trace().real();
  if (p < kOutcomeTol) return 0.0;
  auto ev = linalg::hermitian_eigenvalues_dense(sigma);
  double h = 0.0;
  for (double x : ev) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h + p * std::log2(p);
}

// Measured-side blocks R_ab = (<a| (x) I) rho (|b> (x) I), projected onto
// the support of rho_macro. Every post-measurement state is dominated by
// rho_macro, so nothing outside that support is lost.
class ConditionalEntropyEvaluator {
 public:
  ConditionalEntropyEvaluator(const DensityMatrix& rho, const Bipartition& part) {
    std::vector<int> order = part.micro();
    order.insert(order.end(), part.macro().begin(), part.macro().end());
    const CMatrix permuted = linalg::permute_qubits(rho.entries(), rho.num_qubits(), order);

    micro_dim_ = Eigen::Index{1} << part.micro().size();
    const Eigen::Index macro_dim = Eigen::Index{1} << part.macro().size();

    CMatrix macro_state = CMatrix::Zero(macro_dim, macro_dim);
    for (Eigen::Index a = 0; a < micro_dim_; ++a) {
      macro_state += permuted.block(a * macro_dim, a * macro_dim, macro_dim, macro_dim);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(macro_state);
    const double cutoff = kSupportTol * std::max(1.0, solver.eigenvalues().maxCoeff());
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < macro_dim; ++i) {
      if (solver.eigenvalues()(i) > cutoff) support.push_back(i);
    }
    CMatrix basis(macro_dim, static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
      basis.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(support[j]);
    }

    blocks_.resize(static_cast<std::size_t>(micro_dim_ * micro_dim_));
    for (Eigen::Index a = 0; a < micro_dim_; ++a) {
      for (Eigen::Index b = 0; b < micro_dim_; ++b) {
        blocks_[static_cast<std::size_t>(a * micro_dim_ + b)] =
            basis.adjoint() * permuted.block(a * macro_dim, b * macro_dim, macro_dim, macro_dim) *
            basis;
      }
    }
    reduced_macro_ = basis.adjoint() * macro_state * basis;
  }

  double operator()(const MeasurementBasis& basis) {
    ++evaluations_;
    double total = 0.0;
    CMatrix accumulated = CMatrix::Zero(reduced_macro_.rows(), reduced_macro_.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CMatrix sigma;
      if (i + 1 == basis.size()) {
        // Completeness: the last outcome is whatever the others left over.
        sigma = reduced_macro_ - accumulated;
      } else {
        sigma = post_measurement(basis.vectors[i]);
        accumulated += sigma;
      }
      total += weighted_conditional_entropy(sigma);
    }
    return total;
  }

  int evaluations() const { return evaluations_; }
  Eigen::Index micro_dim() const { return micro_dim_; }

 private:
  CMatrix post_measurement(const CVector& v) const {
    CMatrix sigma = CMatrix::Zero(reduced_macro_.rows(), reduced_macro_.cols());
    for (Eigen::Index a = 0; a < micro_dim_; ++a) {
      for (Eigen::Index b = 0; b < micro_dim_; ++b) {
        const Complex w = std::conj(v(a)) * v(b);
        if (w != Complex(0.0, 0.0)) sigma += w * blocks_[static_cast<std::size_t>(a * micro_dim_ + b)];
      }
    }
    return sigma;
  }

  Eigen::Index micro_dim_ = 0;
  std::vector<CMatrix> blocks_;
  CMatrix reduced_macro_;
  int evaluations_ = 0;
};

MeasurementBasis basis_from_angles(const std::vector<double>& angles) {
  return angles.size() == 2 ? bloch_basis(angles[0], angles[1]) : product_basis(angles);
}

struct Candidate {
  double value;
  std::vector<double> angles;
};

// Compass search: poll +-step along each angle, move on improvement,
// halve the step otherwise.
Candidate refine(ConditionalEntropyEvaluator& f, Candidate start, std::vector<double> step,
                 const DiscordOptions& options) {
  Candidate current = std::move(start);
  for (int round = 0; round < options.max_refine_rounds; ++round) {
    Candidate best = current;
    for (std::size_t d = 0; d < current.angles.size(); ++d) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> trial = current.angles;
        trial[d] += sign * step[d];
        const double value = f(basis_from_angles(trial));
        if (value < best.value) best = {value, std::move(trial)};
      }
    }
    const double improvement = current.value - best.value;
    if (improvement > 0.0) current = std::move(best);
    const double max_step = *std::max_element(step.begin(), step.end());
    if (improvement < options.improvement_tol) {
      if (max_step < options.min_step) break;
      for (double& s : step) s *= 0.5;
    }
  }
  return current;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  check_keep(keep, rho.num_qubits());
  CMatrix reduced = reduce(rho.entries(), rho.num_qubits(), keep);
  return DensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

CMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part) {
  check_part(rho, part);
  const std::size_t mask = mask_of(part.micro(), rho.num_qubits());
  const auto dim = rho.dim();
  CMatrix out(rho.entries().rows(), rho.entries().cols());
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) = rho(r, c);
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho, const Bipartition& part) {
  const auto ev = linalg::hermitian_eigenvalues(partial_transpose(rho, part));
  double sum = 0.0;
  for (double x : ev) {
    if (x < -kNegativeEigTol) sum -= x;
  }
  return sum;
}

double log_negativity(const DensityMatrix& rho, const Bipartition& part) {
  return std::log2(2.0 * negativity(rho, part) + 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return linalg::entropy_bits(linalg::hermitian_eigenvalues(rho.entries()));
}

double mutual_information(const DensityMatrix& rho, const Bipartition& part) {
  check_part(rho, part);
  return von_neumann_entropy(partial_trace(rho, part.micro())) +
         von_neumann_entropy(partial_trace(rho, part.macro())) - von_neumann_entropy(rho);
}

MeasurementBasis bloch_basis(double theta, double phi) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  CVector v(2), w(2);
  v << c, phase * s;
  w << -std::conj(phase) * s, c;
  return {{v, w}, {theta, phi}};
}

MeasurementBasis product_basis(const std::vector<double>& angles) {
  if (angles.empty() || angles.size() % 2 != 0) {
    throw DomainError("product_basis: need (theta, phi) per qubit");
  }
  MeasurementBasis out{{CVector::Ones(1)}, angles};
  for (std::size_t q = 0; q < angles.size(); q += 2) {
    const MeasurementBasis single = bloch_basis(angles[q], angles[q + 1]);
    std::vector<CVector> next;
    for (const auto& left : out.vectors) {
      for (const auto& right : single.vectors) {
        CVector v(left.size() * 2);
        for (Eigen::Index i = 0; i < left.size(); ++i) v.segment(2 * i, 2) = left(i) * right;
        next.push_back(std::move(v));
      }
    }
    out.vectors = std::move(next);
  }
  return out;
}

double conditional_entropy(const DensityMatrix& rho, const Bipartition& part,
                           const MeasurementBasis& basis) {
  check_part(rho, part);
  ConditionalEntropyEvaluator f(rho, part);
  if (static_cast<Eigen::Index>(basis.size()) != f.micro_dim()) {
    throw DomainError("measurement basis size does not match the micro register");
  }
  return f(basis);
}

ConditionalEntropyResult min_conditional_entropy(const DensityMatrix& rho, const Bipartition& part,
                                                 const DiscordOptions& options) {
  check_part(rho, part);
  const std::size_t k = part.micro().size();
  if (k != 1 && k != 2) {
    throw UnsupportedError("discord optimization supports 1 or 2 micro qubits, got " +
                           std::to_string(k));
  }
  ConditionalEntropyEvaluator f(rho, part);
  constexpr double pi = std::numbers::pi;

  const int g = k == 1 ? options.grid_points : options.grid_points_two_qubit;
  if (g < 2) throw DomainError("discord grid needs at least 2 points per angle");
  const double theta_step = pi / (g - 1);
  const double phi_step = 2.0 * pi / g;
  const std::size_t dims = 2 * k;

  // Seed grid: theta on [0, pi] inclusive, phi on [0, 2 pi).
  std::vector<Candidate> grid;
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= static_cast<std::size_t>(g);
  grid.reserve(total);
  std::vector<double> angles(dims);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t d = 0; d < dims; ++d) {
      const auto i = static_cast<double>(rest % static_cast<std::size_t>(g));
      rest /= static_cast<std::size_t>(g);
      angles[d] = d % 2 == 0 ? i * theta_step : i * phi_step;
    }
    grid.push_back({f(basis_from_angles(angles)), angles});
  }
  const auto starts = std::min<std::size_t>(static_cast<std::size_t>(std::max(options.refine_starts, 1)), grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  std::vector<double> step(dims);
  for (std::size_t d = 0; d < dims; ++d) step[d] = d % 2 == 0 ? theta_step : phi_step;

  Candidate best = grid.front();
  for (std::size_t s = 0; s < starts; ++s) {
    Candidate c = refine(f, grid[s], step, options);
    if (c.value < best.value) best = std::move(c);
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r < options.random_starts; ++r) {
    std::vector<double> a(dims);
    for (std::size_t d = 0; d < dims; d += 2) {
      a[d] = std::acos(1.0 - 2.0 * unit(rng));
      a[d + 1] = 2.0 * pi * unit(rng);
    }
    Candidate c = refine(f, {f(basis_from_angles(a)), a}, step, options);
    if (c.value < best.value) best = std::move(c);
  }

  return {best.value, basis_from_angles(best.angles), f.evaluations()};
}

DiscordResult discord(const DensityMatrix& rho, const Bipartition& part, const DiscordOptions& options) {
  const ConditionalEntropyResult cond = min_conditional_entropy(rho, part, options);
  const double s_micro = von_neumann_entropy(partial_trace(rho, part.micro()));
  const double s_macro = von_neumann_entropy(partial_trace(rho, part.macro()));
  const double s_total = von_neumann_entropy(rho);

  DiscordResult out;
  out.mutual_information = s_micro + s_macro - s_total;
  out.classical_correlation = s_macro - cond.value;
  if (out.classical_correlation < 0.0 && out.classical_correlation > -kDiscordClip) {
    out.classical_correlation = 0.0;
  }
  double d = out.mutual_information - out.classical_correlation;
  if (d < -kDiscordClip) {
    std::ostringstream msg;
    msg << "negative discord " << d;
    throw InvariantViolation(msg.str());
  }
  if (d < 0.0) {
    d = 0.0;
    out.classical_correlation = out.mutual_information;
  }
  out.discord = d;
  out.optimizer_basis = cond.basis;
  out.optimizer_evals = cond.evaluations;
  return out;
}

}  // namespace macrocorr
