// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "macrocorr/channels.hpp"
#include "macrocorr/correlations.hpp"
#include "macrocorr/errors.hpp"
#include "macrocorr/states.hpp"

namespace macrocorr {

enum class Engine { Dense, Analytic, Both };

std::string to_string(Engine engine);
Engine parse_engine(const std::string& name);
StateKind parse_state_kind(const std::string& name);

// Analytic and dense log-negativity disagree beyond tolerance.
class ValidationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The coarse scan before bisection found log-negativity increasing in p.
class NonMonotoneError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr int kMaxDenseQubits = 14;
inline constexpr double kEngineAgreementTol = 1e-9;

struct SweepConfig {
  StateFamily family = StateFamily::hcnm(6, 1, 1);
  ChannelKind channel = ChannelKind::PhaseDamping;
  double p_start = 0.0;
  double p_end = 1.0;
  int p_steps = 101;
  bool log_negativity = true;
  bool discord = false;
  Engine engine = Engine::Dense;
  DiscordOptions discord_options;
  // When false every record reports wall_time_s = 0, which makes the CSV a
  // pure function of the configuration.
  bool record_timing = true;

  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRecord {
  double p = 0.0;
  std::optional<double> log_negativity;
  std::optional<double> discord;
  Engine engine = Engine::Dense;
  double wall_time_s = 0.0;
  // Engine::Both only: the closed-form value next to the dense one.
  std::optional<double> analytic_log_negativity;
  std::vector<std::string> flags;
};

/// One record per grid point, ascending in p. Throws ResourceError when the
/// dense engine would need more than kMaxDenseQubits qubits.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Log-negativity of the noisy family at one p. Engine::Both evaluates both
/// routes, returns the dense value and throws ValidationMismatch when they
/// differ by more than kEngineAgreementTol.
double log_negativity_at(const StateFamily& family, ChannelKind channel, double p, Engine engine);

struct CriticalPoint {
  double p_star = 0.0;
  double threshold = 1e-4;
  double bracket_width = 0.0;
  Engine engine = Engine::Dense;
};

/// Smallest p (to within 1e-4) at which log-negativity drops to `threshold`
/// or below. A 21-point scan checks monotonicity first and brackets the
/// crossing; bisection then narrows the bracket.
CriticalPoint find_critical_point(const StateFamily& family, ChannelKind channel,
                                  double threshold = 1e-4, Engine engine = Engine::Dense);

struct Table1Cell {
  std::string state;
  ChannelKind channel;
  double computed_percent;   // rounded to one decimal
  double reference_percent;  // reference value
  double difference;         // computed - reference
  bool flagged;              // |difference| > 5 percentage points
};

struct Table1 {
  std::vector<std::string> states;
  std::vector<ChannelKind> channels;
  std::vector<Table1Cell> cells;  // row-major: channel x state

  const Table1Cell& at(std::size_t channel_row, std::size_t state_col) const {
    return cells[channel_row * states.size() + state_col];
  }
};

/// Column states: H^1, H^2, H^3, GHZ, G, H^(N-1), H^N at N = 6, k = 1.
std::vector<StateFamily> table1_states();
std::vector<std::string> table1_state_labels();
/// Reference critical percentages, rows lpdc, ladc, ldpc.
const std::vector<std::vector<double>>& table1_reference();

Table1 reproduce_table1(Engine engine = Engine::Dense, double threshold = 1e-4);
std::string format_table1(const Table1& table);

inline constexpr const char* kCsvHeader = "p,log_negativity,discord,engine,wall_time_s";

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& destination);
std::vector<SweepRecord> read_csv(std::istream& in);
std::vector<SweepRecord> read_csv(const std::filesystem::path& source);

/// Everything a CLI run needs; the JSON config file maps onto it key by key.
struct RunConfig {
  SweepConfig sweep;
  double threshold = 1e-4;
  std::string out;
};

/// Keys: family, N, m, k, channel, p_start, p_end, p_steps, measures
/// (array or comma list of "ln" / "discord"), engine, threshold, seed, out.
/// Unknown keys are rejected.
void apply_json(const nlohmann::json& j, RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace macrocorr
