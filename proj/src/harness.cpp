// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0

#include "macrocorr/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "macrocorr/analytic.hpp"

namespace macrocorr {

namespace {

constexpr int kScanPoints = 21;
constexpr double kBracketTarget = 1e-4;
constexpr double kMonotoneTol = 1e-9;
constexpr double kFlagPercent = 5.0;

void require_dense_size(const StateFamily& family) {
  if (family.num_qubits() > kMaxDenseQubits) {
    throw ResourceError(family.label() + " needs " + std::to_string(family.num_qubits()) +
                        " qubits; dense simulation is limited to " + std::to_string(kMaxDenseQubits));
  }
}

bool uses_dense(Engine e) { return e == Engine::Dense || e == Engine::Both; }

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

}  // namespace

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Dense: return "dense";
    case Engine::Analytic: return "analytic";
    case Engine::Both: return "both";
  }
  return "unknown";
}

Engine parse_engine(const std::string& name) {
  if (name == "dense") return Engine::Dense;
  if (name == "analytic") return Engine::Analytic;
  if (name == "both") return Engine::Both;
  throw DomainError("unknown engine '" + name + "' (expected dense, analytic or both)");
}

StateKind parse_state_kind(const std::string& name) {
  if (name == "hcnm") return StateKind::HCNm;
  if (name == "ghz") return StateKind::GHZ;
  if (name == "g") return StateKind::GState;
  if (name == "dicke") return StateKind::Dicke;
  if (name == "product") return StateKind::BasisProduct;
  throw DomainError("unknown family '" + name + "' (expected hcnm, ghz, g or dicke)");
}

void SweepConfig::validate() const {
  family.validate();
  if (!(p_start >= 0.0 && p_end <= 1.0 && p_start < p_end)) {
    throw DomainError("sweep range must satisfy 0 <= p_start < p_end <= 1");
  }
  if (p_steps < 2) throw DomainError("p_steps must be at least 2");
  if (!log_negativity && !discord) throw DomainError("select at least one measure");
  if (discord && !uses_dense(engine)) throw DomainError("discord needs the dense engine");
  if (engine != Engine::Dense && log_negativity) make_analytic_case(family, channel);
  if (uses_dense(engine)) require_dense_size(family);
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> g(static_cast<std::size_t>(p_steps));
  for (int i = 0; i < p_steps; ++i) {
    g[static_cast<std::size_t>(i)] = p_start + (p_end - p_start) * i / (p_steps - 1);
  }
  g.back() = p_end;
  return g;
}

double log_negativity_at(const StateFamily& family, ChannelKind channel, double p, Engine engine) {
  if (engine == Engine::Analytic) {
    return analytic_log_negativity(make_analytic_case(family, channel), p);
  }
  require_dense_size(family);
  const double dense = log_negativity(noisy_state(family, channel, p), Bipartition::for_family(family));
  if (engine == Engine::Both) {
    const double closed = analytic_log_negativity(make_analytic_case(family, channel), p);
    if (std::abs(closed - dense) > kEngineAgreementTol) {
      std::ostringstream msg;
      msg << family.label() << " " << to_string(channel) << " p=" << p << ": dense " << dense
          << " vs analytic " << closed;
      throw ValidationMismatch(msg.str());
    }
  }
  return dense;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const Bipartition part = Bipartition::for_family(config.family);
  std::optional<AnalyticCase> closed;
  if (config.engine != Engine::Dense && config.log_negativity) {
    closed = make_analytic_case(config.family, config.channel);
  }
  std::optional<DensityMatrix> pure;
  if (uses_dense(config.engine)) pure = to_density(build_pure(config.family));

  std::vector<SweepRecord> records;
  for (double p : config.grid()) {
    const auto start = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.p = p;
    rec.engine = config.engine;
    if (config.family.ghz_equivalent_boundary()) rec.flags.push_back("hcnm-m-equals-N");

    std::optional<DensityMatrix> rho;
    if (pure) rho = apply_all(make_channel(config.channel, p), *pure);

    if (config.log_negativity) {
      if (config.engine == Engine::Analytic) {
        rec.log_negativity = analytic_log_negativity(*closed, p);
      } else {
        rec.log_negativity = log_negativity(*rho, part);
        if (closed) {
          rec.analytic_log_negativity = analytic_log_negativity(*closed, p);
          if (std::abs(*rec.analytic_log_negativity - *rec.log_negativity) > kEngineAgreementTol) {
            rec.flags.push_back("engine-mismatch");
          }
        }
      }
    }
    if (config.discord) {
      if (p == 1.0) {
        // All three channels send every qubit to a computational-basis
        // diagonal state at p = 1 (dephased, |0>, or I/2), so the output is
        // classical on both sides and the discord is exactly zero.
        rec.discord = 0.0;
        rec.flags.push_back("discord-exact-at-p1");
      } else {
        rec.discord = discord(*rho, part, config.discord_options).discord;
      }
    }
    if (config.record_timing) {
      rec.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

CriticalPoint find_critical_point(const StateFamily& family, ChannelKind channel, double threshold,
                                  Engine engine) {
  family.validate();
  auto ln = [&](double p) { return log_negativity_at(family, channel, p, engine); };

  std::array<double, kScanPoints> ps{};
  std::array<double, kScanPoints> values{};
  for (int i = 0; i < kScanPoints; ++i) {
    ps[static_cast<std::size_t>(i)] = static_cast<double>(i) / (kScanPoints - 1);
    values[static_cast<std::size_t>(i)] = ln(ps[static_cast<std::size_t>(i)]);
  }
  if (values[0] <= threshold) {
    throw DomainError(family.label() + ": log-negativity at p=0 is already <= threshold");
  }
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (values[i] > values[i - 1] + kMonotoneTol) {
      std::ostringstream msg;
      msg << family.label() << " " << to_string(channel) << ": log-negativity rises from "
          << values[i - 1] << " at p=" << ps[i - 1] << " to " << values[i] << " at p=" << ps[i];
      throw NonMonotoneError(msg.str());
    }
  }
  const auto crossing = std::find_if(values.begin(), values.end(), [&](double v) { return v <= threshold; });
  if (crossing == values.end()) {
    throw DomainError(family.label() + " " + to_string(channel) +
                      ": log-negativity stays above threshold on [0, 1]");
  }
  const auto i = static_cast<std::size_t>(crossing - values.begin());
  double lo = ps[i - 1], hi = ps[i];
  while (hi - lo > kBracketTarget) {
    const double mid = 0.5 * (lo + hi);
    (ln(mid) <= threshold ? hi : lo) = mid;
  }
  return {hi, threshold, hi - lo, engine};
}

std::vector<StateFamily> table1_states() {
  constexpr int N = 6;
  return {StateFamily::hcnm(N, 1), StateFamily::hcnm(N, 2), StateFamily::hcnm(N, 3),
          StateFamily::ghz(N),     StateFamily::g_state(N), StateFamily::hcnm(N, N - 1),
          StateFamily::hcnm(N, N)};
}

std::vector<std::string> table1_state_labels() {
  return {"H^1", "H^2", "H^3", "GHZ", "G", "H^(N-1)", "H^N"};
}

const std::vector<std::vector<double>>& table1_reference() {
  static const std::vector<std::vector<double>> values = {
      {97.5, 92, 86, 67.5, 81, 73, 67.5},
      {97, 91, 84, 78, 87, 73.5, 75},
      {43, 46, 45, 33, 43, 39, 33},
  };
  return values;
}

Table1 reproduce_table1(Engine engine, double threshold) {
  Table1 table;
  table.states = table1_state_labels();
  table.channels = {ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing};
  const auto families = table1_states();
  for (std::size_t row = 0; row < table.channels.size(); ++row) {
    for (std::size_t col = 0; col < families.size(); ++col) {
      const CriticalPoint cp = find_critical_point(families[col], table.channels[row], threshold, engine);
      const double computed = round1(100.0 * cp.p_star);
      const double reference = table1_reference()[row][col];
      const double diff = round1(computed - reference);
      table.cells.push_back({table.states[col], table.channels[row], computed, reference, diff,
                             std::abs(diff) > kFlagPercent});
    }
  }
  return table;
}

std::string format_table1(const Table1& table) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "channel";
  for (const auto& s : table.states) out << std::setw(22) << s;
  out << "\n";
  for (std::size_t row = 0; row < table.channels.size(); ++row) {
    out << std::setw(8) << to_string(table.channels[row]);
    for (std::size_t col = 0; col < table.states.size(); ++col) {
      const auto& c = table.at(row, col);
      std::ostringstream cell;
      cell << std::fixed << std::setprecision(1) << c.computed_percent << " (" << c.reference_percent
           << ", " << std::showpos << c.difference << std::noshowpos << ")" << (c.flagged ? "*" : "");
      out << std::setw(22) << cell.str();
    }
    out << "\n";
  }
  out << "cells: computed (reference, difference); * = differs by more than 5 points\n";
  return out.str();
}

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  if (records.empty()) throw DomainError("emit_csv: no records");
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_number(r.p) << ',';
    if (r.log_negativity) out << format_number(*r.log_negativity);
    out << ',';
    if (r.discord) out << format_number(*r.discord);
    out << ',' << to_string(r.engine) << ',' << format_number(r.wall_time_s) << '\n';
  }
}

void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& destination) {
  if (records.empty()) throw DomainError("emit_csv: no records");
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw IoError("cannot open " + destination.string() + " for writing");
  write_csv(records, out);
  out.flush();
  if (!out) throw IoError("write to " + destination.string() + " failed");
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("missing or unexpected CSV header");
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw IoError("CSV row must have 5 fields: " + line);
    SweepRecord r;
    r.p = std::stod(fields[0]);
    if (!fields[1].empty()) r.log_negativity = std::stod(fields[1]);
    if (!fields[2].empty()) r.discord = std::stod(fields[2]);
    r.engine = parse_engine(fields[3]);
    r.wall_time_s = std::stod(fields[4]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SweepRecord> read_csv(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError("cannot open " + source.string());
  return read_csv(in);
}

void apply_json(const nlohmann::json& j, RunConfig& config) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  SweepConfig& s = config.sweep;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "family") {
        s.family.kind = parse_state_kind(value.get<std::string>());
      } else if (key == "N") {
        s.family.N = value.get<int>();
      } else if (key == "m") {
        s.family.m = value.get<int>();
      } else if (key == "k") {
        s.family.k = value.get<int>();
      } else if (key == "channel") {
        s.channel = parse_channel_kind(value.get<std::string>());
      } else if (key == "p_start") {
        s.p_start = value.get<double>();
      } else if (key == "p_end") {
        s.p_end = value.get<double>();
      } else if (key == "p_steps") {
        s.p_steps = value.get<int>();
      } else if (key == "measures") {
        std::vector<std::string> names;
        if (value.is_array()) {
          names = value.get<std::vector<std::string>>();
        } else {
          names = split(value.get<std::string>(), ',');
        }
        s.log_negativity = s.discord = false;
        for (const auto& n : names) {
          if (n == "ln") {
            s.log_negativity = true;
          } else if (n == "discord") {
            s.discord = true;
          } else {
            throw DomainError("unknown measure '" + n + "'");
          }
        }
      } else if (key == "engine") {
        s.engine = parse_engine(value.get<std::string>());
      } else if (key == "threshold") {
        config.threshold = value.get<double>();
      } else if (key == "seed") {
        s.discord_options.seed = value.get<std::uint64_t>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else {
        throw DomainError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config type error: ") + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  RunConfig config;
  try {
    apply_json(nlohmann::json::parse(in), config);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("config parse error: ") + e.what());
  }
  return config;
}

}  // namespace macrocorr
