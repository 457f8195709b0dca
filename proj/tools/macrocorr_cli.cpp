// Copyright 2026 The macrocorr Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: sweep, critical, table1, validate.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macrocorr/analytic.hpp"
#include "macrocorr/harness.hpp"

namespace {

using namespace macrocorr;

constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

// Raw flag values; only the ones the user actually passed override the config.
struct Flags {
  std::string config;
  std::string family, channel, measures, engine, out;
  int N = 0, m = 0, k = 0, p_steps = 0;
  double p_start = 0, p_end = 0, threshold = 0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its keys");
  cmd->add_option("--family", f.family, "hcnm | ghz | g | dicke")
      ->check(CLI::IsMember({"hcnm", "ghz", "g", "dicke"}));
  cmd->add_option("--N", f.N, "macroscopic qubits");
  cmd->add_option("--m", f.m, "excitations in the macroscopic branch");
  cmd->add_option("--k", f.k, "microscopic qubits");
  cmd->add_option("--channel", f.channel, "lpdc | ladc | ldpc");
  cmd->add_option("--engine", f.engine, "dense | analytic | both");
}

RunConfig resolve(const CLI::App* cmd, const Flags& f) {
  RunConfig cfg = f.config.empty() ? RunConfig{} : load_config(f.config);
  nlohmann::json j = nlohmann::json::object();
  auto given = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--family")) j["family"] = f.family;
  if (given("--N")) j["N"] = f.N;
  if (given("--m")) j["m"] = f.m;
  if (given("--k")) j["k"] = f.k;
  if (given("--channel")) j["channel"] = f.channel;
  if (given("--engine")) j["engine"] = f.engine;
  if (given("--p-start")) j["p_start"] = f.p_start;
  if (given("--p-end")) j["p_end"] = f.p_end;
  if (given("--p-steps")) j["p_steps"] = f.p_steps;
  if (given("--measures")) j["measures"] = f.measures;
  if (given("--threshold")) j["threshold"] = f.threshold;
  if (given("--seed")) j["seed"] = f.seed;
  if (given("--out")) j["out"] = f.out;
  apply_json(j, cfg);
  if (cfg.sweep.family.kind == StateKind::GState) cfg.sweep.family.k = 1;
  return cfg;
}

int run_sweep_cmd(const RunConfig& cfg) {
  const auto records = run_sweep(cfg.sweep);
  if (cfg.out.empty()) {
    write_csv(records, std::cout);
  } else {
    emit_csv(records, cfg.out);
    std::cerr << "wrote " << records.size() << " rows to " << cfg.out << "\n";
  }
  return 0;
}

int run_critical_cmd(const RunConfig& cfg) {
  const auto& s = cfg.sweep;
  const CriticalPoint cp = find_critical_point(s.family, s.channel, cfg.threshold, s.engine);
  std::printf("%s %s p* = %.4f (%.1f%%), threshold %g, bracket %.1e, engine %s\n", s.family.label().c_str(),
              to_string(s.channel).c_str(), cp.p_star, 100.0 * cp.p_star, cp.threshold, cp.bracket_width,
              to_string(cp.engine).c_str());
  return 0;
}

int run_table1_cmd(const RunConfig& cfg) {
  std::cout << format_table1(reproduce_table1(cfg.sweep.engine, cfg.threshold));
  return 0;
}

int run_validate_cmd(const RunConfig& cfg) {
  const auto c = make_analytic_case(cfg.sweep.family, cfg.sweep.channel);
  const auto grid = cfg.sweep.grid();
  const ValidationReport report = validate_against_dense(c, grid);
  std::printf("%s %s formula %s\n", c.family.label().c_str(), to_string(c.channel).c_str(),
              to_string(c.formula_id).c_str());
  for (const auto& note : c.corrections) std::printf("  correction: %s\n", note.c_str());
  std::printf("%8s %18s %18s %18s\n", "p", "analytic", "as_printed", "dense");
  for (const auto& pt : report.points) {
    std::printf("%8.4f %18.12f %18.12f %18.12f\n", pt.p, pt.analytic, pt.analytic_as_printed, pt.dense);
  }
  std::printf("max |analytic - dense| = %.3e\n", report.max_deviation);
  if (!c.corrections.empty()) {
    std::printf("max |as_printed - dense| = %.3e\n", report.max_deviation_as_printed);
  }
  return report.max_deviation > kEngineAgreementTol ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and discord of noisy macroscopic cat states"};
  app.require_subcommand(1);

  Flags f;
  auto* sweep = app.add_subcommand("sweep", "log-negativity / discord over a grid of p, as CSV");
  add_common(sweep, f);
  sweep->add_option("--p-start", f.p_start);
  sweep->add_option("--p-end", f.p_end);
  sweep->add_option("--p-steps", f.p_steps);
  sweep->add_option("--measures", f.measures, "comma list of ln, discord");
  sweep->add_option("--seed", f.seed, "seed for the discord optimizer's random starts");
  sweep->add_option("--out", f.out, "CSV path (default: stdout)");

  auto* critical = app.add_subcommand("critical", "noise level where log-negativity vanishes");
  add_common(critical, f);
  critical->add_option("--threshold", f.threshold);

  auto* table1 = app.add_subcommand("table1", "critical percentages for the seven N = 6 states");
  table1->add_option("--config", f.config);
  table1->add_option("--engine", f.engine);
  table1->add_option("--threshold", f.threshold);

  auto* validate = app.add_subcommand("validate", "closed form against dense simulation");
  add_common(validate, f);
  validate->add_option("--p-steps", f.p_steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    if (*sweep) return run_sweep_cmd(resolve(sweep, f));
    if (*critical) return run_critical_cmd(resolve(critical, f));
    if (*table1) return run_table1_cmd(resolve(table1, f));
    if (*validate) {
      RunConfig cfg = resolve(validate, f);
      if (validate->get_option("--p-steps")->count() == 0) cfg.sweep.p_steps = 21;
      return run_validate_cmd(cfg);
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
