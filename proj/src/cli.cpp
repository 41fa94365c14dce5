// Copyright 2026 The whsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "whsp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "whsp/io.hpp"
#include "whsp/properties.hpp"
#include "whsp/qft.hpp"
#include "whsp/solver.hpp"

namespace whsp {
namespace {

enum class Format { kJson, kText };

struct RunConfig {
  int n = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string generators;
  bool random = false;
  bool omit_step4 = false;
  std::string emit = "circuit";
  std::string suite = "all";
  int trials = -1;
  int samples = -1;
  Format format = Format::kJson;
  std::string out_path;
};

void write_payload(const RunConfig& cfg, const Json& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload.dump() << "\n";
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
  file << payload.dump() << "\n";
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.random == !cfg.generators.empty()) {
    throw std::invalid_argument("solve needs exactly one of --generators or --random");
  }
  std::optional<GeneratedSubgroup> planted;
  if (cfg.random) {
    Rng rng(cfg.seed);
    planted = random_subgroup(cfg.n, rng);
  } else {
    planted = GeneratedSubgroup(cfg.n, parse_element_list(cfg.n, cfg.generators));
  }
  auto params = SolverParams::defaults(cfg.n, cfg.seed);
  params.retain_step4_measurement = !cfg.omit_step4;
  if (cfg.samples > 0) params.max_rounds = cfg.samples;

  const auto f = build_hidden_function(*planted);
  const auto report = solve(f, params);
  const bool matches = report.verified && closure(cfg.n, report.generators) == planted->elements();

  if (cfg.format == Format::kJson) {
    auto j = report_to_json(report);
    j["planted"] = subgroup_to_json(*planted);
    j["matches_planted"] = matches;
    write_payload(cfg, j, out);
  } else {
    out << "n: " << report.n << "\n"
        << "planted: " << subgroup_to_json(*planted)["generators"].dump() << "\n"
        << "verified: " << (report.verified ? "yes" : "no") << "\n"
        << "generators: " << element_list_to_json(report.generators).dump() << "\n"
        << "base rounds: " << report.base_rounds_used << "\n"
        << "fourier rounds: " << report.rounds_used << "\n"
        << "matches planted: " << (matches ? "yes" : "no") << "\n";
    if (!cfg.out_path.empty()) write_payload(cfg, report_to_json(report), out);
  }
  return matches ? kExitOk : kExitFailure;
}

int cmd_qft(const RunConfig& cfg, std::ostream& out) {
  Json payload;
  if (cfg.emit == "matrix") {
    payload = sign_matrix_to_json(cfg.n);
  } else if (cfg.emit == "circuit") {
    payload = circuit_to_json(qft_circuit(cfg.n).circuit);
  } else {
    throw std::invalid_argument("--emit must be 'matrix' or 'circuit'");
  }
  const auto bundle = qft_circuit(cfg.n);
  const GateCountRow counts{cfg.n, bundle.hadamard_count, bundle.toffoli_count,
                            bundle.hadamard_count + bundle.toffoli_count};
  if (cfg.format == Format::kJson) {
    if (cfg.out_path.empty()) {
      payload["gate_counts"] = gate_count_row_to_json(counts);
      write_payload(cfg, payload, out);
    } else {
      write_payload(cfg, payload, out);
      out << gate_count_row_to_json(counts).dump() << "\n";
    }
    return kExitOk;
  }
  out << "n  hadamards  toffolis  total\n"
      << counts.n << "  " << counts.hadamards << "  " << counts.toffolis << "  "
      << counts.total << "\n";
  if (cfg.emit == "matrix") out << "scale: " << payload["scale"].get<std::string>() << "\n";
  write_payload(cfg, payload, out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > kMaxDenseQftArity) {
    throw CapacityError("verify supports 1 <= n <= " + std::to_string(kMaxDenseQftArity));
  }
  const int count = cfg.trials > 0 ? cfg.trials : 200;
  const auto results = run_suite(cfg.suite, cfg.n, count, cfg.seed);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    if (cfg.format == Format::kJson) {
      Json j{{"property", r.name}, {"n", cfg.n}, {"checked", r.checked}, {"passed", r.passed}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      out << j.dump() << "\n";
    } else {
      out << r.name << ": " << r.passed << "/" << r.checked << " passed\n";
      if (r.counterexample) out << "  counterexample: " << r.counterexample->dump() << "\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const int trials = cfg.trials > 0 ? cfg.trials : 1000;
  const int max_i = cfg.samples > 0 ? cfg.samples : 32;
  std::vector<int> is;
  for (int i = 4; i <= max_i; i *= 2) is.push_back(i);
  if (is.empty()) is.push_back(max_i);
  const auto rows = sweep(cfg.n, trials, is, cfg.seed);
  if (cfg.format == Format::kText) out << "i  trials  successes  rate  bound\n";
  std::ostringstream lines;
  for (const auto& row : rows) {
    if (cfg.format == Format::kJson) {
      lines << sweep_row_to_json(row).dump() << "\n";
    } else {
      out << row.i << "  " << row.trials << "  " << row.successes << "  " << std::fixed
          << std::setprecision(4) << row.rate() << "  " << row.bound << "\n";
    }
  }
  if (cfg.format == Format::kJson) {
    if (cfg.out_path.empty()) {
      out << lines.str();
    } else {
      std::ofstream file(cfg.out_path);
      if (!file) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
      file << lines.str();
    }
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto subgroups = enumerate_subgroups(cfg.n);
  for (const auto& u : subgroups) {
    if (cfg.format == Format::kJson) {
      auto j = subgroup_to_json(u);
      j["order"] = u.order();
      j["balanced"] = is_balanced(u);
      out << j.dump() << "\n";
    } else {
      out << "order " << u.order() << (is_balanced(u) ? " balanced " : " ") << "generators "
          << element_list_to_json(u.generators()).dump() << "\n";
    }
  }
  if (cfg.format == Format::kText) out << subgroups.size() << " subgroups\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hidden subgroup solver for the wreath products Z_2^n wr Z_2"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"text", Format::kText}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Arity n of W_n")->check(CLI::Range(1, 64));
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write the payload to this file");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve a planted hidden subgroup instance");
  common(solve_cmd);
  solve_cmd->add_option("--generators", cfg.generators, "Comma-separated x|y|a literals");
  solve_cmd->add_flag("--random", cfg.random, "Plant a random subgroup");
  solve_cmd->add_option("--samples", cfg.samples, "Fourier-sampling budget");
  solve_cmd->add_flag("--omit-step4", cfg.omit_step4,
                      "Skip measuring the function register before the transform");

  auto* qft_cmd = app.add_subcommand("qft", "Emit the Fourier transform of W_n");
  common(qft_cmd);
  qft_cmd->add_option("--emit", cfg.emit, "matrix or circuit");

  auto* verify_cmd = app.add_subcommand("verify", "Run brute-force property suites");
  common(verify_cmd);
  verify_cmd->add_option("--suite", cfg.suite,
                         "lemma1|perp|halves|balanced|corollary|qft|theorem6|coset|all");
  verify_cmd->add_option("--trials", cfg.trials, "Random subgroups per suite (n >= 2)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Generation-probability experiment");
  common(sweep_cmd);
  sweep_cmd->add_option("--trials", cfg.trials, "Trials per row");
  sweep_cmd->add_option("--samples", cfg.samples, "Largest sample count i");

  auto* enum_cmd = app.add_subcommand("enumerate", "List all subgroups of W_1 or W_2");
  common(enum_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(cfg, out);
    if (qft_cmd->parsed()) return cmd_qft(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    return cmd_enumerate(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace whsp
