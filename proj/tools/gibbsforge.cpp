// Copyright 2026 The gibbsforge Authors
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

// Command-line front end. Every command reads and writes files in the
// formats of gibbsforge/io.hpp; exit codes: 0 ok, 1 verification failure,
// 2 usage or input error, 3 resource cap.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gibbsforge/analysis.hpp"
#include "gibbsforge/circuit.hpp"
#include "gibbsforge/encoding.hpp"
#include "gibbsforge/hamiltonian.hpp"
#include "gibbsforge/io.hpp"
#include "gibbsforge/simulate.hpp"
#include "gibbsforge/verify.hpp"

#ifndef GIBBSFORGE_VERSION
#define GIBBSFORGE_VERSION "0.0.0"
#endif

namespace {

using namespace gibbsforge;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  bool quiet = false;
};

struct Run {
  std::string command;
  json parameters = json::object();
  std::vector<std::string> inputs;
};

// Emits to --out (plus a manifest) or to stdout.
void emit(const Globals& g, Run& run, const std::string& text, std::chrono::steady_clock::time_point start) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  io::write_text_file(g.out, text);
  json manifest;
  manifest["command"] = run.command;
  manifest["parameters"] = run.parameters;
  manifest["seed"] = g.seed;
  manifest["inputs"] = run.inputs;
  manifest["outputs"] = {g.out};
  manifest["version"] = GIBBSFORGE_VERSION;
  manifest["dense_cap"] = dense_cap();
  manifest["dense_cap_overridden"] = dense_cap_overridden();
  manifest["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  io::write_text_file(g.out + ".manifest.json", manifest.dump(2) + "\n");
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  if (g.format.empty()) return;
  for (const char* f : allowed) {
    if (g.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw InputError("--format " + g.format + " is not supported by this command (use " + list + ")");
}

std::string format_or(const Globals& g, const char* fallback) { return g.format.empty() ? fallback : g.format; }

XProgram load_program(const std::string& path, Run& run) {
  run.inputs.push_back(path);
  return io::program_from_json(io::read_json_file(path));
}

// Resolves exactly one of --beta/--q into both, echoing them in the manifest.
struct Temperature {
  double beta = 0.0;
  double q = 0.0;
};

Temperature resolve_temperature(const std::optional<double>& beta, const std::optional<double>& q, Run& run) {
  Temperature t;
  if (beta) {
    if (std::isnan(*beta) || *beta < 0) throw InputError("--beta must be >= 0");
    t.beta = *beta;
    t.q = q_of_beta(*beta);
  } else {
    if (!(*q >= 0.0 && *q <= 0.5)) throw InputError("--q must lie in [0, 1/2]");
    t.q = *q;
    t.beta = *q == 0.0 ? std::numeric_limits<double>::infinity() : beta_of_q(*q);
  }
  run.parameters["beta"] = std::isinf(t.beta) ? json("inf") : json(t.beta);
  run.parameters["q"] = t.q;
  return t;
}

bool looks_like_jsonl(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  Run run;
  CLI::App app{"IQP parent-Hamiltonian Gibbs sampling toolkit", "gibbsforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GIBBSFORGE_VERSION);
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("-o,--out", g.out, "Output path (default stdout); a manifest is written next to it");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "jsonl"}));
  app.add_flag("--quiet", g.quiet, "Suppress informational messages");

  // gen
  std::string family;
  int L = 1, edge_k = 2, single_k = 1;
  std::vector<int> designated;
  auto* gen = app.add_subcommand("gen", "Generate a lattice IQP program");
  gen->add_option("--family", family, "raussendorf3d | brickwork2d")->required();
  gen->add_option("-L", L, "Linear size")->required();
  gen->add_option("--edge-k", edge_k, "Edge angle in units of pi/8");
  gen->add_option("--single-k", single_k, "Single-qubit angle in units of pi/8");
  gen->add_option("--designated", designated, "Qubits receiving the single-qubit phase (default all)");

  // encode
  std::string input, form_name = "cnot";
  int r = 1;
  auto* enc = app.add_subcommand("encode", "Repetition-encode a program");
  enc->add_option("input", input, "Program JSON")->required();
  enc->add_option("--r", r, "Repetitions per logical qubit")->required();
  enc->add_option("--form", form_name, "bms | cnot")->check(CLI::IsMember({"bms", "cnot"}));

  // parent-ham
  bool analyze_flag = false;
  auto* parent = app.add_subcommand("parent-ham", "Build the parent Hamiltonian");
  parent->add_option("input", input, "Program JSON")->required();
  parent->add_flag("--analyze", analyze_flag, "Print the locality/degree profile");

  // exact and sample share the temperature options.
  std::optional<double> beta_opt, q_opt;
  std::string method = "noisy";
  auto add_temperature = [&](CLI::App* sub) {
    auto* b = sub->add_option("--beta", beta_opt, "Inverse temperature");
    auto* q = sub->add_option("--q", q_opt, "Bit-flip rate");
    b->excludes(q);
    q->excludes(b);
  };
  auto* exact = app.add_subcommand("exact", "Exact output distribution");
  exact->add_option("input", input, "Program JSON")->required();
  add_temperature(exact);
  exact->add_option("--method", method, "noisy | spectral | dense")
      ->check(CLI::IsMember({"noisy", "spectral", "dense"}));

  std::uint64_t shots = 0;
  unsigned threads = 0;
  auto* sample = app.add_subcommand("sample", "Monte Carlo samples of the noisy circuit");
  sample->add_option("input", input, "Program JSON")->required();
  add_temperature(sample);
  sample->add_option("--shots", shots, "Number of shots")->required();
  sample->add_option("--threads", threads, "Worker threads (0 = hardware)");

  int n_logical = 0;
  std::string tie_name = "zero";
  auto* decode = app.add_subcommand("decode", "Majority-decode encoded samples");
  decode->add_option("input", input, "Sample JSONL or exact CSV")->required();
  decode->add_option("--n", n_logical, "Logical qubits (default: bit length / r)");
  decode->add_option("--r", r, "Repetitions per logical qubit")->required();
  decode->add_option("--tie-rule", tie_name, "zero | leader")->check(CLI::IsMember({"zero", "leader"}));
  decode->add_option("--form", form_name, "bms | cnot")->check(CLI::IsMember({"bms", "cnot"}));

  std::string suite;
  SuiteOptions suite_opts;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "equivalence | encoding | lemmas | thresholds | all")
      ->required()
      ->check(CLI::IsMember({"equivalence", "encoding", "lemmas", "thresholds", "all"}));
  verify->add_option("--max-n", suite_opts.max_n, "Largest register for dense checks");
  verify->add_option("--trials", suite_opts.trials, "Random instances per randomized check");
  verify->add_option("--shots", suite_opts.shots, "Sampler check shots (0 skips)");
  verify->add_option("--threads", suite_opts.threads, "Sampler threads");

  std::vector<double> th_beta;
  double q_meas = 0.0;
  std::vector<int> deltas{5, 20, 80};
  auto* thresholds = app.add_subcommand("thresholds", "Threshold and frontier report");
  thresholds->add_option("--beta", th_beta, "Inverse temperatures for the readout-noise threshold");
  thresholds->add_option("--q-meas", q_meas, "Readout bit-flip rate");
  thresholds->add_option("--delta", deltas, "Degrees for the frontier");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (dense_cap_overridden() && !g.quiet) {
      std::cerr << "gibbsforge: dense cap overridden to " << dense_cap() << " by GIBBSFORGE_CAP_N\n";
    }
    if (*gen) {
      require_format(g, {"json"});
      run.command = "gen";
      LatticeSpec spec{parse_family(family), L, {edge_k, single_k, std::nullopt}};
      if (!designated.empty()) spec.phase_pattern.designated = designated;
      if (L < 1) throw InputError("-L must be >= 1");
      run.parameters = {{"family", family}, {"L", L}, {"edge_k", edge_k}, {"single_k", single_k}};
      if (!designated.empty()) run.parameters["designated"] = designated;
      emit(g, run, io::to_json(generate_family(spec)).dump(2) + "\n", start);
    } else if (*enc) {
      require_format(g, {"json"});
      run.command = "encode";
      const XProgram program = load_program(input, run);
      const EncodedForm form = parse_form(form_name);
      run.parameters = {{"r", r}, {"form", form_name}};
      const XProgram out = form == EncodedForm::bms ? encode_bms(program, r) : encode_cnot(program, r);
      emit(g, run, io::to_json(out).dump(2) + "\n", start);
    } else if (*parent) {
      require_format(g, {"json"});
      run.command = "parent-ham";
      const XProgram program = load_program(input, run);
      run.parameters = {{"analyze", analyze_flag}};
      const ParentHamiltonian h = build_parent(program);
      if (analyze_flag) {
        json profile = io::to_json(analyze(h));
        if (g.out.empty()) {
          std::cout << profile.dump() << '\n';
          return kExitOk;
        }
        if (!g.quiet) std::cout << profile.dump() << '\n';
      }
      emit(g, run, io::to_json(h).dump(2) + "\n", start);
    } else if (*exact) {
      require_format(g, {"csv", "json"});
      run.command = "exact";
      if (!beta_opt && !q_opt) throw InputError("exactly one of --beta or --q is required");
      const XProgram program = load_program(input, run);
      const Temperature t = resolve_temperature(beta_opt, q_opt, run);
      run.parameters["method"] = method;
      Distribution dist = method == "spectral" ? gibbs_diagonal_spectral(program, t.beta)
                          : method == "dense"  ? gibbs_diagonal_dense(build_parent(program), t.beta)
                                               : noisy_circuit_exact(program, NoiseSpec(t.q));
      std::ostringstream text;
      if (format_or(g, "csv") == "csv") {
        io::write_exact_csv(text, dist);
      } else {
        json j;
        j["n"] = dist.num_bits();
        json probs = json::object();
        const Eigen::VectorXd p = dist.to_vector();
        for (Eigen::Index s = 0; s < p.size(); ++s) probs[io::bitstring(static_cast<std::uint64_t>(s), dist.num_bits())] = p(s);
        j["probabilities"] = std::move(probs);
        text << j.dump(2) << '\n';
      }
      emit(g, run, text.str(), start);
    } else if (*sample) {
      require_format(g, {"jsonl"});
      run.command = "sample";
      if (!beta_opt && !q_opt) throw InputError("exactly one of --beta or --q is required");
      if (shots == 0) throw InputError("--shots must be positive");
      const XProgram program = load_program(input, run);
      const Temperature t = resolve_temperature(beta_opt, q_opt, run);
      run.parameters["shots"] = shots;
      run.parameters["threads"] = threads;
      const Distribution dist = noisy_circuit_sample(program, NoiseSpec(t.q), shots, g.seed, threads);
      std::ostringstream text;
      io::write_empirical_jsonl(text, dist, {shots, g.seed, t.q});
      emit(g, run, text.str(), start);
    } else if (*decode) {
      require_format(g, {"jsonl"});
      run.command = "decode";
      run.inputs.push_back(input);
      const std::string text = io::read_text_file(input);
      std::istringstream in(text);
      const Distribution physical = looks_like_jsonl(text) ? io::read_empirical_jsonl(in) : io::read_exact_csv(in);
      if (r < 1) throw InputError("--r must be >= 1");
      if (n_logical == 0) {
        if (physical.num_bits() % r) throw InputError("bit length is not a multiple of --r");
        n_logical = physical.num_bits() / r;
      }
      const BlockLayout layout(n_logical, r);
      const TieRule rule = parse_tie_rule(tie_name);
      const EncodedForm form = parse_form(form_name);
      run.parameters = {{"n", n_logical}, {"r", r}, {"tie_rule", tie_name}, {"form", form_name}};
      std::ostringstream out;
      io::write_decoded_jsonl(out, decode_distribution(physical, layout, rule, form), layout, rule, form);
      emit(g, run, out.str(), start);
    } else if (*verify) {
      require_format(g, {"jsonl", "json"});
      run.command = "verify";
      suite_opts.seed = g.seed;
      run.parameters = {{"suite", suite}, {"max_n", suite_opts.max_n}, {"trials", suite_opts.trials},
                        {"shots", suite_opts.shots}};
      const auto verdicts = run_suite(suite, suite_opts);
      bool all_ok = true;
      std::string text;
      if (format_or(g, "jsonl") == "jsonl") {
        for (const auto& v : verdicts) text += v.to_json().dump() + "\n";
      } else {
        json arr = json::array();
        for (const auto& v : verdicts) arr.push_back(v.to_json());
        text = arr.dump(2) + "\n";
      }
      for (const auto& v : verdicts) {
        all_ok = all_ok && v.ok;
        if (!v.ok && !g.quiet) std::cerr << "gibbsforge: check failed: " << v.check << ' ' << v.inputs.dump() << '\n';
      }
      run.parameters["ok"] = all_ok;
      emit(g, run, text, start);
      return all_ok ? kExitOk : kExitVerify;
    } else if (*thresholds) {
      require_format(g, {"json"});
      run.command = "thresholds";
      run.parameters = {{"beta", th_beta}, {"q_meas", q_meas}, {"delta", deltas}};
      const ThresholdReport hr = hardness_threshold();
      json j;
      j["hardness"] = {{"q_star", hr.q_star},
                       {"beta_star", hr.beta_star},
                       {"round_trip_error", hr.round_trip_error},
                       {"in_range", hr.beta_star_in_range}};
      json meas = json::array();
      for (double b : th_beta) {
        const MeasurementThreshold m = measurement_threshold(b, q_meas);
        meas.push_back({{"beta", b},
                        {"q_meas", q_meas},
                        {"q_gibbs", m.q_gibbs},
                        {"q_prime", m.q_prime},
                        {"beta_prime", m.beta_prime},
                        {"hard", m.hard}});
      }
      j["measurement"] = std::move(meas);
      json frontier = json::array();
      for (int d : deltas) {
        const Frontier f = degree_frontier(d);
        frontier.push_back({{"delta", d},
                            {"beta_exact", f.beta_exact},
                            {"beta_closed_form", f.beta_closed_form},
                            {"beta_exp100", f.beta_exp100},
                            {"beta_exp40", f.beta_exp40}});
      }
      j["frontier"] = std::move(frontier);
      emit(g, run, j.dump(2) + "\n", start);
    }
  } catch (const ResourceError& e) {
    std::cerr << "gibbsforge: resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "gibbsforge: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "gibbsforge: internal error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitOk;
}
