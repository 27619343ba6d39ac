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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gibbsforge/circuit.hpp"
#include "json.hpp"

namespace gibbsforge {

/// One checker outcome, emitted as {"check", "inputs", "values", "ok"}.
struct Verdict {
  std::string check;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  bool ok = false;

  nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
  /// Largest register for the dense checks. The equivalence tolerances need n <= 8.
  int max_n = 8;
  std::uint64_t seed = 1;
  /// Random instances per randomized inequality check.
  int trials = 1000;
  /// Shots for the sampler-versus-exact check; 0 skips it.
  std::uint64_t shots = 1000000;
  unsigned threads = 0;
};

struct NamedProgram {
  std::string name;
  XProgram program;
};

/// First `count` qubits reached by breadth-first search from qubit 0.
std::vector<int> connected_patch(const LatticeGraph& graph, int count);

/// Random, lattice, patch and encoded programs with n <= max_n.
std::vector<NamedProgram> benchmark_programs(int max_n, std::uint64_t seed = 1);

/// Gibbs/noisy-circuit equivalence, partition function, spectrum, readout
/// noise absorption and sampler statistics.
std::vector<Verdict> verify_equivalence(const SuiteOptions& opts);
/// Encoded unitary identity, decoding pipeline, failure bounds and locality.
std::vector<Verdict> verify_encoding(const SuiteOptions& opts);
/// Postselection, Gibbs perturbation, cosh and p_fail chain inequalities.
std::vector<Verdict> verify_lemmas(const SuiteOptions& opts);
/// β* consistency, measurement threshold and the degree frontier.
std::vector<Verdict> verify_thresholds(const SuiteOptions& opts);

/// Suite by name: equivalence, encoding, lemmas, thresholds or all.
std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace gibbsforge
