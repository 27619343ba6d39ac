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
#include <iosfwd>
#include <string>

#include "gibbsforge/circuit.hpp"
#include "gibbsforge/encoding.hpp"
#include "gibbsforge/hamiltonian.hpp"
#include "gibbsforge/pauli.hpp"
#include "gibbsforge/simulate.hpp"
#include "json.hpp"

namespace gibbsforge::io {

using json = nlohmann::ordered_json;

/// Character i is qubit i.
std::string bitstring(std::uint64_t s, int n);
std::uint64_t parse_bitstring(const std::string& text);

json to_json(const PauliSum& op);
PauliSum pauli_sum_from_json(const json& j);

json to_json(const XProgram& program);
/// Validates the result; malformed documents throw InputError.
XProgram program_from_json(const json& j);

json to_json(const ParentHamiltonian& h);
ParentHamiltonian parent_from_json(const json& j);

json to_json(const InteractionProfile& profile);

/// "bitstring,probability" rows sorted by bitstring, %.17g values.
void write_exact_csv(std::ostream& out, const Distribution& dist);
Distribution read_exact_csv(std::istream& in);

struct SampleHeader {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double q = 0.0;
};

/// Header record, then one {"s", "count"} record per observed bitstring.
void write_empirical_jsonl(std::ostream& out, const Distribution& dist, const SampleHeader& header);
Distribution read_empirical_jsonl(std::istream& in, SampleHeader* header = nullptr);

void write_decoded_jsonl(std::ostream& out, const Distribution& logical, const BlockLayout& layout, TieRule rule,
                         EncodedForm form);

/// Whole-file helpers. Parse failures and missing files throw InputError.
std::string read_text_file(const std::string& path);
json read_json_file(const std::string& path);
/// Writes through a temporary sibling and renames, so a failed run leaves no file.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace gibbsforge::io
