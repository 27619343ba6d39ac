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

#include "gibbsforge/simulate.hpp"

namespace gibbsforge {

/// n_logical blocks of r physical bits; physical index = block·r + slot and
/// slot 0 is the block leader.
struct BlockLayout {
  int n_logical = 0;
  int r = 1;

  BlockLayout(int n_logical, int r);

  int n_physical() const { return n_logical * r; }
  int index(int block, int slot) const { return block * r + slot; }
  int block_of(int physical) const { return physical / r; }
  int slot_of(int physical) const { return physical % r; }
};

/// Resolution of an even-r block with r/2 ones: decode to 0, or follow the leader.
enum class TieRule { zero, leader };
/// Samples taken from the BMS-encoded circuit, or from its CNOT-network form.
enum class EncodedForm { bms, cnot };

std::string to_string(TieRule rule);
TieRule parse_tie_rule(const std::string& name);
std::string to_string(EncodedForm form);
EncodedForm parse_form(const std::string& name);

using Bits = std::vector<std::uint8_t>;

struct DecodeReport {
  Bits logical_bits;
  /// Number of ones per block after the unfold.
  std::vector<int> per_block_votes;
  int tie_count = 0;
};

/// Classical action of the CNOT network: every non-leader bit XOR the leader.
Bits xor_unfold(const Bits& sample, const BlockLayout& layout);
std::uint64_t xor_unfold(std::uint64_t sample, const BlockLayout& layout);

DecodeReport decode_majority(const Bits& sample, const BlockLayout& layout, TieRule tie_rule,
                             EncodedForm form = EncodedForm::cnot);
std::uint64_t decode_majority(std::uint64_t sample, const BlockLayout& layout, TieRule tie_rule,
                              EncodedForm form = EncodedForm::cnot);

/// Push-forward of a physical distribution through the decoder.
Distribution decode_distribution(const Distribution& physical, const BlockLayout& layout, TieRule tie_rule,
                                 EncodedForm form = EncodedForm::cnot);

/// Probability that a block of r independently flipped bits decodes wrongly.
/// With TieRule::leader a tie fails half the time; with TieRule::zero it fails
/// for a logical 1 only, and the value returned is that worse case.
double failure_rate_exact(double q, int r, TieRule tie_rule = TieRule::zero);

/// (4q(1−q))^{r/2}.
double failure_rate_bound(double q, int r);

}  // namespace gibbsforge
