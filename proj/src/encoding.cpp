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

#include "gibbsforge/encoding.hpp"

#include <cmath>

namespace gibbsforge {

BlockLayout::BlockLayout(int n_logical_, int r_) : n_logical(n_logical_), r(r_) {
  if (n_logical < 1) throw InputError("layout needs at least one block");
  if (r < 1) throw InputError("repetition count r must be >= 1");
}

std::string to_string(TieRule rule) { return rule == TieRule::zero ? "zero" : "leader"; }

TieRule parse_tie_rule(const std::string& name) {
  if (name == "zero") return TieRule::zero;
  if (name == "leader") return TieRule::leader;
  throw InputError("unknown tie rule: " + name);
}

std::string to_string(EncodedForm form) { return form == EncodedForm::bms ? "bms" : "cnot"; }

EncodedForm parse_form(const std::string& name) {
  if (name == "bms") return EncodedForm::bms;
  if (name == "cnot") return EncodedForm::cnot;
  throw InputError("unknown encoding form: " + name);
}

namespace {

void check_length(std::size_t len, const BlockLayout& layout) {
  if (len != static_cast<std::size_t>(layout.n_physical())) {
    throw InputError("sample has " + std::to_string(len) + " bits, layout needs " +
                     std::to_string(layout.n_physical()));
  }
}

}  // namespace

Bits xor_unfold(const Bits& sample, const BlockLayout& layout) {
  check_length(sample.size(), layout);
  Bits out = sample;
  for (int b = 0; b < layout.n_logical; ++b) {
    const std::uint8_t leader = sample[layout.index(b, 0)] & 1u;
    for (int j = 1; j < layout.r; ++j) out[layout.index(b, j)] = (sample[layout.index(b, j)] & 1u) ^ leader;
  }
  return out;
}

std::uint64_t xor_unfold(std::uint64_t sample, const BlockLayout& layout) {
  if (layout.n_physical() > 64) throw InputError("packed samples hold at most 64 bits");
  for (int b = 0; b < layout.n_logical; ++b) {
    if (!((sample >> layout.index(b, 0)) & 1u)) continue;
    for (int j = 1; j < layout.r; ++j) sample ^= std::uint64_t{1} << layout.index(b, j);
  }
  return sample;
}

DecodeReport decode_majority(const Bits& sample, const BlockLayout& layout, TieRule tie_rule, EncodedForm form) {
  check_length(sample.size(), layout);
  const Bits bits = form == EncodedForm::cnot ? xor_unfold(sample, layout) : sample;
  DecodeReport report;
  report.logical_bits.resize(layout.n_logical);
  report.per_block_votes.resize(layout.n_logical);
  for (int b = 0; b < layout.n_logical; ++b) {
    int ones = 0;
    for (int j = 0; j < layout.r; ++j) ones += bits[layout.index(b, j)] & 1u;
    report.per_block_votes[b] = ones;
    std::uint8_t bit;
    if (2 * ones > layout.r) {
      bit = 1;
    } else if (2 * ones < layout.r) {
      bit = 0;
    } else {
      ++report.tie_count;
      bit = tie_rule == TieRule::zero ? 0 : (bits[layout.index(b, 0)] & 1u);
    }
    report.logical_bits[b] = bit;
  }
  return report;
}

std::uint64_t decode_majority(std::uint64_t sample, const BlockLayout& layout, TieRule tie_rule, EncodedForm form) {
  if (layout.n_physical() > 64) throw InputError("packed samples hold at most 64 bits");
  Bits bits(layout.n_physical());
  for (int i = 0; i < layout.n_physical(); ++i) bits[i] = (sample >> i) & 1u;
  const DecodeReport rep = decode_majority(bits, layout, tie_rule, form);
  std::uint64_t out = 0;
  for (int b = 0; b < layout.n_logical; ++b) out |= static_cast<std::uint64_t>(rep.logical_bits[b]) << b;
  return out;
}

Distribution decode_distribution(const Distribution& physical, const BlockLayout& layout, TieRule tie_rule,
                                 EncodedForm form) {
  if (physical.num_bits() != layout.n_physical()) throw InputError("distribution does not match the block layout");
  if (physical.is_exact()) {
    const Eigen::VectorXd& p = physical.probabilities();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(Eigen::Index{1} << layout.n_logical);
    // Ascending physical index keeps the summation order fixed.
    for (Eigen::Index s = 0; s < p.size(); ++s) {
      out(static_cast<Eigen::Index>(decode_majority(static_cast<std::uint64_t>(s), layout, tie_rule, form))) += p(s);
    }
    return Distribution::exact(layout.n_logical, std::move(out));
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [s, c] : physical.counts()) counts[decode_majority(s, layout, tie_rule, form)] += c;
  return Distribution::empirical(layout.n_logical, std::move(counts));
}

double failure_rate_exact(double q, int r, TieRule tie_rule) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("q must lie in [0, 1]");
  if (r < 1) throw InputError("repetition count r must be >= 1");
  double tail = 0.0, tie = 0.0;
  double binom = 1.0;  // C(r, k)
  for (int k = 0; k <= r; ++k) {
    if (k > 0) binom = binom * (r - k + 1) / k;
    const double term = binom * std::pow(q, k) * std::pow(1.0 - q, r - k);
    if (2 * k > r) {
      tail += term;
    } else if (2 * k == r) {
      tie = term;
    }
  }
  return tail + (tie_rule == TieRule::leader ? 0.5 : 1.0) * tie;
}

double failure_rate_bound(double q, int r) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("q must lie in [0, 1]");
  if (r < 1) throw InputError("repetition count r must be >= 1");
  return std::pow(4.0 * q * (1.0 - q), 0.5 * r);
}

}  // namespace gibbsforge
