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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gibbsforge {

/// Fixed-length bit vector, bit i stored in word i / 64. Used for the X and Z
/// parts of Pauli strings over an arbitrary number of qubits.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t nbits);

  static BitMask single(std::size_t nbits, std::size_t bit);
  static BitMask from_u64(std::size_t nbits, std::uint64_t value);

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const;
  std::size_t count() const;

  /// Indices of the set bits, ascending.
  std::vector<std::size_t> ones() const;

  /// Low 64 bits as an integer.
  std::uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }

  BitMask& operator^=(const BitMask& other);
  BitMask& operator&=(const BitMask& other);
  BitMask& operator|=(const BitMask& other);
  friend BitMask operator^(BitMask a, const BitMask& b) { return a ^= b; }
  friend BitMask operator&(BitMask a, const BitMask& b) { return a &= b; }
  friend BitMask operator|(BitMask a, const BitMask& b) { return a |= b; }

  /// Parity of popcount(a & b).
  friend bool odd_overlap(const BitMask& a, const BitMask& b);
  friend std::size_t overlap(const BitMask& a, const BitMask& b);

  friend bool operator==(const BitMask&, const BitMask&) = default;
  friend std::strong_ordering operator<=>(const BitMask& a, const BitMask& b);

  /// Hex digits of the integer Σ bit_i 2^i, most significant digit first,
  /// without a prefix; "0" for the empty mask.
  std::string to_hex() const;
  static BitMask from_hex(std::size_t nbits, const std::string& hex);

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gibbsforge
