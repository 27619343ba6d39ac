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

#include "gibbsforge/bitmask.hpp"

#include <bit>
#include <cstdlib>
#include <string_view>

#include "gibbsforge/errors.hpp"

namespace gibbsforge {

BitMask::BitMask(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

BitMask BitMask::single(std::size_t nbits, std::size_t bit) {
  BitMask m(nbits);
  m.set(bit);
  return m;
}

BitMask BitMask::from_u64(std::size_t nbits, std::uint64_t value) {
  BitMask m(nbits);
  for (std::size_t i = 0; i < nbits && i < 64; ++i) {
    if ((value >> i) & 1u) m.set(i);
  }
  return m;
}

void BitMask::set(std::size_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

bool BitMask::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> BitMask::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(k * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

BitMask& BitMask::operator^=(const BitMask& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitMask& BitMask::operator&=(const BitMask& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitMask& BitMask::operator|=(const BitMask& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

bool odd_overlap(const BitMask& a, const BitMask& b) { return overlap(a, b) & 1u; }

std::size_t overlap(const BitMask& a, const BitMask& b) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k) c += std::popcount(a.words_[k] & b.words_[k]);
  return c;
}

std::strong_ordering operator<=>(const BitMask& a, const BitMask& b) {
  if (auto c = a.nbits_ <=> b.nbits_; c != 0) return c;
  // Compare as integers, most significant word first.
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string BitMask::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t ndigits = (nbits_ + 3) / 4;
  for (std::size_t d = ndigits; d-- > 0;) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < nbits_ && test(i)) v |= 1u << b;
    }
    if (out.empty() && v == 0) continue;
    out.push_back(kDigits[v]);
  }
  return out.empty() ? "0" : out;
}

BitMask BitMask::from_hex(std::size_t nbits, const std::string& hex) {
  std::string_view s = hex;
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  if (s.empty()) throw InputError("empty hex mask");
  BitMask m(nbits);
  std::size_t pos = 0;
  for (std::size_t d = s.size(); d-- > 0; ++pos) {
    const char c = s[d];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw InputError("bad hex digit in mask: " + hex);
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((v >> b) & 1u)) continue;
      const std::size_t i = pos * 4 + b;
      if (i >= nbits) throw InputError("hex mask " + hex + " exceeds " + std::to_string(nbits) + " bits");
      m.set(i);
    }
  }
  return m;
}

namespace {

int read_cap(bool* overridden) {
  int cap = 12;
  bool ok = false;
  if (const char* env = std::getenv("GIBBSFORGE_CAP_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 16) {
      cap = static_cast<int>(v);
      ok = true;
    }
  }
  if (overridden) *overridden = ok;
  return cap;
}

}  // namespace

int dense_cap() { return read_cap(nullptr); }

bool dense_cap_overridden() {
  bool ok = false;
  read_cap(&ok);
  return ok;
}

}  // namespace gibbsforge
