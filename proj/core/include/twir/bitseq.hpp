// Copyright 2026 The twir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWIR_BITSEQ_HPP_
#define TWIR_BITSEQ_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twir {

/// Fixed-length binary sequence over F2, packed 64 bits per word.
/// Bit i lives in word i/64 at position i%64. Unused high bits of the last
/// word are always zero.
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters; position 0 is the first char.
  static BitSeq from_string(std::string_view bits);
  static BitSeq from_bits(const std::vector<std::uint8_t>& bits);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void push_back(bool v);

  /// Bounds-checked get.
  bool at(std::size_t i) const;

  std::size_t weight() const;

  BitSeq& operator^=(const BitSeq& o);
  friend BitSeq operator^(BitSeq a, const BitSeq& b) { a ^= b; return a; }
  friend bool operator==(const BitSeq& a, const BitSeq& b) {
    return a.len_ == b.len_ && a.words_ == b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  std::string to_string() const;
  /// Hex encoding: bit i maps to nibble i/4 at bit position 3 - i%4.
  std::string to_hex() const;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Hamming distance. Throws std::invalid_argument on length mismatch.
std::size_t hamming(const BitSeq& a, const BitSeq& b);

}  // namespace twir

#endif  // TWIR_BITSEQ_HPP_
