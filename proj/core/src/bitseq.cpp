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

#include "twir/bitseq.hpp"

#include <bit>
#include <stdexcept>

namespace twir {

BitSeq BitSeq::from_string(std::string_view bits) {
  BitSeq s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') s.set(i, true);
    else if (bits[i] != '0') throw std::invalid_argument("BitSeq::from_string: expected '0' or '1'");
  }
  return s;
}

BitSeq BitSeq::from_bits(const std::vector<std::uint8_t>& bits) {
  BitSeq s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) s.set(i, bits[i] != 0);
  return s;
}

void BitSeq::push_back(bool v) {
  if ((len_ & 63) == 0) words_.push_back(0);
  ++len_;
  set(len_ - 1, v);
}

bool BitSeq::at(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("BitSeq::at: index out of range");
  return get(i);
}

std::size_t BitSeq::weight() const {
  std::size_t w = 0;
  for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

BitSeq& BitSeq::operator^=(const BitSeq& o) {
  if (o.len_ != len_) throw std::invalid_argument("BitSeq xor: length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

std::string BitSeq::to_string() const {
  std::string out(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) if (get(i)) out[i] = '1';
  return out;
}

std::string BitSeq::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((len_ + 3) / 4, '0');
  for (std::size_t n = 0; n < out.size(); ++n) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * n + b;
      if (i < len_ && get(i)) v |= 1u << (3 - b);
    }
    out[n] = kDigits[v];
  }
  return out;
}

std::size_t hamming(const BitSeq& a, const BitSeq& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.words().size(); ++k) {
    d += static_cast<std::size_t>(std::popcount(a.words()[k] ^ b.words()[k]));
  }
  return d;
}

}  // namespace twir
