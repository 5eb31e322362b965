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

#include "twir/toeplitz.hpp"

#include <bit>
#include <stdexcept>

namespace twir {

BitSeq toeplitz_hash(const BitSeq& seed, const BitSeq& input, std::size_t ell) {
  const std::size_t n = input.size();
  if (ell > n) throw std::invalid_argument("toeplitz_hash: output longer than input");
  if (ell == 0) return BitSeq(0);
  if (seed.size() != n + ell - 1) throw std::invalid_argument("toeplitz_hash: seed length must be N + ell - 1");
  // With the input reversed, output bit i is the parity of seed[i .. i+N-1] & reversed.
  BitSeq rev(n);
  for (std::size_t j = 0; j < n; ++j) rev.set(n - 1 - j, input.get(j));
  const auto& sw = seed.words();
  const auto& rw = rev.words();
  const std::size_t words = rw.size();
  auto window = [&](std::size_t start, std::size_t k) {
    const std::size_t bit = start + 64 * k;
    const std::size_t w = bit >> 6, off = bit & 63;
    std::uint64_t v = w < sw.size() ? sw[w] >> off : 0;
    if (off && w + 1 < sw.size()) v |= sw[w + 1] << (64 - off);
    return v;
  };
  BitSeq out(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words; ++k) acc ^= window(i, k) & rw[k];
    out.set(i, std::popcount(acc) & 1);
  }
  return out;
}

}  // namespace twir
