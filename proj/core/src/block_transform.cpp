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

#include "twir/block_transform.hpp"

#include <stdexcept>

namespace twir {

BitSeq parity_seq(const BitSeq& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("parity_seq: odd length");
  const std::size_t n = s.size() / 2;
  BitSeq out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, s.get(2 * i) != s.get(2 * i + 1));
  return out;
}

BitSeq second_bit_seq(const BitSeq& s, const BitSeq& w1hat) {
  if (s.size() != 2 * w1hat.size()) throw std::invalid_argument("second_bit_seq: length mismatch");
  BitSeq out(w1hat.size());
  for (std::size_t i = 0; i < w1hat.size(); ++i) {
    if (!w1hat.get(i)) out.set(i, s.get(2 * i + 1));
  }
  return out;
}

BlockPartition partition(const BitSeq& w1hat) {
  BlockPartition p;
  const std::size_t ones = w1hat.weight();
  p.t1.reserve(ones);
  p.t0.reserve(w1hat.size() - ones);
  for (std::size_t i = 0; i < w1hat.size(); ++i) (w1hat.get(i) ? p.t1 : p.t0).push_back(i);
  return p;
}

BitSeq subseq(const BitSeq& s, const std::vector<std::size_t>& idx) {
  BitSeq out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= s.size()) throw std::out_of_range("subseq: index out of range");
    out.set(k, s.get(idx[k]));
  }
  return out;
}

}  // namespace twir
