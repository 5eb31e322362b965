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

// Length-2 block reduction: parities, kept second bits, kept/discarded sets.

#ifndef TWIR_BLOCK_TRANSFORM_HPP_
#define TWIR_BLOCK_TRANSFORM_HPP_

#include <cstddef>
#include <vector>

#include "twir/bitseq.hpp"

namespace twir {

/// Blocks split by the announced parity discrepancy. Indices are 0-based
/// and ascending.
struct BlockPartition {
  std::vector<std::size_t> t0;  ///< blocks whose discrepancy bit is 0 (kept)
  std::vector<std::size_t> t1;  ///< blocks whose discrepancy bit is 1 (discarded)
};

/// out[i] = s[2i] ^ s[2i+1]. Throws on odd length.
BitSeq parity_seq(const BitSeq& s);

/// out[i] = s[2i+1] if w1hat[i] == 0, else 0.
BitSeq second_bit_seq(const BitSeq& s, const BitSeq& w1hat);

BlockPartition partition(const BitSeq& w1hat);

/// Bits of s at idx, in the given (ascending) order.
BitSeq subseq(const BitSeq& s, const std::vector<std::size_t>& idx);

}  // namespace twir

#endif  // TWIR_BLOCK_TRANSFORM_HPP_
