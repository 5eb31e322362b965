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

// Bell-diagonal channel parameters, the six-state and BB84 families, and
// raw-key pair sampling.

#ifndef TWIR_BELL_CHANNEL_HPP_
#define TWIR_BELL_CHANNEL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "twir/bitseq.hpp"
#include "twir/entropy.hpp"

namespace twir {

/// Weights of the four Bell states. The first index is the bit-flip
/// component, the second the phase component.
struct BellDiagonal {
  double p00 = 1.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p11 = 0.0;

  /// Validates and returns. Throws std::invalid_argument.
  static BellDiagonal make(double p00, double p10, double p01, double p11);

  /// Weight of Bell state (bitflip, phase).
  double at(int bitflip, int phase) const;
  /// Probability that a z-basis bit differs: p10 + p11.
  double bit_error() const { return p10 + p11; }
  /// Probability of a phase error: p01 + p11.
  double phase_error() const { return p01 + p11; }
  /// Ordered (p00, p01, p10, p11), i.e. index 2*bitflip + phase.
  std::array<double, 4> by_index() const { return {p00, p01, p10, p11}; }
  Dist as_dist() const { return Dist{p00, p10, p01, p11}; }

  void validate() const;
};

/// Laws of the block variables after the parity/second-bit reduction.
struct DerivedBlockDists {
  Dist w1_dist{0.5, 0.5};          ///< parity discrepancy of a block
  std::optional<Dist> w2_given_w1_0; ///< second-bit discrepancy, given parity agreement
  Dist pbar{0.5, 0.5};             ///< same as w1_dist, kept separate by role
  std::optional<BellDiagonal> pprime; ///< Bell weights of the kept pair
};

BellDiagonal six_state_point(double e);
BellDiagonal bb84_family(double e, double p11);

DerivedBlockDists derived_dists(const BellDiagonal& p);

/// x uniform, y = x ^ noise with Bernoulli(p.bit_error()) noise.
std::pair<BitSeq, BitSeq> sample_pair(const BellDiagonal& p, std::size_t length, std::uint64_t seed);

}  // namespace twir

#endif  // TWIR_BELL_CHANNEL_HPP_
