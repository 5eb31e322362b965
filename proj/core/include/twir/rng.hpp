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

#ifndef TWIR_RNG_HPP_
#define TWIR_RNG_HPP_

#include <cstdint>
#include <random>

namespace twir {

/// SplitMix64 finalizer. Used to derive independent child seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives the seed of child stream `stream` from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seedable, splittable generator (mt19937_64 seeded through SplitMix64).
///
/// All floating-point draws are built from raw 64-bit output rather than
/// std::uniform_real_distribution, so sequences are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  bool bernoulli(double p) { return uniform() < p; }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Standard normal deviate (Box-Muller on uniform()).
  double normal();

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Independent generator for child stream `stream`.
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace twir

#endif  // TWIR_RNG_HPP_
