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

// Randomized and exhaustive self-checks, shared by the command-line tool.

#ifndef TWIR_VERIFICATION_HPP_
#define TWIR_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "twir/bell_channel.hpp"
#include "twir/rng.hpp"

namespace twir {

struct Assertion {
  std::string name;
  double max_deviation = 0.0;  ///< worst violation or mismatch seen
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Assertion> assertions;
  bool passed() const;
};

/// Dirichlet(1,1,1,1) weights; with probability 1/8 one entry is zeroed.
BellDiagonal random_bell_diagonal(Rng& rng);

SuiteResult verify_theorem3(std::size_t samples, std::uint64_t seed);
SuiteResult verify_lemmas(std::size_t samples, std::uint64_t seed);
SuiteResult verify_twirl(std::size_t samples, std::uint64_t seed);
SuiteResult verify_coset(std::size_t samples, std::uint64_t seed);
SuiteResult verify_types(std::size_t samples, std::uint64_t seed);
SuiteResult verify_hash(std::size_t seeds, std::uint64_t seed);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, std::size_t samples, std::uint64_t seed);

}  // namespace twir

#endif  // TWIR_VERIFICATION_HPP_
