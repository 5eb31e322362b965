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

#ifndef TWIR_TOEPLITZ_HPP_
#define TWIR_TOEPLITZ_HPP_

#include <cstddef>

#include "twir/bitseq.hpp"

namespace twir {

/// Multiplies input (length N) by the ell x N Toeplitz matrix
/// T[i][j] = seed[i - j + N - 1]. The seed must have length N + ell - 1.
BitSeq toeplitz_hash(const BitSeq& seed, const BitSeq& input, std::size_t ell);

}  // namespace twir

#endif  // TWIR_TOEPLITZ_HPP_
