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

// Rank computations over F2.

#ifndef TWIR_GF2_HPP_
#define TWIR_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace twir {

/// Rank of a dense matrix whose rows are packed words of width ceil(cols/64).
/// The rows are consumed (eliminated in place).
std::size_t gf2_rank_dense(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);

/// Rank of a sparse m x n matrix given by row adjacency lists.
///
/// Sparse forward elimination: rows with one active column pivot on it, and
/// when none is left a few columns are inactivated into a dense part. The
/// rows that never pivot are then reduced densely over the inactive columns.
/// Throws std::runtime_error when that dense step exceeds \p dense_budget
/// word operations.
std::size_t gf2_rank_sparse(std::size_t m, std::size_t n,
                            const std::vector<std::vector<std::uint32_t>>& rows,
                            double dense_budget = 8e9);

}  // namespace twir

#endif  // TWIR_GF2_HPP_
