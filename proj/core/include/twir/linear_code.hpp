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

// Binary linear codes used as syndrome compressors.

#ifndef TWIR_LINEAR_CODE_HPP_
#define TWIR_LINEAR_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "twir/bitseq.hpp"

namespace twir {

/// Full-row-rank m x n parity-check matrix over F2, stored sparsely.
/// Immutable after construction; the rank is certified by the constructor.
class ParityCheck {
 public:
  /// Builds from row adjacency lists (column indices, any order, no
  /// duplicates). Throws std::invalid_argument when the rank is below m.
  ParityCheck(std::size_t m, std::size_t n, std::vector<std::vector<std::uint32_t>> rows);

  /// Builds from dense rows of length n.
  static ParityCheck from_dense(const std::vector<BitSeq>& rows);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::size_t nnz() const { return col_of_edge_.size(); }
  double rate() const { return static_cast<double>(m_) / static_cast<double>(n_); }

  /// Column indices of row r, ascending.
  std::vector<std::uint32_t> row(std::size_t r) const;
  /// Row indices of column c, ascending.
  std::vector<std::uint32_t> col(std::size_t c) const;
  std::size_t row_degree(std::size_t r) const { return row_ptr_[r + 1] - row_ptr_[r]; }
  std::size_t col_degree(std::size_t c) const { return col_ptr_[c + 1] - col_ptr_[c]; }

  BitSeq dense_row(std::size_t r) const;

  // Edge-indexed view for message passing. Edges are numbered row-major.
  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& col_of_edge() const { return col_of_edge_; }
  const std::vector<std::size_t>& col_ptr() const { return col_ptr_; }
  const std::vector<std::uint32_t>& edges_of_col() const { return edges_of_col_; }

  friend bool operator==(const ParityCheck& a, const ParityCheck& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.row_ptr_ == b.row_ptr_ && a.col_of_edge_ == b.col_of_edge_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> col_of_edge_;
  std::vector<std::size_t> col_ptr_;
  std::vector<std::uint32_t> edges_of_col_;
};

struct DecodeResult {
  BitSeq error_estimate;
  bool converged = false;
  std::size_t iterations = 0;
};

/// t = H v over F2. Throws std::invalid_argument on length mismatch.
BitSeq syndrome(const ParityCheck& h, const BitSeq& v);

/// Exhaustive minimum-weight coset decoder for n <= 24.
///
/// Builds a coset-leader table once; each decode is a lookup. Ties are
/// broken toward the lexicographically smallest string (position 0 first).
class MlDecoder {
 public:
  static constexpr std::size_t kMaxLength = 24;

  explicit MlDecoder(const ParityCheck& h);

  DecodeResult decode(const BitSeq& t) const;
  std::size_t length() const { return n_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint32_t> leader_;
};

/// One-shot ML decode. crossover must be below 1/2.
DecodeResult ml_decode(const ParityCheck& h, const BitSeq& t, double crossover);

struct BpOptions {
  std::size_t max_iters = 100;
  double damping = 0.0;  ///< weight of the previous variable-to-check message
};

/// Syndrome sum-product decoding over a binary symmetric channel.
DecodeResult bp_decode(const ParityCheck& h, const BitSeq& t, double crossover, const BpOptions& opt = {});

/// Column-degree profile for progressive edge growth.
struct LdpcProfile {
  /// (degree, fraction of columns); fractions are normalized internally.
  std::vector<std::pair<int, double>> column_degrees{{3, 1.0}};
  int bfs_depth = 2;
  std::size_t visit_budget = 20000;

  static LdpcProfile regular(int dv);
  /// Irregular profile used for reconciliation.
  static LdpcProfile irregular();
};

enum class CodeKind { kAuto, kDense, kPeg };

struct CodeConfig {
  CodeKind kind = CodeKind::kAuto;
  LdpcProfile ldpc{};
  int max_retries = 64;
};

/// m = ceil(n * target_rate). Dense uniform full-rank for small n (auto: n <= 32),
/// otherwise PEG. Deterministic in seed.
ParityCheck code_for_rate(std::size_t n, double target_rate, const CodeConfig& config, std::uint64_t seed);

/// Uniform random full-rank m x n matrix (rejection sampling).
ParityCheck random_dense_code(std::size_t m, std::size_t n, std::uint64_t seed, int max_retries = 1000);

/// Progressive-edge-growth LDPC. Throws std::runtime_error if no full-rank
/// matrix is found within max_retries.
ParityCheck peg_code(std::size_t m, std::size_t n, const LdpcProfile& profile, std::uint64_t seed,
                     int max_retries = 64);

/// MacKay alist text format (1-based indices).
void write_alist(std::ostream& os, const ParityCheck& h);
ParityCheck read_alist(std::istream& is);

}  // namespace twir

#endif  // TWIR_LINEAR_CODE_HPP_
