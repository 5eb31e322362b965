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

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "twir/linear_code.hpp"

namespace twir {

void write_alist(std::ostream& os, const ParityCheck& h) {
  const std::size_t n = h.cols(), m = h.rows();
  std::size_t max_col = 0, max_row = 0;
  for (std::size_t c = 0; c < n; ++c) max_col = std::max(max_col, h.col_degree(c));
  for (std::size_t r = 0; r < m; ++r) max_row = std::max(max_row, h.row_degree(r));
  os << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
  for (std::size_t c = 0; c < n; ++c) os << h.col_degree(c) << (c + 1 < n ? ' ' : '\n');
  for (std::size_t r = 0; r < m; ++r) os << h.row_degree(r) << (r + 1 < m ? ' ' : '\n');
  // Each list is zero-padded to the maximum degree.
  for (std::size_t c = 0; c < n; ++c) {
    auto rows = h.col(c);
    for (std::size_t k = 0; k < max_col; ++k) {
      os << (k < rows.size() ? rows[k] + 1 : 0) << (k + 1 < max_col ? ' ' : '\n');
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    auto cols = h.row(r);
    for (std::size_t k = 0; k < max_row; ++k) {
      os << (k < cols.size() ? cols[k] + 1 : 0) << (k + 1 < max_row ? ' ' : '\n');
    }
  }
}

ParityCheck read_alist(std::istream& is) {
  auto next = [&]() {
    long long v;
    if (!(is >> v) || v < 0) throw std::invalid_argument("read_alist: malformed input");
    return static_cast<std::size_t>(v);
  };
  const std::size_t n = next(), m = next();
  const std::size_t max_col = next(), max_row = next();
  std::vector<std::size_t> col_deg(n), row_deg(m);
  for (auto& d : col_deg) d = next();
  for (auto& d : row_deg) d = next();
  std::vector<std::vector<std::uint32_t>> from_cols(m);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t seen = 0;
    for (std::size_t k = 0; k < max_col; ++k) {
      const std::size_t r = next();
      if (r == 0) continue;
      if (r > m) throw std::invalid_argument("read_alist: row index out of range");
      from_cols[r - 1].push_back(static_cast<std::uint32_t>(c));
      ++seen;
    }
    if (seen != col_deg[c]) throw std::invalid_argument("read_alist: column degree mismatch");
  }
  std::vector<std::vector<std::uint32_t>> rows(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < max_row; ++k) {
      const std::size_t c = next();
      if (c == 0) continue;
      if (c > n) throw std::invalid_argument("read_alist: column index out of range");
      rows[r].push_back(static_cast<std::uint32_t>(c - 1));
    }
    if (rows[r].size() != row_deg[r]) throw std::invalid_argument("read_alist: row degree mismatch");
    std::sort(rows[r].begin(), rows[r].end());
    std::sort(from_cols[r].begin(), from_cols[r].end());
    if (rows[r] != from_cols[r]) throw std::invalid_argument("read_alist: row and column lists disagree");
  }
  return ParityCheck(m, n, std::move(rows));
}

}  // namespace twir
