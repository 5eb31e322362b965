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

#include "twir/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace twir {

std::size_t gf2_rank_dense(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::size_t piv = rank;
    while (piv < m && !(rows[piv][w] & bit)) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < m; ++r) {
      if (rows[r][w] & bit) {
        auto& row = rows[r];
        for (std::size_t k = w; k < row.size(); ++k) row[k] ^= p[k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t gf2_rank_sparse(std::size_t m, std::size_t n,
                            const std::vector<std::vector<std::uint32_t>>& rows,
                            double dense_budget) {
  if (rows.size() != m) throw std::invalid_argument("gf2_rank_sparse: row count mismatch");
  // Forward elimination with inactivation: a row with a single active column
  // pivots on it; when none exists, columns are moved to a dense part.
  std::vector<std::vector<std::uint32_t>> active(rows);
  std::vector<std::vector<std::uint32_t>> cols(n);
  for (std::size_t r = 0; r < m; ++r) {
    for (auto c : rows[r]) {
      if (c >= n) throw std::invalid_argument("gf2_rank_sparse: column out of range");
      cols[c].push_back(static_cast<std::uint32_t>(r));
    }
  }
  std::vector<std::vector<std::uint64_t>> dense(m);
  std::vector<char> pivoted(m, 0), col_done(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::size_t r = 0; r < m; ++r) if (active[r].size() == 1) queue.push_back(static_cast<std::uint32_t>(r));
  std::size_t pivots = 0, inactive = 0;

  auto drop = [&](std::uint32_t r, std::uint32_t c) {
    auto& a = active[r];
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == c) { a[k] = a.back(); a.pop_back(); break; }
    }
    if (a.size() == 1) queue.push_back(r);
  };

  std::size_t remaining = m;
  while (true) {
    while (!queue.empty()) {
      const auto r = queue.back();
      queue.pop_back();
      if (pivoted[r] || active[r].size() != 1) continue;
      const auto c = active[r][0];
      pivoted[r] = 1;
      col_done[c] = 1;
      ++pivots;
      --remaining;
      active[r].clear();
      const auto& src = dense[r];
      for (auto r2 : cols[c]) {
        if (pivoted[r2]) continue;
        auto& dst = dense[r2];
        if (dst.size() < src.size()) dst.resize(src.size(), 0);
        for (std::size_t k = 0; k < src.size(); ++k) dst[k] ^= src[k];
        drop(r2, c);
      }
    }
    // Stuck: take the unpivoted row with the fewest active columns and
    // inactivate all of them but one.
    std::size_t best = m, best_deg = SIZE_MAX;
    for (std::size_t r = 0; r < m && best_deg > 2; ++r) {
      if (pivoted[r] || active[r].size() < 2) continue;
      if (active[r].size() < best_deg) { best = r; best_deg = active[r].size(); }
    }
    if (best == m) break;
    std::vector<std::uint32_t> victims(active[best].begin(), active[best].end());
    std::sort(victims.begin(), victims.end(), [&](auto a, auto b) {
      return cols[a].size() != cols[b].size() ? cols[a].size() > cols[b].size() : a < b;
    });
    victims.pop_back();
    for (auto c : victims) {
      const std::size_t bit = inactive++;
      col_done[c] = 1;
      for (auto r2 : cols[c]) {
        if (pivoted[r2]) continue;
        auto& d = dense[r2];
        if (d.size() <= bit / 64) d.resize(bit / 64 + 1, 0);
        d[bit / 64] ^= std::uint64_t{1} << (bit % 64);
        drop(r2, c);
      }
    }
  }
  if (remaining == 0) return pivots;
  const std::size_t words = (inactive + 63) / 64;
  const double cost = static_cast<double>(remaining) * static_cast<double>(remaining) * static_cast<double>(words);
  if (cost > dense_budget) throw std::runtime_error("gf2_rank_sparse: dense core too large");
  std::vector<std::vector<std::uint64_t>> core;
  core.reserve(remaining);
  for (std::size_t r = 0; r < m; ++r) {
    if (pivoted[r]) continue;
    auto d = std::move(dense[r]);
    d.resize(words, 0);
    core.push_back(std::move(d));
  }
  return pivots + gf2_rank_dense(std::move(core), inactive);
}

}  // namespace twir
