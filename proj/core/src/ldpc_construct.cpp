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
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "twir/linear_code.hpp"
#include "twir/rng.hpp"

namespace twir {

LdpcProfile LdpcProfile::regular(int dv) {
  LdpcProfile p;
  p.column_degrees = {{dv, 1.0}};
  return p;
}

LdpcProfile LdpcProfile::irregular() {
  LdpcProfile p;
  p.column_degrees = {{2, 0.4733}, {3, 0.3346}, {4, 0.0102}, {5, 0.0427}, {12, 0.1392}};
  return p;
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Min segment tree over row degrees; masked rows hold kInf.
class MinTree {
 public:
  explicit MinTree(std::size_t n) : size_(1) {
    while (size_ < n) size_ <<= 1;
    t_.assign(2 * size_, kInf);
    for (std::size_t i = 0; i < n; ++i) t_[size_ + i] = 0;
    for (std::size_t i = size_; i-- > 1;) t_[i] = std::min(t_[2 * i], t_[2 * i + 1]);
  }
  void set(std::size_t i, std::uint32_t v) {
    i += size_;
    t_[i] = v;
    for (i >>= 1; i >= 1; i >>= 1) t_[i] = std::min(t_[2 * i], t_[2 * i + 1]);
  }
  std::uint32_t get(std::size_t i) const { return t_[size_ + i]; }
  std::uint32_t min(std::size_t lo, std::size_t hi) const {  // [lo, hi)
    std::uint32_t r = kInf;
    for (lo += size_, hi += size_; lo < hi; lo >>= 1, hi >>= 1) {
      if (lo & 1) r = std::min(r, t_[lo++]);
      if (hi & 1) r = std::min(r, t_[--hi]);
    }
    return r;
  }
  // First index in [lo, hi) whose value is <= v, or hi.
  std::size_t first_at_most(std::size_t lo, std::size_t hi, std::uint32_t v) const {
    return find(1, 0, size_, lo, hi, v);
  }

 private:
  std::size_t find(std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
                   std::uint32_t v) const {
    if (nr <= lo || hi <= nl || t_[node] > v) return hi;
    if (nr - nl == 1) return nl;
    const std::size_t mid = (nl + nr) / 2;
    const std::size_t left = find(2 * node, nl, mid, lo, hi, v);
    if (left != hi) return left;
    return find(2 * node + 1, mid, nr, lo, hi, v);
  }

  std::size_t size_;
  std::vector<std::uint32_t> t_;
};

std::vector<int> assign_degrees(std::size_t n, const LdpcProfile& profile, Rng& rng) {
  if (profile.column_degrees.empty()) throw std::invalid_argument("LdpcProfile: empty degree profile");
  double total = 0.0;
  for (auto [d, f] : profile.column_degrees) {
    if (d < 1 || f < 0.0) throw std::invalid_argument("LdpcProfile: invalid degree entry");
    total += f;
  }
  if (!(total > 0.0)) throw std::invalid_argument("LdpcProfile: fractions sum to zero");
  std::vector<int> degs;
  degs.reserve(n);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < profile.column_degrees.size(); ++k) {
    const auto [d, f] = profile.column_degrees[k];
    std::size_t cnt = k + 1 == profile.column_degrees.size()
                          ? n - assigned
                          : static_cast<std::size_t>(std::llround(f / total * static_cast<double>(n)));
    cnt = std::min(cnt, n - assigned);
    degs.insert(degs.end(), cnt, d);
    assigned += cnt;
  }
  for (std::size_t i = degs.size(); i-- > 1;) std::swap(degs[i], degs[rng.below(i + 1)]);
  return degs;
}

class PegBuilder {
 public:
  PegBuilder(std::size_t m, std::size_t n, const LdpcProfile& prof, Rng& rng)
      : m_(m), n_(n), prof_(prof), rng_(rng), rows_(m), cols_(n), tree_(m),
        row_mark_(m, 0), col_mark_(n, 0) {}

  std::vector<std::vector<std::uint32_t>> build() {
    auto degs = assign_degrees(n_, prof_, rng_);
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degs[a] < degs[b]; });
    for (auto c : order) {
      const std::size_t deg = std::min<std::size_t>(static_cast<std::size_t>(degs[c]), m_);
      while (cols_[c].size() < deg) {
        const std::size_t r = pick(c);
        if (r == m_) break;
        connect(c, r);
      }
    }
    return std::move(rows_);
  }

 private:
  void connect(std::size_t c, std::size_t r) {
    rows_[r].push_back(static_cast<std::uint32_t>(c));
    cols_[c].push_back(static_cast<std::uint32_t>(r));
    tree_.set(r, static_cast<std::uint32_t>(rows_[r].size()));
  }

  // Random row attaining the current tree minimum.
  std::size_t random_min() {
    const std::uint32_t best = tree_.min(0, m_);
    if (best == kInf) return m_;
    const std::size_t start = rng_.below(m_);
    std::size_t r = tree_.first_at_most(start, m_, best);
    if (r == m_) r = tree_.first_at_most(0, start, best);
    return r;
  }

  // Least loaded row among those the predicate accepts, ties broken uniformly.
  template <class Pred>
  std::size_t scan_min(Pred ok) {
    std::size_t best = SIZE_MAX, pick = m_, ties = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (!ok(r)) continue;
      const std::size_t d = rows_[r].size();
      if (d < best) { best = d; pick = r; ties = 1; }
      else if (d == best && rng_.below(++ties) == 0) pick = r;
    }
    return pick;
  }

  std::size_t pick(std::size_t c) {
    if (cols_[c].empty()) return random_min();
    ++epoch_;
    std::vector<std::uint32_t> reached, layer, next;
    col_mark_[c] = epoch_;
    for (auto r : cols_[c]) { row_mark_[r] = epoch_; layer.push_back(r); }
    reached = layer;
    std::vector<std::uint32_t> deepest = layer;
    std::size_t visits = layer.size();
    for (int depth = 1; depth < prof_.bfs_depth && visits < prof_.visit_budget; ++depth) {
      next.clear();
      for (auto r : layer) {
        for (auto c2 : rows_[r]) {
          if (col_mark_[c2] == epoch_) continue;
          col_mark_[c2] = epoch_;
          for (auto r2 : cols_[c2]) {
            if (row_mark_[r2] == epoch_) continue;
            row_mark_[r2] = epoch_;
            next.push_back(r2);
            ++visits;
          }
        }
        if (visits >= prof_.visit_budget) break;
      }
      if (next.empty()) break;
      reached.insert(reached.end(), next.begin(), next.end());
      deepest = next;
      std::swap(layer, next);
    }
    std::size_t r = m_;
    if (reached.size() * 32 > m_) {
      r = scan_min([&](std::size_t x) { return row_mark_[x] != epoch_; });
    } else {
      // Mask everything reached, take the least loaded unreached row.
      for (auto x : reached) tree_.set(x, kInf);
      r = random_min();
      for (auto x : reached) tree_.set(x, static_cast<std::uint32_t>(rows_[x].size()));
    }
    if (r != m_) return r;
    // Every row is reached: fall back to the farthest layer, then to any free row.
    auto free_row = [&](std::size_t x) {
      return std::find(cols_[c].begin(), cols_[c].end(), x) == cols_[c].end();
    };
    std::size_t best = SIZE_MAX;
    std::vector<std::uint32_t> cand;
    for (auto x : deepest) {
      if (!free_row(x)) continue;
      const std::size_t d = rows_[x].size();
      if (d < best) { best = d; cand.clear(); }
      if (d == best) cand.push_back(x);
    }
    if (!cand.empty()) return cand[rng_.below(cand.size())];
    return scan_min(free_row);
  }

  std::size_t m_, n_;
  const LdpcProfile& prof_;
  Rng& rng_;
  std::vector<std::vector<std::uint32_t>> rows_, cols_;
  MinTree tree_;
  std::vector<std::uint32_t> row_mark_, col_mark_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

ParityCheck peg_code(std::size_t m, std::size_t n, const LdpcProfile& profile, std::uint64_t seed, int max_retries) {
  if (m == 0 || m >= n) throw std::invalid_argument("peg_code: need 0 < m < n");
  if (profile.bfs_depth < 1) throw std::invalid_argument("peg_code: bfs_depth must be >= 1");
  // With only even column degrees the rows sum to zero, so rank < m always.
  bool any_odd = false;
  for (auto [d, f] : profile.column_degrees) any_odd = any_odd || (f > 0.0 && d % 2 == 1);
  if (!any_odd) throw std::invalid_argument("peg_code: profile needs an odd column degree for full rank");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    auto rows = PegBuilder(m, n, profile, rng).build();
    try {
      return ParityCheck(m, n, std::move(rows));
    } catch (const std::invalid_argument&) {
      // rank deficient, draw again
    }
  }
  throw std::runtime_error("peg_code: no full-rank matrix within retry limit");
}

ParityCheck random_dense_code(std::size_t m, std::size_t n, std::uint64_t seed, int max_retries) {
  if (m == 0 || m > n) throw std::invalid_argument("random_dense_code: need 0 < m <= n");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::vector<std::uint32_t>> rows(m);
    for (auto& r : rows) {
      for (std::size_t c = 0; c < n; ++c) if (rng.coin()) r.push_back(static_cast<std::uint32_t>(c));
    }
    try {
      return ParityCheck(m, n, std::move(rows));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("random_dense_code: no full-rank matrix within retry limit");
}

ParityCheck code_for_rate(std::size_t n, double target_rate, const CodeConfig& config, std::uint64_t seed) {
  if (!(target_rate > 0.0 && target_rate < 1.0)) throw std::invalid_argument("code_for_rate: rate must be in (0, 1)");
  if (n == 0) throw std::invalid_argument("code_for_rate: n must be positive");
  const auto m = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * target_rate - 1e-9));
  CodeKind kind = config.kind;
  if (kind == CodeKind::kAuto) kind = n <= 32 ? CodeKind::kDense : CodeKind::kPeg;
  if (m > n || (m == n && kind == CodeKind::kPeg)) {
    throw std::invalid_argument("code_for_rate: rate too high for this length");
  }
  if (kind == CodeKind::kDense) return random_dense_code(m, n, seed, std::max(config.max_retries, 1000));
  return peg_code(m, n, config.ldpc, seed, config.max_retries);
}

}  // namespace twir
