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

#include "twir/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "twir/gf2.hpp"

namespace twir {

ParityCheck::ParityCheck(std::size_t m, std::size_t n, std::vector<std::vector<std::uint32_t>> rows)
    : m_(m), n_(n) {
  if (m == 0 || n == 0) throw std::invalid_argument("ParityCheck: empty dimensions");
  if (m > n) throw std::invalid_argument("ParityCheck: more rows than columns");
  if (rows.size() != m) throw std::invalid_argument("ParityCheck: row count mismatch");
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) {
      throw std::invalid_argument("ParityCheck: duplicate entry in a row");
    }
    if (!r.empty() && r.back() >= n) throw std::invalid_argument("ParityCheck: column out of range");
  }
  if (gf2_rank_sparse(m, n, rows) != m) throw std::invalid_argument("ParityCheck: matrix is not full row rank");

  row_ptr_.assign(m + 1, 0);
  for (std::size_t r = 0; r < m; ++r) row_ptr_[r + 1] = row_ptr_[r] + rows[r].size();
  col_of_edge_.reserve(row_ptr_[m]);
  for (const auto& r : rows) col_of_edge_.insert(col_of_edge_.end(), r.begin(), r.end());

  col_ptr_.assign(n + 1, 0);
  for (auto c : col_of_edge_) ++col_ptr_[c + 1];
  for (std::size_t c = 0; c < n; ++c) col_ptr_[c + 1] += col_ptr_[c];
  edges_of_col_.resize(col_of_edge_.size());
  std::vector<std::size_t> fill(col_ptr_.begin(), col_ptr_.end() - 1);
  for (std::size_t e = 0; e < col_of_edge_.size(); ++e) {
    edges_of_col_[fill[col_of_edge_[e]]++] = static_cast<std::uint32_t>(e);
  }
}

ParityCheck ParityCheck::from_dense(const std::vector<BitSeq>& rows) {
  if (rows.empty()) throw std::invalid_argument("ParityCheck::from_dense: no rows");
  const std::size_t n = rows.front().size();
  std::vector<std::vector<std::uint32_t>> adj(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("ParityCheck::from_dense: ragged rows");
    for (std::size_t c = 0; c < n; ++c) if (rows[r].get(c)) adj[r].push_back(static_cast<std::uint32_t>(c));
  }
  return ParityCheck(rows.size(), n, std::move(adj));
}

std::vector<std::uint32_t> ParityCheck::row(std::size_t r) const {
  return {col_of_edge_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]),
          col_of_edge_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1])};
}

std::vector<std::uint32_t> ParityCheck::col(std::size_t c) const {
  std::vector<std::uint32_t> out;
  out.reserve(col_degree(c));
  for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) {
    const auto e = edges_of_col_[k];
    const auto r = std::upper_bound(row_ptr_.begin(), row_ptr_.end(), e) - row_ptr_.begin() - 1;
    out.push_back(static_cast<std::uint32_t>(r));
  }
  return out;
}

BitSeq ParityCheck::dense_row(std::size_t r) const {
  BitSeq out(n_);
  for (std::size_t e = row_ptr_[r]; e < row_ptr_[r + 1]; ++e) out.set(col_of_edge_[e], true);
  return out;
}

BitSeq syndrome(const ParityCheck& h, const BitSeq& v) {
  if (v.size() != h.cols()) throw std::invalid_argument("syndrome: length mismatch");
  BitSeq t(h.rows());
  const auto& rp = h.row_ptr();
  const auto& ce = h.col_of_edge();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool s = false;
    for (std::size_t e = rp[r]; e < rp[r + 1]; ++e) s ^= v.get(ce[e]);
    t.set(r, s);
  }
  return t;
}

namespace {

// True when a precedes b: lower weight, then '0' at the first differing position.
bool better(std::uint32_t a, std::uint32_t b) {
  const int wa = std::popcount(a), wb = std::popcount(b);
  if (wa != wb) return wa < wb;
  const std::uint32_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) == 0;
}

}  // namespace

MlDecoder::MlDecoder(const ParityCheck& h) : n_(h.cols()), m_(h.rows()) {
  if (n_ > kMaxLength) throw std::invalid_argument("MlDecoder: code too long for exhaustive search");
  std::vector<std::uint32_t> col_syn(n_, 0);
  for (std::size_t r = 0; r < m_; ++r) {
    for (auto c : h.row(r)) col_syn[c] |= std::uint32_t{1} << r;
  }
  constexpr std::uint32_t kUnset = UINT32_MAX;
  leader_.assign(std::size_t{1} << m_, kUnset);
  std::uint32_t v = 0, s = 0;
  const std::uint64_t total = std::uint64_t{1} << n_;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) {
      const int bit = std::countr_zero(k);
      v ^= std::uint32_t{1} << bit;
      s ^= col_syn[static_cast<std::size_t>(bit)];
    }
    auto& cur = leader_[s];
    if (cur == kUnset || better(v, cur)) cur = v;
  }
}

DecodeResult MlDecoder::decode(const BitSeq& t) const {
  if (t.size() != m_) throw std::invalid_argument("MlDecoder::decode: syndrome length mismatch");
  std::uint32_t s = 0;
  for (std::size_t r = 0; r < m_; ++r) if (t.get(r)) s |= std::uint32_t{1} << r;
  DecodeResult out;
  out.error_estimate = BitSeq(n_);
  const auto v = leader_[s];
  for (std::size_t i = 0; i < n_; ++i) out.error_estimate.set(i, (v >> i) & 1u);
  out.converged = true;
  return out;
}

DecodeResult ml_decode(const ParityCheck& h, const BitSeq& t, double crossover) {
  if (!(crossover >= 0.0 && crossover < 0.5)) throw std::invalid_argument("ml_decode: crossover must be in [0, 1/2)");
  return MlDecoder(h).decode(t);
}

DecodeResult bp_decode(const ParityCheck& h, const BitSeq& t, double crossover, const BpOptions& opt) {
  if (t.size() != h.rows()) throw std::invalid_argument("bp_decode: syndrome length mismatch");
  if (!(crossover >= 0.0 && crossover < 0.5)) throw std::invalid_argument("bp_decode: crossover must be in [0, 1/2)");
  const double p = std::max(crossover, 1e-12);
  const double prior = std::log((1.0 - p) / p);
  constexpr double kClip = 1.0 - 1e-12;

  const auto& rp = h.row_ptr();
  const auto& ce = h.col_of_edge();
  const auto& cp = h.col_ptr();
  const auto& ec = h.edges_of_col();
  const std::size_t m = h.rows(), n = h.cols(), edges = h.nnz();

  std::vector<double> v2c(edges, prior), c2v(edges, 0.0), th(edges);
  std::vector<char> hard(n, 0);

  auto matches = [&]() {
    for (std::size_t r = 0; r < m; ++r) {
      bool s = false;
      for (std::size_t e = rp[r]; e < rp[r + 1]; ++e) s ^= hard[ce[e]] != 0;
      if (s != t.get(r)) return false;
    }
    return true;
  };
  auto result = [&](bool ok, std::size_t it) {
    DecodeResult out;
    out.error_estimate = BitSeq(n);
    for (std::size_t i = 0; i < n; ++i) if (hard[i]) out.error_estimate.set(i, true);
    out.converged = ok;
    out.iterations = it;
    return out;
  };

  if (matches()) return result(true, 0);
  for (std::size_t it = 1; it <= opt.max_iters; ++it) {
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t b = rp[r], e_end = rp[r + 1];
      const double sign = t.get(r) ? -1.0 : 1.0;
      for (std::size_t e = b; e < e_end; ++e) th[e] = std::tanh(0.5 * v2c[e]);
      // Exclusive products from a forward pass and a running backward product.
      double fwd = 1.0;
      for (std::size_t e = b; e < e_end; ++e) {
        c2v[e] = fwd;
        fwd *= th[e];
      }
      double bwd = 1.0;
      for (std::size_t e = e_end; e-- > b;) {
        const double prod = std::clamp(c2v[e] * bwd, -kClip, kClip);
        c2v[e] = sign * 2.0 * std::atanh(prod);
        bwd *= th[e];
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      double total = prior;
      for (std::size_t k = cp[c]; k < cp[c + 1]; ++k) total += c2v[ec[k]];
      hard[c] = total < 0.0;
      for (std::size_t k = cp[c]; k < cp[c + 1]; ++k) {
        const auto e = ec[k];
        const double fresh = total - c2v[e];
        v2c[e] = opt.damping > 0.0 ? (1.0 - opt.damping) * fresh + opt.damping * v2c[e] : fresh;
      }
    }
    if (matches()) return result(true, it);
  }
  return result(false, opt.max_iters);
}

}  // namespace twir
