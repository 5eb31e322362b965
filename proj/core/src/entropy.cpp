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

#include "twir/entropy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twir {

Dist::Dist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("Dist: empty alphabet");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("Dist: negative or NaN entry");
    total += p;
  }
  if (std::abs(total - 1.0) > kDistTolerance) {
    throw std::invalid_argument("Dist: entries sum to " + std::to_string(total));
  }
}

Dist Dist::uniform(std::size_t k) {
  if (k == 0) throw std::invalid_argument("Dist::uniform: k must be positive");
  return Dist(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Dist Dist::point_mass(std::size_t k, std::size_t at) {
  if (at >= k) throw std::invalid_argument("Dist::point_mass: index out of range");
  std::vector<double> v(k, 0.0);
  v[at] = 1.0;
  return Dist(std::move(v));
}

namespace {

double plog2p(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double binary_entropy(double p) {
  if (p < -kDistTolerance || p > 1.0 + kDistTolerance || std::isnan(p)) {
    throw std::domain_error("binary_entropy: p outside [0,1]");
  }
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return plog2p(p) + plog2p(1.0 - p);
}

double shannon_entropy(const Dist& p) {
  double h = 0.0;
  for (double x : p.probs()) h += plog2p(x);
  return h;
}

double divergence(const Dist& q, const Dist& p) {
  if (q.size() != p.size()) throw std::invalid_argument("divergence: alphabet mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += q[i] * std::log2(q[i] / p[i]);
  }
  return d;
}

double variational_distance(const Dist& p, const Dist& q) {
  if (q.size() != p.size()) throw std::invalid_argument("variational_distance: alphabet mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return d;
}

Dist type_of(std::span<const int> seq, std::size_t alphabet_size) {
  if (seq.empty()) throw std::invalid_argument("type_of: empty sequence");
  if (alphabet_size == 0) throw std::invalid_argument("type_of: empty alphabet");
  std::vector<std::size_t> counts(alphabet_size, 0);
  for (int s : seq) {
    if (s < 0 || static_cast<std::size_t>(s) >= alphabet_size) {
      throw std::invalid_argument("type_of: symbol outside alphabet");
    }
    ++counts[static_cast<std::size_t>(s)];
  }
  std::vector<double> probs(alphabet_size);
  const double n = static_cast<double>(seq.size());
  for (std::size_t i = 0; i < alphabet_size; ++i) probs[i] = static_cast<double>(counts[i]) / n;
  // Counts divide exactly to a sum within a few ulps of 1; renormalize the
  // largest entry so the Dist invariant holds for any length.
  double total = 0.0;
  for (double p : probs) total += p;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < alphabet_size; ++i) {
    if (probs[i] > probs[imax]) imax = i;
  }
  probs[imax] += 1.0 - total;
  return Dist(std::move(probs));
}

double type_deviation_bound(std::size_t n, double eps, std::size_t alphabet_size) {
  if (n == 0) throw std::invalid_argument("type_deviation_bound: n must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("type_deviation_bound: eps must be > 0");
  if (alphabet_size < 2) throw std::invalid_argument("type_deviation_bound: alphabet_size must be >= 2");
  const double nd = static_cast<double>(n);
  const double log2_bound = static_cast<double>(alphabet_size - 1) * std::log2(nd + 1.0) -
                            eps * eps * nd / (2.0 * std::numbers::ln2);
  if (log2_bound >= 0.0) return 1.0;
  return std::exp2(log2_bound);
}

}  // namespace twir
