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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "twir/bell_channel.hpp"
#include "twir/dense.hpp"
#include "twir/entropy.hpp"
#include "twir/quantum_oracle.hpp"
#include "twir/rng.hpp"

namespace twir {
namespace {

Dist random_dist(Rng& rng, std::size_t k) {
  std::vector<double> v(k);
  double s = 0.0;
  for (auto& x : v) s += (x = -std::log(1.0 - rng.uniform()));
  for (auto& x : v) x /= s;
  double t = 0.0;
  for (std::size_t i = 1; i < k; ++i) t += v[i];
  v[0] = 1.0 - t;
  return Dist(v);
}

TEST(Dist, RejectsBadInput) {
  EXPECT_THROW(Dist({}), std::invalid_argument);
  EXPECT_THROW(Dist({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(Dist({1.5, -0.5}), std::invalid_argument);
  EXPECT_NO_THROW(Dist({0.5, 0.5 + 1e-13}));
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  // 2 - (3/4) log2 3, evaluated at 30 digits.
  EXPECT_NEAR(binary_entropy(0.25), 0.811278124459132863909695792039, 1e-15);
}

TEST(BinaryEntropy, DomainErrors) {
  EXPECT_THROW(binary_entropy(-1e-9), std::domain_error);
  EXPECT_THROW(binary_entropy(1.0 + 1e-9), std::domain_error);
  EXPECT_THROW(binary_entropy(std::nan("")), std::domain_error);
  EXPECT_NO_THROW(binary_entropy(-1e-13));
}

TEST(BinaryEntropy, Symmetric) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform();
    EXPECT_NEAR(binary_entropy(p), binary_entropy(1.0 - p), 1e-12);
  }
}

TEST(ShannonEntropy, Examples) {
  EXPECT_EQ(shannon_entropy(Dist::point_mass(4, 2)), 0.0);
  EXPECT_NEAR(shannon_entropy(Dist::uniform(4)), 2.0, 1e-15);
}

TEST(ShannonEntropy, UniformIsLogK) {
  for (std::size_t k = 2; k <= 64; ++k) {
    EXPECT_NEAR(shannon_entropy(Dist::uniform(k)), std::log2(static_cast<double>(k)), 1e-12) << k;
  }
}

TEST(ShannonEntropy, MatchesEigenvalueEntropyOfBellMixture) {
  const BellDiagonal p = six_state_point(0.1);
  const double direct = von_neumann_entropy(bell_diagonal_matrix(p));
  EXPECT_NEAR(shannon_entropy(p.as_dist()), direct, 1e-12);
}

TEST(Divergence, Examples) {
  const Dist p{0.3, 0.7};
  EXPECT_EQ(divergence(p, p), 0.0);
  EXPECT_NEAR(divergence(Dist{1.0, 0.0}, Dist{0.5, 0.5}), 1.0, 1e-15);
  EXPECT_EQ(divergence(Dist{0.5, 0.5}, Dist{1.0, 0.0}), std::numeric_limits<double>::infinity());
}

TEST(Divergence, PinskerAndNonnegativity) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 2 + rng.below(6);
    const Dist q = random_dist(rng, k), p = random_dist(rng, k);
    const double d = divergence(q, p);
    const double l1 = variational_distance(q, p);
    EXPECT_GE(d, -1e-12);
    EXPECT_GE(d + 1e-12, l1 * l1 / (2.0 * std::numbers::ln2));
    EXPECT_NEAR(divergence(q, q), 0.0, 1e-12);
  }
}

TEST(TypeOf, Examples) {
  const std::vector<int> a{0, 0, 1, 1};
  EXPECT_EQ(type_of(a, 2), (Dist{0.5, 0.5}));
  const std::vector<int> z(17, 0);
  EXPECT_EQ(type_of(z, 3), Dist::point_mass(3, 0));
  EXPECT_THROW(type_of(std::vector<int>{}, 2), std::invalid_argument);
  EXPECT_THROW(type_of(std::vector<int>{0, 2}, 2), std::invalid_argument);
}

TEST(TypeOf, PermutationInvariant) {
  Rng rng(13);
  std::vector<int> s(101);
  for (auto& x : s) x = static_cast<int>(rng.below(4));
  const Dist t = type_of(s, 4);
  std::mt19937_64 eng(5);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(s.begin(), s.end(), eng);
    EXPECT_EQ(type_of(s, 4), t);
  }
}

TEST(TypeDeviationBound, DecaysInN) {
  double prev = 2.0;
  for (std::size_t n = 10; n <= 2000; n += 10) {
    const double b = type_deviation_bound(n, 1.0, 2);
    EXPECT_LE(b, 1.0);
    // Once the exponent dominates, the bound is strictly decreasing.
    if (n >= 30 && prev > 0.0) EXPECT_LT(b, prev);
    EXPECT_LE(b, prev);
    prev = b;
  }
  EXPECT_LT(type_deviation_bound(5000, 1.0, 2), 1e-300);
}

TEST(TypeDeviationBound, ClampsAndValidates) {
  EXPECT_EQ(type_deviation_bound(1, 0.1, 2), 1.0);
  EXPECT_THROW(type_deviation_bound(0, 0.1, 2), std::invalid_argument);
  EXPECT_THROW(type_deviation_bound(10, 0.0, 2), std::invalid_argument);
  EXPECT_THROW(type_deviation_bound(10, 0.1, 1), std::invalid_argument);
}

TEST(TypeDeviationBound, MatchesDirectFormula) {
  // Direct evaluation in long double on a grid.
  for (std::size_t n : {200u, 500u, 1000u, 3000u}) {
    for (double eps : {0.2, 0.3, 0.5}) {
      const long double v = std::pow(static_cast<long double>(n) + 1.0L, 3.0L) *
                            std::exp2(-static_cast<long double>(eps * eps) * n / (2.0L * std::numbers::ln2_v<long double>));
      const double expect = static_cast<double>(std::min(1.0L, v));
      EXPECT_NEAR(type_deviation_bound(n, eps, 4), expect, 1e-12 * std::max(1.0, expect)) << n << ' ' << eps;
    }
  }
}

TEST(TypeDeviationBound, MonteCarloBelowBound) {
  // Bound is loose at small n; pick (n, eps) where it is informative.
  const std::size_t n = 1000;
  const double eps = 0.2;
  const Dist p{0.7, 0.2, 0.1};
  const double bound = type_deviation_bound(n, eps, 3);
  ASSERT_LT(bound, 1.0);
  Rng rng(14);
  const std::size_t draws = 100000;
  std::size_t far = 0;
  std::vector<int> seq(n);
  for (std::size_t d = 0; d < draws; ++d) {
    for (auto& s : seq) {
      const double u = rng.uniform();
      s = u < p[0] ? 0 : (u < p[0] + p[1] ? 1 : 2);
    }
    if (variational_distance(type_of(seq, 3), p) > eps) ++far;
  }
  EXPECT_LE(static_cast<double>(far) / draws, bound);
}

}  // namespace
}  // namespace twir
