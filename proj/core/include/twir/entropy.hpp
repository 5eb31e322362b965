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

// Scalar information measures in bits, plus method-of-types helpers.

#ifndef TWIR_ENTROPY_HPP_
#define TWIR_ENTROPY_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace twir {

inline constexpr double kDistTolerance = 1e-12;

/// Probability distribution over a finite alphabet {0, ..., size()-1}.
///
/// Invariants: every entry is >= 0 and the entries sum to 1 within
/// kDistTolerance. Validated on construction.
class Dist {
 public:
  explicit Dist(std::vector<double> probs);
  Dist(std::initializer_list<double> probs) : Dist(std::vector<double>(probs)) {}

  static Dist uniform(std::size_t k);
  static Dist point_mass(std::size_t k, std::size_t at);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  friend bool operator==(const Dist&, const Dist&) = default;

 private:
  std::vector<double> probs_;
};

/// h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
/// Throws std::domain_error if p is outside [0,1] by more than 1e-12.
double binary_entropy(double p);

/// Shannon entropy in bits.
double shannon_entropy(const Dist& p);

/// Kullback-Leibler divergence D(q||p) in bits. Returns +infinity when the
/// support of q is not contained in the support of p.
double divergence(const Dist& q, const Dist& p);

/// L1 (variational) distance sum_x |p(x) - q(x)|.
double variational_distance(const Dist& p, const Dist& q);

/// Empirical distribution of `seq` over {0, ..., alphabet_size-1}.
/// Throws std::invalid_argument on an empty sequence or out-of-range symbol.
Dist type_of(std::span<const int> seq, std::size_t alphabet_size);

/// Upper bound on P^n{ x : ||type(x) - P|| > eps }:
///   (n+1)^(k-1) * 2^(-eps^2 n / (2 ln 2)), clamped to 1.
double type_deviation_bound(std::size_t n, double eps, std::size_t alphabet_size);

}  // namespace twir

#endif  // TWIR_ENTROPY_HPP_
