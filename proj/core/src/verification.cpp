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

#include "twir/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twir/dense.hpp"
#include "twir/entropy.hpp"
#include "twir/keyrate.hpp"
#include "twir/quantum_oracle.hpp"
#include "twir/toeplitz.hpp"

namespace twir {

bool SuiteResult::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

BellDiagonal random_bell_diagonal(Rng& rng) {
  double w[4];
  for (double& x : w) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
  }
  if (rng.below(8) == 0) w[rng.below(4)] = 0.0;
  const double total = w[0] + w[1] + w[2] + w[3];
  return BellDiagonal::make(w[0] / total, w[1] / total, w[2] / total, w[3] / total);
}

namespace {

Assertion finish(std::string name, double dev, double tol) { return {std::move(name), dev, tol, dev <= tol}; }

double pos(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

SuiteResult verify_theorem3(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double d1 = 0.0, d2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = random_bell_diagonal(rng);
    const auto direct = theorem3_direct(p);
    d1 = std::max(d1, std::abs(direct.first_arg - rate_first_arg(p)));
    d2 = std::max(d2, std::abs(direct.second_arg - rate_second_arg(p)));
  }
  return {"theorem3", {finish("first_arg_matches_density_matrix", d1, 1e-9),
                       finish("second_arg_matches_density_matrix", d2, 1e-9)}};
}

SuiteResult verify_lemmas(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double mono = 0.0, chain = 0.0, removal = 0.0, fid_lo = 0.0, fid_hi = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto sigma_c = random_state(2, 1 + rng.below(2), rng);
    // classical X in front of a BC state
    {
      CMatrix rho = CMatrix::Zero(8, 8);
      const double px = rng.uniform();
      for (int x = 0; x < 2; ++x) {
        const auto cond = random_state(4, 1 + rng.below(4), rng);
        rho.block(4 * x, 4 * x, 4, 4) = (x ? 1.0 - px : px) * cond.matrix();
      }
      const DenseHermitian rho_xbc(rho);
      const auto rho_bc = partial_trace(rho_xbc, {2, 2, 2}, {false, true, true});
      mono = std::max(mono, pos(min_entropy(rho_bc, sigma_c, 2) - min_entropy(rho_xbc, sigma_c, 4)));
    }
    const auto rho_abc = random_state(8, 1 + rng.below(8), rng);
    const auto rho_a = partial_trace(rho_abc, {2, 2, 2}, {true, false, false});
    const auto rho_b = partial_trace(rho_abc, {2, 2, 2}, {false, true, false});
    const auto rho_bc = partial_trace(rho_abc, {2, 2, 2}, {false, true, true});
    const double h_abc_c = min_entropy(rho_abc, sigma_c, 4);
    removal = std::max(removal, pos(min_entropy(rho_bc, sigma_c, 2) - max_entropy(rho_a) - h_abc_c));
    // Certificate for the sup form: sigma_BC built from the support of rho_B.
    const auto proj_b = support_projector(rho_b);
    const double rank_b = std::exp2(max_entropy(rho_b));
    const auto sigma_bc = kron(DenseHermitian(proj_b.matrix() / rank_b), sigma_c);
    chain = std::max(chain, pos(h_abc_c - min_entropy(rho_abc, sigma_bc, 2) - max_entropy(rho_b)));

    const double ta = 0.5 + 0.5 * rng.uniform(), tb = 0.5 + 0.5 * rng.uniform();
    const DenseHermitian r(random_state(4, 1 + rng.below(4), rng).matrix() * ta);
    const DenseHermitian q(random_state(4, 1 + rng.below(4), rng).matrix() * tb);
    const double f = fidelity(r, q), dist = trace_distance(r, q);
    const double tr = r.trace() + q.trace();
    fid_lo = std::max(fid_lo, pos(tr - 2.0 * f - dist));
    fid_hi = std::max(fid_hi, pos(dist - std::sqrt(std::max(0.0, tr * tr - 4.0 * f * f))));
  }
  return {"lemmas", {finish("min_entropy_monotone_under_classical_extension", mono, 1e-9),
                     finish("min_entropy_chain_rule", chain, 1e-9),
                     finish("min_entropy_removal_bound", removal, 1e-9),
                     finish("fidelity_lower_bounds_distance", fid_lo, 1e-9),
                     finish("fidelity_upper_bounds_distance", fid_hi, 1e-9)}};
}

SuiteResult verify_twirl(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double first = 0.0, second = 0.0, w1 = 0.0, w2 = 0.0, entries = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto sigma = random_state(4, 1 + rng.below(4), rng);
    const auto rec = worst_case_check(sigma, 0.0);
    first = std::max(first, pos(rec.twirled.first_arg - rec.original.first_arg));
    second = std::max(second, pos(rec.twirled.second_arg - rec.original.second_arg));
    w1 = std::max(w1, rec.w1_shift);
    w2 = std::max(w2, rec.w2_shift);
    const auto tw = discrete_twirl(sigma);
    for (int x = 0; x < 2; ++x) {
      for (int z = 0; z < 2; ++z) {
        const CVector b = bell_state(x, z);
        const double a1 = (b.adjoint() * sigma.matrix() * b)(0).real();
        const double a2 = (b.adjoint() * tw.matrix() * b)(0).real();
        entries = std::max(entries, std::abs(a1 - a2));
      }
    }
  }
  return {"twirl", {finish("twirl_lowers_first_arg", first, 1e-9), finish("twirl_lowers_second_arg", second, 1e-9),
                    finish("parity_law_invariant", w1, 1e-12), finish("second_bit_law_invariant", w2, 1e-12),
                    finish("bell_weights_preserved", entries, 1e-12)}};
}

SuiteResult verify_coset(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double dev = 0.0, overlap = 0.0;
  const std::vector<std::uint32_t> code{0b00, 0b11};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = random_bell_diagonal(rng);
    for (std::uint32_t a = 0; a < 4; ++a) {
      const auto c = coset_decomposition_check(p, 2, code, a);
      dev = std::max(dev, c.max_deviation);
      overlap = std::max(overlap, c.max_overlap);
    }
  }
  return {"coset", {finish("coset_decomposition", dev, 1e-10), finish("class_vectors_orthogonal", overlap, 1e-10)}};
}

SuiteResult verify_types(std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  constexpr std::size_t kLen = 1000, kDraws = 2000;
  // Large enough that the bound is below 1 for every alphabet size drawn.
  constexpr double kEps = 0.25;
  double excess = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t k = 2 + rng.below(3);
    std::vector<double> w(k);
    double total = 0.0;
    for (auto& x : w) { x = 0.05 + rng.uniform(); total += x; }
    for (auto& x : w) x /= total;
    w.back() = 1.0;
    for (std::size_t i = 0; i + 1 < k; ++i) w.back() -= w[i];
    const Dist p(w);
    std::vector<int> seq(kLen);
    std::size_t far = 0;
    for (std::size_t d = 0; d < kDraws; ++d) {
      for (auto& sym : seq) {
        double u = rng.uniform();
        std::size_t i = 0;
        while (i + 1 < k && u >= w[i]) u -= w[i++];
        sym = static_cast<int>(i);
      }
      if (variational_distance(type_of(seq, k), p) > kEps) ++far;
    }
    const double frac = static_cast<double>(far) / kDraws;
    excess = std::max(excess, pos(frac - type_deviation_bound(kLen, kEps, k)));
  }
  return {"types", {finish("type_deviation_bound_holds", excess, 0.0)}};
}

SuiteResult verify_hash(std::size_t seeds, std::uint64_t seed) {
  // Linearity: a pair collides exactly when its difference hashes to zero.
  constexpr std::size_t kIn = 10, kOut = 4, kKeyBits = kIn + kOut - 1;
  constexpr std::size_t kFamily = std::size_t{1} << kKeyBits;
  if (seeds == 0 || seeds > kFamily) throw std::invalid_argument("verify_hash: seeds must be in 1..8192");
  // Distinct members of the family, by partial Fisher-Yates.
  Rng rng(seed);
  std::vector<std::uint32_t> family(kFamily);
  for (std::size_t i = 0; i < kFamily; ++i) family[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < seeds; ++i) std::swap(family[i], family[i + rng.below(kFamily - i)]);
  std::vector<std::size_t> zero_count(std::size_t{1} << kIn, 0);
  for (std::size_t s = 0; s < seeds; ++s) {
    BitSeq key(kKeyBits);
    for (std::size_t i = 0; i < kKeyBits; ++i) key.set(i, (family[s] >> i) & 1u);
    for (std::size_t d = 1; d < zero_count.size(); ++d) {
      BitSeq in(kIn);
      for (std::size_t i = 0; i < kIn; ++i) in.set(i, (d >> i) & 1u);
      if (toeplitz_hash(key, in, kOut).weight() == 0) ++zero_count[d];
    }
  }
  const double p = std::exp2(-static_cast<double>(kOut));
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(seeds));
  double worst = 0.0;
  for (std::size_t d = 1; d < zero_count.size(); ++d) {
    worst = std::max(worst, static_cast<double>(zero_count[d]) / static_cast<double>(seeds));
  }
  return {"hash", {finish("pair_collision_fraction", worst, p + 3.0 * sigma)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem3", "lemmas", "twirl", "coset", "types", "hash"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
  if (name == "theorem3") return verify_theorem3(samples, seed);
  if (name == "lemmas") return verify_lemmas(samples, seed);
  if (name == "twirl") return verify_twirl(samples, seed);
  if (name == "coset") return verify_coset(samples, seed);
  if (name == "types") return verify_types(samples, seed);
  if (name == "hash") return verify_hash(samples, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace twir
