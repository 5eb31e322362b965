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


#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "twir/bell_channel.hpp"
#include "twir/block_transform.hpp"
#include "twir/entropy.hpp"
#include "twir/keyrate.hpp"
#include "twir/linear_code.hpp"
#include "twir/protocol.hpp"
#include "twir/report_json.hpp"
#include "twir/rng.hpp"
#include "twir/toeplitz.hpp"

namespace twir {
namespace {

BitSeq random_bits(Rng& rng, std::size_t n) {
  BitSeq b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng.coin());
  return b;
}

BitSeq from_mask(std::uint32_t v, std::size_t n) {
  BitSeq b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, (v >> i) & 1u);
  return b;
}

// Naive Toeplitz product: entry (i, j) is seed[i - j + N - 1].
BitSeq toeplitz_naive(const BitSeq& seed, const BitSeq& in, std::size_t ell) {
  const std::size_t n = in.size();
  BitSeq out(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    bool acc = false;
    for (std::size_t j = 0; j < n; ++j) acc ^= seed.get(i + n - 1 - j) && in.get(j);
    out.set(i, acc);
  }
  return out;
}

TEST(Transcript, Ordering) {
  Transcript t;
  EXPECT_THROW(t.append(Direction::kBobToAlice, "w1hat", BitSeq(1)), std::logic_error);
  t.append(Direction::kAliceToBob, "t1", BitSeq(2));
  EXPECT_THROW(t.append(Direction::kAliceToBob, "t2", BitSeq(1)), std::logic_error);
  t.append(Direction::kBobToAlice, "w1hat", BitSeq(4));
  t.append(Direction::kAliceToBob, "hash_seed", BitSeq(5));
  EXPECT_THROW(t.append(Direction::kAliceToBob, "t2", BitSeq(1)), std::logic_error);
  EXPECT_THROW(t.append(Direction::kAliceToBob, "bogus", BitSeq(1)), std::invalid_argument);
  EXPECT_TRUE(Transcript::well_ordered(t.messages()));
  ASSERT_NE(t.find("w1hat"), nullptr);
  EXPECT_EQ(t.find("t2"), nullptr);
  std::vector<Message> bad{{Direction::kAliceToBob, "w1hat", BitSeq(1)}, {Direction::kAliceToBob, "t1", BitSeq(1)}};
  EXPECT_FALSE(Transcript::well_ordered(bad));
}

TEST(ParameterEstimation, Examples) {
  Rng rng(81);
  const auto x = random_bits(rng, 1000);
  EXPECT_EQ(parameter_estimation(x, x, 0.0, 0.01), std::optional<double>(0.0));
  BitSeq comp = x;
  for (std::size_t i = 0; i < comp.size(); ++i) comp.flip(i);
  EXPECT_FALSE(parameter_estimation(x, comp, 0.05, 0.02).has_value());
  EXPECT_THROW(parameter_estimation(x, BitSeq(999), 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(parameter_estimation(BitSeq(), BitSeq(), 0.0, 0.1), std::invalid_argument);
}

TEST(ParameterEstimation, AbortRateBelowTypeBound) {
  const std::size_t m = 10000;
  const double tol = 0.02;
  const auto p = six_state_point(0.05);
  int aborts = 0;
  const int trials = 300;
  for (int s = 0; s < trials; ++s) {
    auto [x, y] = sample_pair(p, m, 1000 + s);
    aborts += !parameter_estimation(x, y, 0.05, tol).has_value();
  }
  // Binary types: the L1 distance is twice the error-rate deviation.
  EXPECT_LE(static_cast<double>(aborts) / trials, type_deviation_bound(m, 2.0 * tol, 2));
  EXPECT_EQ(aborts, 0);
}

TEST(RunIr, NoiselessChannel) {
  Rng rng(82);
  const std::size_t n = 400;
  const BitSeq x = random_bits(rng, 2 * n);
  const auto code1 = code_for_rate(n, 0.1, CodeConfig{}, 1);
  IrParams params;
  params.crossover1 = 0.01;
  params.crossover2 = 0.01;
  params.n0_bounds = {0, n};
  const auto r = run_ir(x, x, code1, [](std::size_t n0) { return code_for_rate(n0, 0.1, CodeConfig{}, 2); },
                        params, rng);
  EXPECT_EQ(r.w1_hat, BitSeq(n));
  EXPECT_EQ(r.n0_hat, n);
  EXPECT_TRUE(r.reconciliation_ok);
  EXPECT_TRUE(r.t2_sent);
  EXPECT_EQ(r.u_alice, r.u_bob);
}

TEST(RunIr, PlantedBlockErrorWithExhaustiveCodes) {
  // Eight distinct nonzero columns: every single error is the unique
  // minimum-weight member of its coset.
  std::vector<BitSeq> rows(4, BitSeq(8));
  const std::uint32_t cols[8] = {1, 2, 4, 8, 3, 5, 6, 9};
  for (std::size_t c = 0; c < 8; ++c)
    for (std::size_t r = 0; r < 4; ++r) rows[r].set(c, (cols[c] >> r) & 1u);
  const auto code1 = ParityCheck::from_dense(rows);
  const std::size_t n = 8;
  Rng rng(83);
  for (std::size_t block = 0; block < n; ++block) {
    for (int which = 0; which < 2; ++which) {
      const BitSeq x = random_bits(rng, 2 * n);
      BitSeq y = x;
      y.flip(2 * block + which);
      const BitSeq w1 = parity_seq(x) ^ parity_seq(y);
      // Exhaustive: the minimum-weight vector with the observed syndrome.
      const BitSeq target = syndrome(code1, w1);
      std::size_t best_w = 99;
      BitSeq best;
      for (std::uint32_t v = 0; v < 256; ++v) {
        const BitSeq e = from_mask(v, 8);
        if (syndrome(code1, e) == target && e.weight() < best_w) {
          best_w = e.weight();
          best = e;
        }
      }
      ASSERT_EQ(best, w1);
      IrParams params;
      params.crossover1 = 0.1;
      params.crossover2 = 0.1;
      params.n0_bounds = {0, n};
      const auto r = run_ir(x, y, code1,
                            [](std::size_t n0) { return code_for_rate(n0, 0.5, CodeConfig{}, 3); }, params, rng);
      EXPECT_EQ(r.w1_hat, w1);
      EXPECT_EQ(r.n0_hat, n - 1);
      EXPECT_TRUE(r.reconciliation_ok);
      EXPECT_FALSE(r.u_alice.get(2 * block + 1));
    }
  }
}

TEST(RunIr, OutOfBoundsFallsBackToGuess) {
  Rng rng(84);
  const std::size_t n = 200;
  const BitSeq x = random_bits(rng, 2 * n);
  const auto code1 = code_for_rate(n, 0.2, CodeConfig{}, 1);
  IrParams params;
  params.crossover1 = 0.01;
  params.crossover2 = 0.01;
  params.n0_bounds = {0, n / 2};
  const auto r = run_ir(x, x, code1, [](std::size_t n0) { return code_for_rate(n0, 0.2, CodeConfig{}, 2); },
                        params, rng);
  EXPECT_FALSE(r.n0_in_bounds);
  EXPECT_FALSE(r.t2_sent);
  EXPECT_EQ(r.transcript.find("t2"), nullptr);
  EXPECT_EQ(r.leak_bits, code1.rows());
  EXPECT_FALSE(r.reconciliation_ok);
}

TEST(Toeplitz, LinearAndMatchesNaive) {
  Rng rng(85);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(300);
    const std::size_t ell = 1 + rng.below(n);
    const BitSeq seed = random_bits(rng, n + ell - 1);
    const BitSeq a = random_bits(rng, n), b = random_bits(rng, n);
    EXPECT_EQ(toeplitz_hash(seed, a, ell), toeplitz_naive(seed, a, ell));
    EXPECT_EQ(toeplitz_hash(seed, a ^ b, ell), toeplitz_hash(seed, a, ell) ^ toeplitz_hash(seed, b, ell));
    EXPECT_EQ(toeplitz_hash(seed, BitSeq(n), ell), BitSeq(ell));
  }
  EXPECT_THROW(toeplitz_hash(BitSeq(5), BitSeq(4), 3), std::invalid_argument);
  EXPECT_THROW(toeplitz_hash(BitSeq(9), BitSeq(4), 5), std::invalid_argument);
  EXPECT_EQ(toeplitz_hash(BitSeq(0), BitSeq(4), 0).size(), 0u);
}

TEST(Toeplitz, ExactlyUniversalOverFullFamily) {
  // Every nonzero difference hashes to zero under exactly 2^(13-4) seeds.
  constexpr std::size_t kIn = 10, kOut = 4, kSeed = kIn + kOut - 1;
  std::vector<BitSeq> inputs;
  for (std::uint32_t d = 1; d < (1u << kIn); ++d) inputs.push_back(from_mask(d, kIn));
  std::vector<std::size_t> zeros(inputs.size(), 0);
  for (std::uint32_t s = 0; s < (1u << kSeed); ++s) {
    const BitSeq seed = from_mask(s, kSeed);
    for (std::size_t k = 0; k < inputs.size(); ++k) zeros[k] += toeplitz_hash(seed, inputs[k], kOut).weight() == 0;
  }
  for (std::size_t k = 0; k < zeros.size(); ++k) ASSERT_EQ(zeros[k], 512u) << k + 1;
}

TEST(KeyLength, Examples) {
  EXPECT_EQ(key_length(BellDiagonal{}, 1000, 0.0), 2000u);
  EXPECT_EQ(key_length(BellDiagonal{0.25, 0.25, 0.25, 0.25}, 1000, 0.0), 0u);
  EXPECT_EQ(key_length(six_state_point(0.05), 1000, 0.9), 0u);
  const std::size_t n = 5000;
  const double want = rate_proposed(six_state_point(0.05)) - 0.02;
  EXPECT_NEAR(key_length(six_state_point(0.05), n, 0.02) / (2.0 * n), want, 1.0 / (2.0 * n));
  EXPECT_THROW(key_length(BellDiagonal{}, 10, -0.1), std::invalid_argument);
}

TEST(Session, NoiselessChannel) {
  SessionConfig cfg;
  cfg.channel = BellDiagonal{};
  cfg.n = 600;
  cfg.m = 1000;
  cfg.finite_size_margin = 0.1;
  cfg.seed = 3;
  const auto r = run_full_session(cfg);
  EXPECT_FALSE(r.aborted);
  EXPECT_TRUE(r.reconciliation_ok);
  EXPECT_TRUE(r.key_match);
  EXPECT_NEAR(r.empirical_key_rate, 0.9, 1.0 / (2.0 * cfg.n));
  EXPECT_TRUE(Transcript::well_ordered(r.transcript.messages()));
}

TEST(Session, AbortKeepsNothing) {
  SessionConfig cfg;
  cfg.channel = six_state_point(0.2);
  cfg.n = 500;
  cfg.abort_tolerance = 0.0;
  const auto r = run_full_session(cfg);
  ASSERT_TRUE(r.aborted);
  EXPECT_TRUE(r.key_alice.empty());
  EXPECT_TRUE(r.key_bob.empty());
  EXPECT_EQ(r.leak_bits, 0u);
  EXPECT_TRUE(r.transcript.messages().empty());
}

TEST(Session, LeakAccountingAndKeptFraction) {
  SessionConfig cfg;
  cfg.channel = six_state_point(0.05);
  cfg.n = 20000;
  cfg.code_rate_basis = RateBasis::kNominal;
  const auto d = derived_dists(cfg.channel);
  const double r1 = binary_entropy(d.w1_dist[1]) + cfg.delta;
  const double r2 = binary_entropy((*d.w2_given_w1_0)[1]) + cfg.delta;
  CodeCache cache;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    cfg.seed = seed;
    const auto r = run_full_session(cfg, cache);
    ASSERT_FALSE(r.aborted);
    ASSERT_TRUE(r.t2_sent);
    const auto m1 = static_cast<std::size_t>(std::ceil(cfg.n * r1 - 1e-9));
    const auto m2 = static_cast<std::size_t>(std::ceil(r.n0_hat * r2 - 1e-9));
    EXPECT_EQ(r.syndrome1_bits, m1);
    EXPECT_EQ(r.syndrome2_bits, m2);
    EXPECT_EQ(r.leak_bits, m1 + m2);
    EXPECT_EQ(r.leak_bits, r.transcript.find("t1")->payload.size() + r.transcript.find("t2")->payload.size());
    EXPECT_NEAR(static_cast<double>(r.n0_hat) / cfg.n, d.w1_dist[0], 0.01);
    EXPECT_TRUE(r.reconciliation_ok);
    EXPECT_TRUE(r.key_match);
    EXPECT_EQ(r.empirical_key_rate, r.key_alice.size() / (2.0 * cfg.n));
    EXPECT_TRUE(Transcript::well_ordered(r.transcript.messages()));
  }
}

TEST(Session, DeterministicPerSeed) {
  SessionConfig cfg;
  cfg.channel = six_state_point(0.03);
  cfg.n = 2000;
  cfg.seed = 17;
  const auto a = to_json(run_full_session(cfg)).dump();
  const auto b = to_json(run_full_session(cfg)).dump();
  EXPECT_EQ(a, b);
  cfg.seed = 18;
  EXPECT_NE(a, to_json(run_full_session(cfg)).dump());
}

TEST(Session, ConfigValidation) {
  SessionConfig cfg;
  cfg.n0_bounds = N0Bounds{10, 5};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.n0_bounds.reset();
  cfg.delta = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(ReportJson, Fields) {
  SessionConfig cfg;
  cfg.channel = six_state_point(0.02);
  cfg.n = 300;
  const auto j = to_json(run_full_session(cfg));
  for (const char* key : {"aborted", "estimated_e", "transcript", "leak_bits", "key_alice", "key_bob",
                          "reconciliation_ok", "key_match", "empirical_key_rate", "seed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const auto& msgs = j["transcript"];
  ASSERT_TRUE(msgs.is_array());
  ASSERT_FALSE(msgs.empty());
  EXPECT_EQ(msgs[0]["label"], "t1");
  EXPECT_TRUE(msgs[0]["payload"].contains("hex"));
  EXPECT_EQ(bits_to_json(BitSeq::from_string("1000"))["hex"], "8");
}

}  // namespace
}  // namespace twir
