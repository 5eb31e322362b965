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

// One reconciliation session: estimation, two-way reconciliation, key length
// and privacy amplification.

#ifndef TWIR_PROTOCOL_HPP_
#define TWIR_PROTOCOL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twir/bell_channel.hpp"
#include "twir/bitseq.hpp"
#include "twir/keyrate.hpp"
#include "twir/linear_code.hpp"
#include "twir/rng.hpp"

namespace twir {

enum class Direction { kAliceToBob, kBobToAlice };

struct Message {
  Direction direction;
  std::string label;  ///< "t1", "w1hat", "t2" or "hash_seed"
  BitSeq payload;
};

/// Public messages in the order sent. append() rejects out-of-order labels.
class Transcript {
 public:
  void append(Direction d, std::string label, BitSeq payload);
  const std::vector<Message>& messages() const { return messages_; }
  const Message* find(const std::string& label) const;
  /// True when labels follow t1, w1hat, [t2], [hash_seed].
  static bool well_ordered(const std::vector<Message>& msgs);

 private:
  std::vector<Message> messages_;
};

/// Accepted range [lower, upper] for the number of kept blocks.
struct N0Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// n (P_W1(0) -+ delta), rounded inward and clipped to [0, n].
N0Bounds default_n0_bounds(const BellDiagonal& p, std::size_t n, double delta);

/// Empirical error rate, or nullopt (abort) when it is further than tol from nominal_e.
std::optional<double> parameter_estimation(const BitSeq& sample_x, const BitSeq& sample_y, double nominal_e,
                                           double tol);

using Decoder = std::function<DecodeResult(const ParityCheck&, const BitSeq&, double)>;

/// Exhaustive ML for n <= 24, belief propagation otherwise.
Decoder auto_decoder(const BpOptions& bp = {});

struct IrParams {
  double crossover1 = 0.0;  ///< BSC crossover for the parity discrepancy
  double crossover2 = 0.0;  ///< BSC crossover for the kept second bits
  N0Bounds n0_bounds;
  Decoder decoder;          ///< empty means auto_decoder()
};

struct IrResult {
  BitSeq u_alice;   ///< length 2n, discarded second bits zero
  BitSeq u_bob;
  BitSeq u_true;    ///< from the true discrepancy pattern
  BitSeq w1_hat;
  Transcript transcript;
  std::size_t leak_bits = 0;
  std::size_t n0_hat = 0;
  bool n0_in_bounds = false;
  bool t2_sent = false;
  bool decode1_converged = false;
  bool decode2_converged = false;
  bool reconciliation_ok = false;
};

using CodeFactory = std::function<ParityCheck(std::size_t)>;

/// Runs the reconciliation steps on raw strings x (Alice) and y (Bob).
/// rng drives Bob's random guess when the kept-block count is out of range.
IrResult run_ir(const BitSeq& x, const BitSeq& y, const ParityCheck& code1, const CodeFactory& code2_factory,
                const IrParams& params, Rng& rng);

/// floor(2n * max(0, rate_proposed(p_est) - margin)).
std::size_t key_length(const BellDiagonal& p_est, std::size_t n, double margin);

/// Maps an estimated error rate to a channel of the protocol family (BB84
/// takes the p11 minimizing the proposed rate).
BellDiagonal channel_for_error(Protocol proto, double e);

enum class RateBasis { kEstimated, kNominal };

struct SessionConfig {
  BellDiagonal channel;
  Protocol protocol = Protocol::kSixState;
  std::size_t n = 1000;          ///< blocks; raw keys have 2n bits
  std::size_t m = 10000;         ///< estimation sample size
  double delta = 0.05;           ///< code-rate margin
  std::optional<N0Bounds> n0_bounds;
  double abort_tolerance = 0.02;
  double finite_size_margin = 0.0;
  std::uint64_t seed = 1;
  /// Channel used to size the codes: the estimate, or the configured channel.
  RateBasis code_rate_basis = RateBasis::kEstimated;
  CodeConfig code_config = default_code_config();
  /// Code for the kept-block round. Its syndrome rate is far below 1/2, where
  /// a regular profile decodes better than the first-round one.
  CodeConfig second_code_config = default_second_code_config();
  BpOptions bp{};
  std::uint64_t code_seed = 0x7a11c0de;

  static CodeConfig default_code_config();
  static CodeConfig default_second_code_config();
  void validate() const;
};

struct SessionReport {
  bool aborted = false;
  double nominal_e = 0.0;
  double estimated_e = 0.0;
  Transcript transcript;
  std::size_t n = 0;
  std::size_t leak_bits = 0;
  std::size_t syndrome1_bits = 0;
  std::size_t syndrome2_bits = 0;
  std::size_t n0_hat = 0;
  bool n0_in_bounds = false;
  bool t2_sent = false;
  bool reconciliation_ok = false;
  bool key_match = false;
  double rate_estimated = 0.0;  ///< proposed rate of the estimated channel
  BitSeq key_alice;
  BitSeq key_bob;
  double empirical_key_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Memoizes the first-round code across sessions that share its shape.
class CodeCache {
 public:
  std::shared_ptr<const ParityCheck> get(std::size_t n, double rate, const CodeConfig& cfg, std::uint64_t seed);

 private:
  std::map<std::string, std::shared_ptr<const ParityCheck>> cache_;
};

SessionReport run_full_session(const SessionConfig& cfg);
SessionReport run_full_session(const SessionConfig& cfg, CodeCache& cache);

}  // namespace twir

#endif  // TWIR_PROTOCOL_HPP_
