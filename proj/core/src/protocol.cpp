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

#include "twir/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twir/block_transform.hpp"
#include "twir/entropy.hpp"
#include "twir/toeplitz.hpp"

namespace twir {

namespace {

int label_rank(const std::string& label) {
  if (label == "t1") return 0;
  if (label == "w1hat") return 1;
  if (label == "t2") return 2;
  if (label == "hash_seed") return 3;
  return -1;
}

BitSeq interleave(const BitSeq& first, const BitSeq& second) {
  BitSeq out(2 * first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.set(2 * i, first.get(i));
    out.set(2 * i + 1, second.get(i));
  }
  return out;
}

BitSeq random_bits(std::size_t len, Rng& rng) {
  BitSeq b(len);
  for (std::size_t i = 0; i < len; ++i) b.set(i, rng.coin());
  return b;
}

}  // namespace

void Transcript::append(Direction d, std::string label, BitSeq payload) {
  const int rank = label_rank(label);
  if (rank < 0) throw std::invalid_argument("Transcript: unknown label " + label);
  if (!messages_.empty() && label_rank(messages_.back().label) >= rank) {
    throw std::logic_error("Transcript: message " + label + " out of order");
  }
  // Every later message needs both first-round messages in place.
  if (rank >= 1 && messages_.size() < static_cast<std::size_t>(std::min(rank, 2))) {
    throw std::logic_error("Transcript: " + label + " before the first round is complete");
  }
  messages_.push_back({d, std::move(label), std::move(payload)});
}

const Message* Transcript::find(const std::string& label) const {
  for (const auto& m : messages_) if (m.label == label) return &m;
  return nullptr;
}

bool Transcript::well_ordered(const std::vector<Message>& msgs) {
  int last = -1;
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    const int r = label_rank(msgs[i].label);
    if (r <= last) return false;
    // t1 and w1hat always open a non-empty transcript.
    if (static_cast<int>(i) <= 1 && r != static_cast<int>(i)) return false;
    last = r;
  }
  return true;
}

N0Bounds default_n0_bounds(const BellDiagonal& p, std::size_t n, double delta) {
  const double keep = derived_dists(p).w1_dist[0];
  const double nd = static_cast<double>(n);
  N0Bounds b;
  b.lower = static_cast<std::size_t>(std::max(0.0, std::ceil(nd * (keep - delta) - 1e-9)));
  b.upper = static_cast<std::size_t>(std::min(nd, std::floor(nd * (keep + delta) + 1e-9)));
  return b;
}

std::optional<double> parameter_estimation(const BitSeq& sample_x, const BitSeq& sample_y, double nominal_e,
                                           double tol) {
  if (sample_x.size() != sample_y.size()) throw std::invalid_argument("parameter_estimation: length mismatch");
  if (sample_x.empty()) throw std::invalid_argument("parameter_estimation: empty sample");
  const double e = static_cast<double>(hamming(sample_x, sample_y)) / static_cast<double>(sample_x.size());
  if (std::abs(e - nominal_e) > tol) return std::nullopt;
  return e;
}

Decoder auto_decoder(const BpOptions& bp) {
  return [bp](const ParityCheck& h, const BitSeq& t, double p) {
    if (h.cols() <= MlDecoder::kMaxLength) return ml_decode(h, t, p);
    return bp_decode(h, t, p, bp);
  };
}

IrResult run_ir(const BitSeq& x, const BitSeq& y, const ParityCheck& code1, const CodeFactory& code2_factory,
                const IrParams& params, Rng& rng) {
  if (x.size() != y.size() || x.size() % 2 != 0 || x.empty()) {
    throw std::invalid_argument("run_ir: raw strings must have equal, even, nonzero length");
  }
  const std::size_t n = x.size() / 2;
  if (code1.cols() != n) throw std::invalid_argument("run_ir: first code length does not match block count");
  const Decoder decode = params.decoder ? params.decoder : auto_decoder();
  IrResult r;

  // (i)-(ii) parities, Alice's syndrome
  const BitSeq u1 = parity_seq(x);
  const BitSeq v1 = parity_seq(y);
  const BitSeq t1 = syndrome(code1, u1);
  r.transcript.append(Direction::kAliceToBob, "t1", t1);
  r.leak_bits += t1.size();

  // (iii) Bob estimates the parity discrepancy and announces it
  const auto d1 = decode(code1, t1 ^ syndrome(code1, v1), params.crossover1);
  r.decode1_converged = d1.converged;
  r.w1_hat = d1.error_estimate;
  r.transcript.append(Direction::kBobToAlice, "w1hat", r.w1_hat);

  // (iv) Alice keeps the second bits of agreeing blocks
  const BitSeq u2_hat = second_bit_seq(x, r.w1_hat);
  const BitSeq v2_hat = second_bit_seq(y, r.w1_hat);
  const auto part = partition(r.w1_hat);
  r.n0_hat = part.t0.size();
  r.n0_in_bounds = params.n0_bounds.lower <= r.n0_hat && r.n0_hat <= params.n0_bounds.upper;
  const BitSeq v2_kept = subseq(v2_hat, part.t0);
  BitSeq u2_bob_kept(part.t0.size());
  if (!r.n0_in_bounds) {
    u2_bob_kept = random_bits(part.t0.size(), rng);
  } else if (r.n0_hat > 0) {
    // (v) second syndrome and Bob's correction
    const ParityCheck code2 = code2_factory(r.n0_hat);
    if (code2.cols() != r.n0_hat) throw std::invalid_argument("run_ir: second code length mismatch");
    const BitSeq t2 = syndrome(code2, subseq(u2_hat, part.t0));
    r.transcript.append(Direction::kAliceToBob, "t2", t2);
    r.t2_sent = true;
    r.leak_bits += t2.size();
    const auto d2 = decode(code2, t2 ^ syndrome(code2, v2_kept), params.crossover2);
    r.decode2_converged = d2.converged;
    u2_bob_kept = v2_kept ^ d2.error_estimate;
  } else {
    r.decode2_converged = true;
  }

  BitSeq u2_bob(n);
  for (std::size_t k = 0; k < part.t0.size(); ++k) u2_bob.set(part.t0[k], u2_bob_kept.get(k));
  r.u_alice = interleave(u1, u2_hat);
  r.u_bob = interleave(v1 ^ r.w1_hat, u2_bob);
  r.u_true = interleave(u1, second_bit_seq(x, u1 ^ v1));
  r.reconciliation_ok = r.u_alice == r.u_bob && r.u_alice == r.u_true;
  return r;
}

std::size_t key_length(const BellDiagonal& p_est, std::size_t n, double margin) {
  if (!(margin >= 0.0)) throw std::invalid_argument("key_length: margin must be >= 0");
  const double rate = std::max(0.0, rate_proposed(p_est) - margin);
  const double len = std::floor(2.0 * static_cast<double>(n) * rate + 1e-9);
  return std::min(static_cast<std::size_t>(len), 2 * n);
}

BellDiagonal channel_for_error(Protocol proto, double e) {
  if (proto == Protocol::kSixState) return six_state_point(e);
  return bb84_family(e, bb84_rate(e, Curve::kProposed).p11);
}

CodeConfig SessionConfig::default_code_config() {
  CodeConfig c;
  c.kind = CodeKind::kAuto;
  c.ldpc = LdpcProfile::irregular();
  return c;
}

CodeConfig SessionConfig::default_second_code_config() {
  CodeConfig c;
  c.kind = CodeKind::kAuto;
  c.ldpc = LdpcProfile::regular(3);
  return c;
}

void SessionConfig::validate() const {
  channel.validate();
  if (n == 0 || m == 0) throw std::invalid_argument("SessionConfig: n and m must be >= 1");
  if (!(delta > 0.0)) throw std::invalid_argument("SessionConfig: delta must be > 0");
  if (!(abort_tolerance >= 0.0)) throw std::invalid_argument("SessionConfig: abort_tolerance must be >= 0");
  if (!(finite_size_margin >= 0.0)) throw std::invalid_argument("SessionConfig: finite_size_margin must be >= 0");
  if (n0_bounds && (n0_bounds->lower > n0_bounds->upper || n0_bounds->upper > n)) {
    throw std::invalid_argument("SessionConfig: need lower <= upper <= n for the kept-block bounds");
  }
}

std::shared_ptr<const ParityCheck> CodeCache::get(std::size_t n, double rate, const CodeConfig& cfg,
                                                  std::uint64_t seed) {
  std::ostringstream key;
  key.precision(17);
  key << n << '/' << rate << '/' << seed << '/' << static_cast<int>(cfg.kind) << '/'
      << cfg.ldpc.bfs_depth << '/' << cfg.ldpc.visit_budget;
  for (const auto& [d, f] : cfg.ldpc.column_degrees) key << '/' << d << ':' << f;
  auto& slot = cache_[key.str()];
  if (!slot) slot = std::make_shared<const ParityCheck>(code_for_rate(n, rate, cfg, seed));
  return slot;
}

SessionReport run_full_session(const SessionConfig& cfg) {
  CodeCache cache;
  return run_full_session(cfg, cache);
}

SessionReport run_full_session(const SessionConfig& cfg, CodeCache& cache) {
  cfg.validate();
  SessionReport rep;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.nominal_e = cfg.channel.bit_error();
  const Rng root(cfg.seed);

  auto [x, y] = sample_pair(cfg.channel, 2 * cfg.n, root.split(1).seed());
  const std::size_t m_even = cfg.m + cfg.m % 2;
  auto [sx, sy] = sample_pair(cfg.channel, m_even, root.split(2).seed());
  if (m_even != cfg.m) {
    std::vector<std::size_t> idx(cfg.m);
    for (std::size_t i = 0; i < cfg.m; ++i) idx[i] = i;
    sx = subseq(sx, idx);
    sy = subseq(sy, idx);
  }
  const auto est = parameter_estimation(sx, sy, rep.nominal_e, cfg.abort_tolerance);
  if (!est) {
    rep.aborted = true;
    rep.estimated_e = static_cast<double>(hamming(sx, sy)) / static_cast<double>(cfg.m);
    return rep;
  }
  rep.estimated_e = *est;
  const BellDiagonal p_est = channel_for_error(cfg.protocol, rep.estimated_e);
  const BellDiagonal& p_code = cfg.code_rate_basis == RateBasis::kNominal ? cfg.channel : p_est;
  const auto dd = derived_dists(p_code);
  const double cross1 = dd.w1_dist[1];
  const double cross2 = dd.w2_given_w1_0 ? (*dd.w2_given_w1_0)[1] : 0.0;
  const double rate1 = binary_entropy(cross1) + cfg.delta;
  const double rate2 = binary_entropy(cross2) + cfg.delta;
  if (rate1 >= 1.0 || rate2 >= 1.0) throw std::invalid_argument("run_full_session: code rate reaches 1");

  const auto code1 = cache.get(cfg.n, rate1, cfg.code_config, cfg.code_seed);
  const CodeFactory code2 = [&](std::size_t n0) {
    return code_for_rate(n0, rate2, cfg.second_code_config, derive_seed(cfg.code_seed, n0));
  };
  IrParams params;
  params.crossover1 = cross1;
  params.crossover2 = cross2;
  params.n0_bounds = cfg.n0_bounds ? *cfg.n0_bounds : default_n0_bounds(p_code, cfg.n, cfg.delta);
  params.decoder = auto_decoder(cfg.bp);
  Rng guess = root.split(3);
  IrResult ir = run_ir(x, y, *code1, code2, params, guess);

  rep.transcript = std::move(ir.transcript);
  rep.leak_bits = ir.leak_bits;
  rep.syndrome1_bits = code1->rows();
  rep.syndrome2_bits = ir.leak_bits - code1->rows();
  rep.n0_hat = ir.n0_hat;
  rep.n0_in_bounds = ir.n0_in_bounds;
  rep.t2_sent = ir.t2_sent;
  rep.reconciliation_ok = ir.reconciliation_ok;
  rep.rate_estimated = rate_proposed(p_est);

  const std::size_t ell = key_length(p_est, cfg.n, cfg.finite_size_margin);
  if (ell > 0) {
    Rng hs = root.split(4);
    BitSeq hash_seed(2 * cfg.n + ell - 1);
    for (std::size_t i = 0; i < hash_seed.size(); ++i) hash_seed.set(i, hs.coin());
    rep.key_alice = toeplitz_hash(hash_seed, ir.u_alice, ell);
    rep.key_bob = toeplitz_hash(hash_seed, ir.u_bob, ell);
    rep.transcript.append(Direction::kAliceToBob, "hash_seed", std::move(hash_seed));
  }
  rep.key_match = rep.key_alice == rep.key_bob;
  rep.empirical_key_rate = static_cast<double>(rep.key_alice.size()) / (2.0 * static_cast<double>(cfg.n));
  return rep;
}

}  // namespace twir
