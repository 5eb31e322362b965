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

#include "twir/report_json.hpp"

namespace twir {

nlohmann::json bits_to_json(const BitSeq& b) {
  return {{"bits", b.size()}, {"hex", b.to_hex()}};
}

nlohmann::json to_json(const Transcript& t) {
  auto arr = nlohmann::json::array();
  for (const auto& m : t.messages()) {
    arr.push_back({{"direction", m.direction == Direction::kAliceToBob ? "alice_to_bob" : "bob_to_alice"},
                   {"label", m.label},
                   {"payload", bits_to_json(m.payload)}});
  }
  return arr;
}

nlohmann::json to_json(const SessionReport& r) {
  return {
      {"seed", r.seed},
      {"n", r.n},
      {"aborted", r.aborted},
      {"nominal_e", r.nominal_e},
      {"estimated_e", r.estimated_e},
      {"leak_bits", r.leak_bits},
      {"syndrome1_bits", r.syndrome1_bits},
      {"syndrome2_bits", r.syndrome2_bits},
      {"n0_hat", r.n0_hat},
      {"n0_in_bounds", r.n0_in_bounds},
      {"t2_sent", r.t2_sent},
      {"reconciliation_ok", r.reconciliation_ok},
      {"key_match", r.key_match},
      {"rate_estimated", r.rate_estimated},
      {"key_length", r.key_alice.size()},
      {"empirical_key_rate", r.empirical_key_rate},
      {"key_alice", bits_to_json(r.key_alice)},
      {"key_bob", bits_to_json(r.key_bob)},
      {"transcript", to_json(r.transcript)},
  };
}

nlohmann::json to_json(const RatePoint& p) {
  nlohmann::json j = {{"e", p.e}};
  for (auto c : {Curve::kProposed, Curve::kFirstArg, Curve::kSecondArg, Curve::kVollbrecht, Curve::kBstep,
                 Curve::kOneway}) {
    j[std::string(curve_name(c))] = {{"raw", p.raw(c)}, {"clamped", p.clamped(c)}};
  }
  if (p.p11_argmin) j["p11_argmin"] = *p.p11_argmin;
  return j;
}

}  // namespace twir
