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

#include "twir/bell_channel.hpp"

#include <cmath>
#include <stdexcept>

#include "twir/rng.hpp"

namespace twir {

BellDiagonal BellDiagonal::make(double p00, double p10, double p01, double p11) {
  BellDiagonal b{p00, p10, p01, p11};
  b.validate();
  return b;
}

void BellDiagonal::validate() const {
  for (double v : {p00, p10, p01, p11}) {
    if (!(v >= -kDistTolerance && v <= 1.0 + kDistTolerance)) {
      throw std::invalid_argument("BellDiagonal: entry outside [0,1]");
    }
  }
  if (std::abs(p00 + p10 + p01 + p11 - 1.0) > kDistTolerance) {
    throw std::invalid_argument("BellDiagonal: entries do not sum to 1");
  }
}

double BellDiagonal::at(int bitflip, int phase) const {
  if (bitflip == 0) return phase == 0 ? p00 : p01;
  return phase == 0 ? p10 : p11;
}

BellDiagonal six_state_point(double e) {
  if (!(e >= 0.0 && e <= 2.0 / 3.0 + 1e-15)) throw std::domain_error("six_state_point: e outside [0, 2/3]");
  const double h = e / 2.0;
  return BellDiagonal{std::max(0.0, 1.0 - 3.0 * h), h, h, h};
}

BellDiagonal bb84_family(double e, double p11) {
  if (!(e >= 0.0 && e <= 0.5)) throw std::domain_error("bb84_family: e outside [0, 1/2]");
  if (!(p11 >= 0.0 && p11 <= e)) throw std::domain_error("bb84_family: p11 outside [0, e]");
  const double p00 = 1.0 - 2.0 * e + p11;
  if (p00 < 0.0) throw std::domain_error("bb84_family: p00 negative");
  return BellDiagonal{p00, e - p11, e - p11, p11};
}

DerivedBlockDists derived_dists(const BellDiagonal& p) {
  p.validate();
  const double ok = p.p00 + p.p01;   // bit agrees
  const double bad = p.p10 + p.p11;  // bit flipped
  DerivedBlockDists d;
  const double one = 2.0 * ok * bad;
  d.w1_dist = Dist{1.0 - one, one};
  d.pbar = d.w1_dist;
  const double zero = ok * ok + bad * bad;
  if (zero > 0.0) {
    const double w2 = bad * bad / zero;
    d.w2_given_w1_0 = Dist{1.0 - w2, w2};
    BellDiagonal pp;
    pp.p00 = (p.p00 * p.p00 + p.p01 * p.p01) / zero;
    pp.p10 = 2.0 * p.p00 * p.p01 / zero;
    pp.p01 = (p.p10 * p.p10 + p.p11 * p.p11) / zero;
    pp.p11 = 2.0 * p.p10 * p.p11 / zero;
    d.pprime = pp;
  }
  return d;
}

std::pair<BitSeq, BitSeq> sample_pair(const BellDiagonal& p, std::size_t length, std::uint64_t seed) {
  p.validate();
  if (length < 2 || length % 2 != 0) throw std::invalid_argument("sample_pair: length must be even and >= 2");
  Rng rng(seed);
  const double flip = p.bit_error();
  BitSeq x(length), y(length);
  for (std::size_t i = 0; i < length; ++i) {
    const bool xi = rng.coin();
    const bool ei = rng.bernoulli(flip);
    x.set(i, xi);
    y.set(i, xi != ei);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace twir
