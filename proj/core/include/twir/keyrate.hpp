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

// Asymptotic key rates for Bell-diagonal channels and the six-state and
// BB84 error-rate families.

#ifndef TWIR_KEYRATE_HPP_
#define TWIR_KEYRATE_HPP_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "twir/bell_channel.hpp"

namespace twir {

/// Raw (unclamped) rates in bits per raw-key bit.
double rate_first_arg(const BellDiagonal& p);
double rate_second_arg(const BellDiagonal& p);
double rate_proposed(const BellDiagonal& p);
double rate_vollbrecht(const BellDiagonal& p);
double rate_bstep(const BellDiagonal& p);
double rate_oneway(const BellDiagonal& p);

enum class Curve { kProposed, kFirstArg, kSecondArg, kVollbrecht, kBstep, kOneway };
enum class Protocol { kSixState, kBb84 };

std::string_view curve_name(Curve c);
std::optional<Curve> parse_curve(std::string_view name);
double rate(const BellDiagonal& p, Curve c);

inline double clamp0(double x) { return x > 0.0 ? x : 0.0; }

struct RatePoint {
  double e = 0.0;
  // raw values
  double proposed = 0.0;
  double first_arg = 0.0;
  double second_arg = 0.0;
  double vollbrecht = 0.0;
  double bstep = 0.0;
  double oneway = 0.0;
  /// BB84 only: the p11 minimizing the proposed rate (first/second are
  /// reported at that point; other curves are minimized on their own).
  std::optional<double> p11_argmin;

  double raw(Curve c) const;
  double clamped(Curve c) const { return clamp0(raw(c)); }
};

RatePoint sixstate_rates(double e);
std::vector<RatePoint> sixstate_curve(const std::vector<double>& e_grid);

struct Bb84Min {
  double raw = 0.0;
  double p11 = 0.0;
  double clamped() const { return clamp0(raw); }
};

/// Minimum of the selected raw rate over p11 in [0, e]: 2001-point grid,
/// then golden-section refinement around the best grid point.
Bb84Min bb84_rate(double e, Curve which);
RatePoint bb84_rates(double e);

/// Raw rate of one curve for a protocol (BB84 minimized over p11).
double protocol_rate(Protocol proto, Curve which, double e);

struct Threshold {
  bool found = false;
  double e = 0.0;
};

/// Smallest e where the clamped curve reaches 0, scanning [0, emax] with
/// step then bisecting the raw curve to +-tol.
Threshold tolerable_rate(const std::function<double(double)>& raw_curve, double emax, double step = 1e-3,
                         double tol = 1e-5);

/// Rows at emin, emin+step, ..., emax (inclusive within step/2).
std::vector<RatePoint> sweep(double emin, double emax, double step, Protocol proto);

}  // namespace twir

#endif  // TWIR_KEYRATE_HPP_
