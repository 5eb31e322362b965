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

#include "twir/keyrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twir {

namespace {

// x * h(num/den) with the vanishing-prefactor convention.
double weighted_h(double weight, double num, double den) {
  if (weight == 0.0 || den <= 0.0) return 0.0;
  return weight * binary_entropy(std::clamp(num / den, 0.0, 1.0));
}

}  // namespace

double rate_oneway(const BellDiagonal& p) { return 1.0 - shannon_entropy(p.as_dist()); }

double rate_first_arg(const BellDiagonal& p) {
  const double ok = p.p00 + p.p01, bad = p.p10 + p.p11;
  const auto d = derived_dists(p);
  return rate_oneway(p) + weighted_h(d.pbar[1] / 2.0, p.p00 * p.p10 + p.p01 * p.p11, ok * bad);
}

double rate_second_arg(const BellDiagonal& p) {
  const auto d = derived_dists(p);
  if (!d.pprime) return 0.0;
  return d.pbar[0] / 2.0 * (1.0 - shannon_entropy(d.pprime->as_dist()));
}

double rate_proposed(const BellDiagonal& p) { return std::max(rate_first_arg(p), rate_second_arg(p)); }

double rate_vollbrecht(const BellDiagonal& p) {
  const double ok = p.p00 + p.p01, bad = p.p10 + p.p11;
  const double w = derived_dists(p).pbar[1] / 4.0;
  return rate_oneway(p) + weighted_h(w, p.p01, ok) + weighted_h(w, p.p11, bad);
}

double rate_bstep(const BellDiagonal& p) { return rate_second_arg(p); }

std::string_view curve_name(Curve c) {
  switch (c) {
    case Curve::kProposed: return "proposed";
    case Curve::kFirstArg: return "first_arg";
    case Curve::kSecondArg: return "second_arg";
    case Curve::kVollbrecht: return "vollbrecht";
    case Curve::kBstep: return "bstep";
    case Curve::kOneway: return "oneway";
  }
  return "?";
}

std::optional<Curve> parse_curve(std::string_view name) {
  for (auto c : {Curve::kProposed, Curve::kFirstArg, Curve::kSecondArg, Curve::kVollbrecht, Curve::kBstep,
                 Curve::kOneway}) {
    if (curve_name(c) == name) return c;
  }
  return std::nullopt;
}

double rate(const BellDiagonal& p, Curve c) {
  switch (c) {
    case Curve::kProposed: return rate_proposed(p);
    case Curve::kFirstArg: return rate_first_arg(p);
    case Curve::kSecondArg: return rate_second_arg(p);
    case Curve::kVollbrecht: return rate_vollbrecht(p);
    case Curve::kBstep: return rate_bstep(p);
    case Curve::kOneway: return rate_oneway(p);
  }
  throw std::invalid_argument("rate: unknown curve");
}

double RatePoint::raw(Curve c) const {
  switch (c) {
    case Curve::kProposed: return proposed;
    case Curve::kFirstArg: return first_arg;
    case Curve::kSecondArg: return second_arg;
    case Curve::kVollbrecht: return vollbrecht;
    case Curve::kBstep: return bstep;
    case Curve::kOneway: return oneway;
  }
  throw std::invalid_argument("RatePoint::raw: unknown curve");
}

RatePoint sixstate_rates(double e) {
  const auto p = six_state_point(e);
  RatePoint r;
  r.e = e;
  r.first_arg = rate_first_arg(p);
  r.second_arg = rate_second_arg(p);
  r.proposed = std::max(r.first_arg, r.second_arg);
  r.vollbrecht = rate_vollbrecht(p);
  r.bstep = r.second_arg;
  r.oneway = rate_oneway(p);
  return r;
}

std::vector<RatePoint> sixstate_curve(const std::vector<double>& e_grid) {
  std::vector<RatePoint> out;
  out.reserve(e_grid.size());
  for (double e : e_grid) out.push_back(sixstate_rates(e));
  return out;
}

Bb84Min bb84_rate(double e, Curve which) {
  if (!(e >= 0.0 && e <= 0.5)) throw std::domain_error("bb84_rate: e outside [0, 1/2]");
  auto f = [&](double p11) { return rate(bb84_family(e, std::clamp(p11, 0.0, e)), which); };
  if (e == 0.0) return {f(0.0), 0.0};
  constexpr int kGrid = 2001;
  const double h = e / (kGrid - 1);
  Bb84Min best{f(0.0), 0.0};
  int best_i = 0;
  for (int i = 1; i < kGrid; ++i) {
    const double x = i == kGrid - 1 ? e : i * h;
    const double v = f(x);
    if (v < best.raw) { best = {v, x}; best_i = i; }
  }
  double a = std::max(0, best_i - 1) * h, b = std::min(e, (best_i + 1) * h);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (fc < fd) { b = d; d = c; fd = fc; c = b - g * (b - a); fc = f(c); }
    else { a = c; c = d; fc = fd; d = a + g * (b - a); fd = f(d); }
  }
  if (fc < best.raw) best = {fc, c};
  if (fd < best.raw) best = {fd, d};
  return best;
}

RatePoint bb84_rates(double e) {
  RatePoint r;
  r.e = e;
  const auto prop = bb84_rate(e, Curve::kProposed);
  const auto p = bb84_family(e, prop.p11);
  r.proposed = prop.raw;
  r.p11_argmin = prop.p11;
  r.first_arg = rate_first_arg(p);
  r.second_arg = rate_second_arg(p);
  r.vollbrecht = bb84_rate(e, Curve::kVollbrecht).raw;
  r.bstep = bb84_rate(e, Curve::kBstep).raw;
  r.oneway = bb84_rate(e, Curve::kOneway).raw;
  return r;
}

double protocol_rate(Protocol proto, Curve which, double e) {
  if (proto == Protocol::kSixState) return rate(six_state_point(e), which);
  return bb84_rate(e, which).raw;
}

Threshold tolerable_rate(const std::function<double(double)>& raw_curve, double emax, double step, double tol) {
  if (!(step > 0.0)) throw std::invalid_argument("tolerable_rate: step must be positive");
  if (!(raw_curve(0.0) > 0.0)) throw std::invalid_argument("tolerable_rate: curve not positive at 0");
  double prev = 0.0;
  const long steps = std::lround(std::floor(emax / step + 1e-9));
  for (long i = 1; i <= steps; ++i) {
    const double e = static_cast<double>(i) * step;
    if (raw_curve(e) <= 0.0) {
      double lo = prev, hi = e;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (raw_curve(mid) > 0.0 ? lo : hi) = mid;
      }
      return {true, 0.5 * (lo + hi)};
    }
    prev = e;
  }
  return {false, emax};
}

std::vector<RatePoint> sweep(double emin, double emax, double step, Protocol proto) {
  if (!(emin < emax)) throw std::invalid_argument("sweep: need emin < emax");
  if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
  const long count = std::lround(std::floor((emax - emin) / step + 0.5)) + 1;
  std::vector<RatePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double e = std::min(emax, emin + static_cast<double>(i) * step);
    out.push_back(proto == Protocol::kSixState ? sixstate_rates(e) : bb84_rates(e));
  }
  return out;
}

}  // namespace twir
