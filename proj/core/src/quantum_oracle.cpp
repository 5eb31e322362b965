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

#include "twir/quantum_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace twir {

CVector bell_state(int x, int z) {
  if ((x != 0 && x != 1) || (z != 0 && z != 1)) throw std::invalid_argument("bell_state: labels must be bits");
  CVector v = CVector::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  v(x) = s;                            // |0, x>
  v(2 + (1 - x)) = z ? -s : s;         // |1, 1+x>
  return v;
}

DenseHermitian bell_diagonal_matrix(const BellDiagonal& p) {
  p.validate();
  CMatrix m = CMatrix::Zero(4, 4);
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      const CVector b = bell_state(x, z);
      m += p.at(x, z) * b * b.adjoint();
    }
  }
  return DenseHermitian(m);
}

CVector purify_bell_diagonal(const BellDiagonal& p) {
  p.validate();
  CVector psi = CVector::Zero(16);
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      const double w = std::sqrt(std::max(0.0, p.at(x, z)));
      const CVector b = bell_state(x, z);
      for (int ab = 0; ab < 4; ++ab) psi(ab * 4 + 2 * x + z) += w * b(ab);
    }
  }
  return psi;
}

CVector purify(const DenseHermitian& sigma_ab) {
  if (sigma_ab.dim() != 4) throw std::invalid_argument("purify: expected a two-qubit state");
  sigma_ab.require_state();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma_ab.matrix());
  CVector psi = CVector::Zero(16);
  for (int k = 0; k < 4; ++k) {
    const double w = std::sqrt(std::max(0.0, es.eigenvalues()(k)));
    for (int ab = 0; ab < 4; ++ab) psi(ab * 4 + k) = w * es.eigenvectors()(ab, k);
  }
  return psi / psi.norm();
}

double CcqState::total_probability() const {
  double t = 0.0;
  for (const auto& b : blocks) t += b.op.trace().real();
  return t;
}

void CcqState::validate(double tol) const {
  if (names.size() != sizes.size()) throw std::invalid_argument("CcqState: names/sizes mismatch");
  if (quantum_dim == 0 || quantum_dim > kMaxDenseDim) throw std::invalid_argument("CcqState: quantum dimension outside 1..256");
  for (const auto& b : blocks) {
    if (b.values.size() != sizes.size()) throw std::invalid_argument("CcqState: block arity mismatch");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (b.values[k] < 0 || b.values[k] >= sizes[k]) throw std::invalid_argument("CcqState: value outside alphabet");
    }
    if (static_cast<std::size_t>(b.op.rows()) != quantum_dim) throw std::invalid_argument("CcqState: block dimension mismatch");
    DenseHermitian(b.op).require_state(false, tol);
  }
  if (std::abs(total_probability() - 1.0) > tol) throw std::invalid_argument("CcqState: probabilities do not sum to 1");
}

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Entropy of the marginal on the listed registers, with or without the quantum part.
double marginal_entropy(const CcqState& s, const std::vector<std::size_t>& regs, bool with_quantum) {
  std::map<std::vector<int>, CMatrix> groups;
  const auto d = static_cast<Eigen::Index>(s.quantum_dim);
  for (const auto& b : s.blocks) {
    std::vector<int> key;
    key.reserve(regs.size());
    for (auto r : regs) key.push_back(b.values[r]);
    auto [it, fresh] = groups.try_emplace(key, CMatrix::Zero(d, d));
    it->second += b.op;
  }
  double h = 0.0;
  for (const auto& [key, op] : groups) {
    h += with_quantum ? operator_entropy(DenseHermitian(op)) : plogp(op.trace().real());
  }
  return h;
}

}  // namespace

double conditional_entropy(const CcqState& s, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& given, QuantumRole quantum) {
  if (s.quantum_dim > kMaxDenseDim) throw std::invalid_argument("conditional_entropy: quantum part too large");
  for (auto r : target) if (r >= s.sizes.size()) throw std::invalid_argument("conditional_entropy: bad register");
  for (auto r : given) {
    if (r >= s.sizes.size()) throw std::invalid_argument("conditional_entropy: bad register");
    if (std::find(target.begin(), target.end(), r) != target.end()) {
      throw std::invalid_argument("conditional_entropy: register both target and given");
    }
  }
  std::vector<std::size_t> joint = given;
  joint.insert(joint.end(), target.begin(), target.end());
  const bool q_joint = quantum != QuantumRole::kTraced;
  const bool q_given = quantum == QuantumRole::kGiven;
  return marginal_entropy(s, joint, q_joint) - marginal_entropy(s, given, q_given);
}

TwoCopyCcq assemble_two_copy_ccq(const CVector& psi, std::size_t dim_e) {
  if (static_cast<std::size_t>(psi.size()) != 4 * dim_e) throw std::invalid_argument("assemble_two_copy_ccq: size mismatch");
  if (dim_e * dim_e > kMaxDenseDim) throw std::invalid_argument("assemble_two_copy_ccq: purifying system too large");
  const auto de = static_cast<Eigen::Index>(dim_e);
  auto eve = [&](int a, int b) -> CVector { return psi.segment((2 * a + b) * de, de); };

  TwoCopyCcq out;
  out.state.names = {"U1", "U2", "W1"};
  out.state.sizes = {2, 2, 2};
  out.state.quantum_dim = dim_e * dim_e;
  std::map<std::vector<int>, CMatrix> blocks;
  double w1_one = 0.0, w1_zero = 0.0, w2_one = 0.0;
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int y1 = 0; y1 < 2; ++y1) {
      const CVector e1 = eve(x1, y1);
      for (int x2 = 0; x2 < 2; ++x2) {
        for (int y2 = 0; y2 < 2; ++y2) {
          const CVector e2 = eve(x2, y2);
          CVector e(de * de);
          for (Eigen::Index i = 0; i < de; ++i) e.segment(i * de, de) = e1(i) * e2;
          const double mass = e.squaredNorm();
          const int u1 = x1 ^ x2;
          const int w1 = u1 ^ y1 ^ y2;
          const int u2 = w1 ? 0 : x2;
          if (w1) {
            w1_one += mass;
          } else {
            w1_zero += mass;
            if (x2 != y2) w2_one += mass;
          }
          auto [it, fresh] = blocks.try_emplace({u1, u2, w1}, CMatrix::Zero(de * de, de * de));
          it->second += e * e.adjoint();
        }
      }
    }
  }
  for (auto& [key, op] : blocks) out.state.blocks.push_back({key, std::move(op)});
  const double total = w1_one + w1_zero;
  out.w1 = Dist{w1_zero / total, w1_one / total};
  if (w1_zero > 0.0) {
    const double q = w2_one / w1_zero;
    out.w2_given_w1_0 = Dist{1.0 - q, q};
  }
  return out;
}

TwoCopyCcq assemble_two_copy_ccq(const BellDiagonal& p) { return assemble_two_copy_ccq(purify_bell_diagonal(p), 4); }

namespace {

BracketValues brackets(const CcqState& s, const Dist& w1, const std::optional<Dist>& w2) {
  const double w2_term = w2 ? w1[0] * shannon_entropy(*w2) : 0.0;
  const double h_u1u2 = conditional_entropy(s, {0, 1}, {2}, QuantumRole::kGiven);
  const double h_u2 = conditional_entropy(s, {1}, {2, 0}, QuantumRole::kGiven);
  return {0.5 * (h_u1u2 - shannon_entropy(w1) - w2_term), 0.5 * (h_u2 - w2_term)};
}

}  // namespace

BracketValues bracket_values(const TwoCopyCcq& ccq) { return brackets(ccq.state, ccq.w1, ccq.w2_given_w1_0); }

BracketValues theorem3_direct(const BellDiagonal& p) {
  const auto ccq = assemble_two_copy_ccq(p);
  const auto d = derived_dists(p);
  return brackets(ccq.state, d.w1_dist, d.w2_given_w1_0);
}

DenseHermitian discrete_twirl(const DenseHermitian& sigma_ab) {
  if (sigma_ab.dim() != 4) throw std::invalid_argument("discrete_twirl: expected a two-qubit operator");
  CMatrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  CMatrix acc = CMatrix::Zero(4, 4);
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      CMatrix g = CMatrix::Identity(2, 2);
      if (s) g = g * x;
      if (t) g = g * z;
      const CMatrix u = kron(g, g);
      acc += u * sigma_ab.matrix() * u.adjoint();
    }
  }
  return DenseHermitian(acc / 4.0);
}

WorstCaseRecord worst_case_check(const DenseHermitian& sigma_ab, double slack) {
  const auto before = assemble_two_copy_ccq(purify(sigma_ab), 4);
  const auto after = assemble_two_copy_ccq(purify(discrete_twirl(sigma_ab)), 4);
  WorstCaseRecord r;
  r.original = bracket_values(before);
  r.twirled = bracket_values(after);
  r.first_ok = r.twirled.first_arg <= r.original.first_arg + slack;
  r.second_ok = r.twirled.second_arg <= r.original.second_arg + slack;
  r.w1_shift = std::abs(before.w1[1] - after.w1[1]);
  const double w2b = before.w2_given_w1_0 ? (*before.w2_given_w1_0)[1] : 0.0;
  const double w2a = after.w2_given_w1_0 ? (*after.w2_given_w1_0)[1] : 0.0;
  r.w2_shift = std::abs(w2b - w2a);
  return r;
}

CosetCheck coset_decomposition_check(const BellDiagonal& p, std::size_t m, const std::vector<std::uint32_t>& code,
                                     std::uint32_t shift) {
  p.validate();
  if (m == 0 || m > 3) throw std::invalid_argument("coset_decomposition_check: m must be 1..3");
  const std::uint32_t full = (1u << m) - 1;
  if (code.empty() || (shift & ~full)) throw std::invalid_argument("coset_decomposition_check: bad code or shift");
  for (auto c : code) {
    if (c & ~full) throw std::invalid_argument("coset_decomposition_check: codeword too long");
    for (auto c2 : code) {
      if (std::find(code.begin(), code.end(), c ^ c2) == code.end()) {
        throw std::invalid_argument("coset_decomposition_check: code is not linear");
      }
    }
  }
  std::vector<std::uint32_t> dual;
  for (std::uint32_t v = 0; v <= full; ++v) {
    bool ok = true;
    for (auto c : code) ok = ok && std::popcount(v & c) % 2 == 0;
    if (ok) dual.push_back(v);
  }
  // Canonical representative of each dual class: its smallest element.
  std::vector<std::uint32_t> reps;
  for (std::uint32_t j = 0; j <= full; ++j) {
    bool smallest = true;
    for (auto c : dual) smallest = smallest && (j ^ c) >= j;
    if (smallest) reps.push_back(j);
  }
  const auto dim = static_cast<Eigen::Index>(1u << (2 * m));
  auto prob = [&](std::uint32_t xbar, std::uint32_t z) {
    double pr = 1.0;
    for (std::size_t k = 0; k < m; ++k) pr *= p.at((xbar >> k) & 1u, (z >> k) & 1u);
    return pr;
  };
  auto index = [&](std::uint32_t xbar, std::uint32_t z) {
    Eigen::Index idx = 0;
    for (std::size_t k = 0; k < m; ++k) idx = idx * 4 + 2 * ((xbar >> k) & 1u) + ((z >> k) & 1u);
    return idx;
  };
  auto sign = [](std::uint32_t a, std::uint32_t z) { return std::popcount(a & z) % 2 ? -1.0 : 1.0; };

  CosetCheck out;
  for (std::uint32_t xbar = 0; xbar <= full; ++xbar) {
    double px = 0.0;
    for (std::uint32_t z = 0; z <= full; ++z) px += prob(xbar, z);
    if (px <= 0.0) continue;
    CMatrix lhs = CMatrix::Zero(dim, dim);
    for (auto c : code) {
      CVector phi = CVector::Zero(dim);
      for (std::uint32_t z = 0; z <= full; ++z) phi(index(xbar, z)) = sign(c ^ shift, z) * std::sqrt(prob(xbar, z) / px);
      lhs += phi * phi.adjoint() / static_cast<double>(code.size());
    }
    CMatrix rhs = CMatrix::Zero(dim, dim);
    std::vector<CVector> kets;
    for (auto j : reps) {
      CVector v = CVector::Zero(dim);
      for (auto c : dual) v(index(xbar, j ^ c)) = sign(shift, j ^ c) * std::sqrt(prob(xbar, j ^ c));
      const double weight = v.squaredNorm();
      if (weight <= 0.0) continue;
      // P(j | xbar) |theta_j><theta_j| with |theta_j> = v / |v|.
      rhs += (weight / px) * (v / std::sqrt(weight)) * (v / std::sqrt(weight)).adjoint();
      kets.push_back(v / std::sqrt(weight));
    }
    out.max_deviation = std::max(out.max_deviation, (lhs - rhs).cwiseAbs().maxCoeff());
    for (std::size_t i = 0; i < kets.size(); ++i) {
      for (std::size_t k = i + 1; k < kets.size(); ++k) {
        out.max_overlap = std::max(out.max_overlap, std::abs(kets[i].dot(kets[k])));
      }
    }
  }
  return out;
}

}  // namespace twir
