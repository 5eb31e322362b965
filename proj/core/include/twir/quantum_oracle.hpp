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

// Explicit density-matrix computations that cross-check the closed-form
// rates: purifications, the two-copy classical-quantum state, twirling and
// the coset decomposition of Eve's states.

#ifndef TWIR_QUANTUM_ORACLE_HPP_
#define TWIR_QUANTUM_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twir/bell_channel.hpp"
#include "twir/dense.hpp"

namespace twir {

/// Bell vector (|0,x> + (-1)^z |1,1+x>)/sqrt2 in the basis |a,b>, index 2a+b.
CVector bell_state(int x, int z);

/// sum_xz p_xz |psi(x,z)><psi(x,z)|.
DenseHermitian bell_diagonal_matrix(const BellDiagonal& p);

/// sum_xz sqrt(p_xz) |psi(x,z)>|x,z>: index (2a+b)*4 + (2x+z).
CVector purify_bell_diagonal(const BellDiagonal& p);

/// Purification of a two-qubit state through its eigendecomposition,
/// with a four-dimensional purifying system. Same index layout.
CVector purify(const DenseHermitian& sigma_ab);

/// Classical registers plus a quantum part. Each block holds one joint value
/// of the classical registers and its unnormalized conditional operator
/// (trace = probability of that value).
struct CcqState {
  struct Block {
    std::vector<int> values;
    CMatrix op;
  };
  std::vector<std::string> names;
  std::vector<int> sizes;
  std::size_t quantum_dim = 1;
  std::vector<Block> blocks;

  /// Checks alphabet ranges, dimensions (<= 256), PSD blocks and total mass 1.
  void validate(double tol = 1e-10) const;
  double total_probability() const;
};

enum class QuantumRole { kTraced, kTarget, kGiven };

/// H(target [Q] | given [Q]) = H(target given [Q]) - H(given [Q]), with
/// registers addressed by index and the quantum part placed per role.
double conditional_entropy(const CcqState& s, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& given, QuantumRole quantum);

/// Two-copy state after z-basis measurement of A and B, with registers
/// U1 (index 0), U2 (1), W1 (2) and both purifying systems as the quantum part.
struct TwoCopyCcq {
  CcqState state;
  Dist w1{0.5, 0.5};                ///< law of the parity discrepancy
  std::optional<Dist> w2_given_w1_0;  ///< second-bit discrepancy given agreement
};

TwoCopyCcq assemble_two_copy_ccq(const BellDiagonal& p);
/// From any pure state on A B E with index (2a+b)*dim_e + e.
TwoCopyCcq assemble_two_copy_ccq(const CVector& psi_abe, std::size_t dim_e);

struct BracketValues {
  double first_arg = 0.0;
  double second_arg = 0.0;
};

/// Both rate brackets (halved) from the ccq entropies, using the ccq's own
/// discrepancy laws.
BracketValues bracket_values(const TwoCopyCcq& ccq);

/// Same brackets for a Bell-diagonal channel, with the discrepancy laws from
/// derived_dists.
BracketValues theorem3_direct(const BellDiagonal& p);

/// Average over the four conjugations by (X^s Z^t) (x) (X^s Z^t).
DenseHermitian discrete_twirl(const DenseHermitian& sigma_ab);

struct WorstCaseRecord {
  BracketValues original;
  BracketValues twirled;
  bool first_ok = false;   ///< twirled.first_arg <= original.first_arg + slack
  bool second_ok = false;  ///< same for second_arg
  double w1_shift = 0.0;   ///< |P_W1(1) before - after|
  double w2_shift = 0.0;   ///< |P_W2|W1=0(1) before - after|
};

WorstCaseRecord worst_case_check(const DenseHermitian& sigma_ab, double slack = 1e-9);

struct CosetCheck {
  double max_deviation = 0.0;  ///< entrywise, over all discrepancy patterns
  double max_overlap = 0.0;    ///< largest |<v_j|v_j'>| between distinct classes
};

/// Compares the C-averaged Eve state with its decomposition over classes of
/// the dual code, for m copies (m <= 3). code lists the codewords of a linear
/// C as bit masks (bit k = copy k); shift is the offset a.
CosetCheck coset_decomposition_check(const BellDiagonal& p, std::size_t m, const std::vector<std::uint32_t>& code,
                                     std::uint32_t shift);

}  // namespace twir

#endif  // TWIR_QUANTUM_ORACLE_HPP_
