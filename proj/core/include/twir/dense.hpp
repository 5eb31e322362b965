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

// Small dense Hermitian matrices: entropies, min/max entropy, fidelity.

#ifndef TWIR_DENSE_HPP_
#define TWIR_DENSE_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace twir {

class Rng;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxDenseDim = 256;
inline constexpr double kHermTol = 1e-10;

/// Hermitian matrix of dimension <= 256. The stored matrix is the exact
/// Hermitian part of the input, after checking the input was Hermitian
/// within kHermTol.
class DenseHermitian {
 public:
  DenseHermitian() = default;
  explicit DenseHermitian(CMatrix m);

  static DenseHermitian projector(const CVector& v);
  static DenseHermitian identity(std::size_t d);
  static DenseHermitian maximally_mixed(std::size_t d);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

  /// Throws std::domain_error unless PSD within tol (and trace 1 when unit_trace).
  void require_state(bool unit_trace = true, double tol = kHermTol) const;

 private:
  CMatrix m_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
DenseHermitian kron(const DenseHermitian& a, const DenseHermitian& b);

/// Partial trace over every subsystem whose keep flag is false. Subsystem 0
/// is the most significant factor of the index.
DenseHermitian partial_trace(const DenseHermitian& rho, const std::vector<std::size_t>& dims,
                             const std::vector<bool>& keep);

/// -sum lambda log2 lambda over positive eigenvalues. No normalization
/// check, so block operators with trace below 1 are accepted.
double operator_entropy(const DenseHermitian& h);

/// Entropy of a state; validates PSD and unit trace.
double von_neumann_entropy(const DenseHermitian& rho);

/// H_min(rho_AB | sigma_B) with A the first factor of dimension dim_a.
/// Returns -infinity when the support of rho_B is not inside that of sigma_B.
double min_entropy(const DenseHermitian& rho_ab, const DenseHermitian& sigma_b, std::size_t dim_a);

/// log2 of the rank (eigenvalues above kHermTol).
double max_entropy(const DenseHermitian& rho);

/// Projector onto the eigenvectors with eigenvalue above kHermTol.
DenseHermitian support_projector(const DenseHermitian& rho);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const DenseHermitian& rho, const DenseHermitian& sigma);

/// Sum of absolute eigenvalues of (rho - sigma).
double trace_distance(const DenseHermitian& rho, const DenseHermitian& sigma);

/// Random density matrix G G^dagger / Tr with a d x rank Ginibre G.
DenseHermitian random_state(std::size_t d, std::size_t rank, Rng& rng);

}  // namespace twir

#endif  // TWIR_DENSE_HPP_
