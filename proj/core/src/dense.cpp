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

#include "twir/dense.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "twir/rng.hpp"

namespace twir {

namespace {

using Solver = Eigen::SelfAdjointEigenSolver<CMatrix>;

// Clips tiny negative eigenvalues so square roots stay real.
// Eigenvalues below this fraction of the spectral radius are rounding noise;
// taking their square root would amplify them to ~1e-8.
constexpr double kSqrtFloor = 64.0 * std::numeric_limits<double>::epsilon();

Eigen::VectorXd floored_sqrt(const Eigen::VectorXd& l) {
  const double cut = kSqrtFloor * std::max(1.0, l.cwiseAbs().maxCoeff());
  return l.unaryExpr([cut](double x) { return x > cut ? std::sqrt(x) : 0.0; });
}

CMatrix psd_sqrt(const CMatrix& m) {
  Solver es(m);
  const Eigen::VectorXd s = floored_sqrt(es.eigenvalues());
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DenseHermitian::DenseHermitian(CMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("DenseHermitian: matrix not square");
  if (m.rows() == 0 || static_cast<std::size_t>(m.rows()) > kMaxDenseDim) {
    throw std::invalid_argument("DenseHermitian: dimension outside 1..256");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
    throw std::invalid_argument("DenseHermitian: matrix not Hermitian");
  }
  m_ = 0.5 * (m + m.adjoint());
}

DenseHermitian DenseHermitian::projector(const CVector& v) { return DenseHermitian(v * v.adjoint()); }

DenseHermitian DenseHermitian::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DenseHermitian(CMatrix::Identity(n, n));
}

DenseHermitian DenseHermitian::maximally_mixed(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DenseHermitian(CMatrix::Identity(n, n) / static_cast<double>(d));
}

Eigen::VectorXd DenseHermitian::eigenvalues() const {
  return Solver(m_, Eigen::EigenvaluesOnly).eigenvalues();
}

void DenseHermitian::require_state(bool unit_trace, double tol) const {
  if (eigenvalues().minCoeff() < -tol) throw std::domain_error("DenseHermitian: not positive semidefinite");
  if (unit_trace && std::abs(trace() - 1.0) > tol) throw std::domain_error("DenseHermitian: trace is not 1");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseHermitian kron(const DenseHermitian& a, const DenseHermitian& b) {
  return DenseHermitian(kron(a.matrix(), b.matrix()));
}

DenseHermitian partial_trace(const DenseHermitian& rho, const std::vector<std::size_t>& dims,
                             const std::vector<bool>& keep) {
  if (dims.size() != keep.size()) throw std::invalid_argument("partial_trace: dims/keep mismatch");
  std::size_t total = 1, kept = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    total *= dims[k];
    if (keep[k]) kept *= dims[k];
  }
  if (total != rho.dim()) throw std::invalid_argument("partial_trace: dims do not match matrix");
  // Split each full index into (kept index, traced index).
  std::vector<std::size_t> kept_idx(total), traced_idx(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i, ki = 0, ti = 0, kscale = 1, tscale = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
      const std::size_t digit = rem % dims[k];
      rem /= dims[k];
      if (keep[k]) { ki += digit * kscale; kscale *= dims[k]; }
      else { ti += digit * tscale; tscale *= dims[k]; }
    }
    kept_idx[i] = ki;
    traced_idx[i] = ti;
  }
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kept), static_cast<Eigen::Index>(kept));
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_idx[i] != traced_idx[j]) continue;
      out(static_cast<Eigen::Index>(kept_idx[i]), static_cast<Eigen::Index>(kept_idx[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return DenseHermitian(out);
}

double operator_entropy(const DenseHermitian& h) {
  double s = 0.0;
  for (double l : h.eigenvalues()) if (l > 0.0) s -= l * std::log2(l);
  return s;
}

double von_neumann_entropy(const DenseHermitian& rho) {
  rho.require_state();
  return operator_entropy(rho);
}

DenseHermitian support_projector(const DenseHermitian& rho) {
  Solver es(rho.matrix());
  const auto n = es.eigenvalues().size();
  CMatrix p = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (es.eigenvalues()(k) > kHermTol) p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
  }
  return DenseHermitian(p);
}

double max_entropy(const DenseHermitian& rho) {
  int rank = 0;
  for (double l : rho.eigenvalues()) if (l > kHermTol) ++rank;
  if (rank == 0) return -std::numeric_limits<double>::infinity();
  return std::log2(static_cast<double>(rank));
}

double min_entropy(const DenseHermitian& rho_ab, const DenseHermitian& sigma_b, std::size_t dim_a) {
  rho_ab.require_state(false);
  sigma_b.require_state(false);
  const std::size_t db = sigma_b.dim();
  if (dim_a * db != rho_ab.dim()) throw std::invalid_argument("min_entropy: dimension mismatch");
  Solver es(sigma_b.matrix());
  const auto n = static_cast<Eigen::Index>(db);
  CMatrix inv_sqrt = CMatrix::Zero(n, n), outside = CMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double l = es.eigenvalues()(k);
    if (l > kHermTol) {
      const CVector v = es.eigenvectors().col(k);
      inv_sqrt += (v * v.adjoint()) / std::sqrt(l);
      outside -= v * v.adjoint();
    }
  }
  const auto rho_b = partial_trace(rho_ab, {dim_a, db}, {false, true});
  if ((outside * rho_b.matrix() * outside).trace().real() > kHermTol) {
    return -std::numeric_limits<double>::infinity();
  }
  const auto da = static_cast<Eigen::Index>(dim_a);
  const CMatrix w = kron(CMatrix::Identity(da, da), inv_sqrt);
  const CMatrix g = w * rho_ab.matrix() * w;
  const double top = Solver(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  if (top <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log2(top);
}

double fidelity(const DenseHermitian& rho, const DenseHermitian& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const CMatrix s = psd_sqrt(rho.matrix());
  const CMatrix inner = s * sigma.matrix() * s;
  const Eigen::VectorXd l = Solver(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly).eigenvalues();
  return floored_sqrt(l).sum();
}

double trace_distance(const DenseHermitian& rho, const DenseHermitian& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  return DenseHermitian(rho.matrix() - sigma.matrix()).eigenvalues().cwiseAbs().sum();
}

DenseHermitian random_state(std::size_t d, std::size_t rank, Rng& rng) {
  if (d == 0 || rank == 0) throw std::invalid_argument("random_state: empty dimension");
  CMatrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = {rng.normal(), rng.normal()};
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DenseHermitian(rho);
}

}  // namespace twir
