// Copyright 2026 The triqhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "triqhe/linalg.hpp"

#include <cmath>
#include <string>

#include "triqhe/errors.hpp"

namespace triqhe {

std::int64_t pow3(int n) {
  if (n < 0 || n > 39) {
    throw std::invalid_argument("pow3: exponent out of range: " +
                                std::to_string(n));
  }
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

double max_abs(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

CMat dagger(const CMat& a) { return a.adjoint(); }

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_unitary(const CMat& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) return false;
  CMat d = u * u.adjoint() - CMat::Identity(u.rows(), u.cols());
  return max_abs(d) <= tol;
}

QState::QState(int qutrits, CVec amplitudes)
    : n_(qutrits), amps_(std::move(amplitudes)) {
  if (n_ < 1) throw std::invalid_argument("QState: need at least one qutrit");
  if (amps_.size() != pow3(n_)) {
    throw DimensionError("QState: " + std::to_string(amps_.size()) +
                         " amplitudes for " + std::to_string(n_) + " qutrits");
  }
  double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw std::invalid_argument("QState: norm " + std::to_string(norm) +
                                " is not 1");
  }
}

QState QState::basis(int qutrits, std::int64_t index) {
  if (qutrits < 1) {
    throw std::invalid_argument("QState::basis: need at least one qutrit");
  }
  std::int64_t dim = pow3(qutrits);
  if (index < 0 || index >= dim) {
    throw DimensionError("QState::basis: index " + std::to_string(index) +
                         " outside dimension " + std::to_string(dim));
  }
  CVec a = CVec::Zero(dim);
  a(index) = 1.0;
  return QState(qutrits, std::move(a));
}

DensityMatrix::DensityMatrix(int qutrits, CMat m)
    : n_(qutrits), m_(std::move(m)) {
  if (n_ < 1) {
    throw std::invalid_argument("DensityMatrix: need at least one qutrit");
  }
  std::int64_t dim = pow3(n_);
  if (m_.rows() != dim || m_.cols() != dim) {
    throw DimensionError("DensityMatrix: shape " + std::to_string(m_.rows()) +
                         "x" + std::to_string(m_.cols()) + " for " +
                         std::to_string(n_) + " qutrits");
  }
  if (max_abs(m_ - m_.adjoint()) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(m_.trace().real() - 1.0) > 1e-10 ||
      std::abs(m_.trace().imag()) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
}

DensityMatrix DensityMatrix::pure(const QState& s) {
  CMat m = s.amplitudes() * s.amplitudes().adjoint();
  return DensityMatrix(s.qutrits(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int qutrits) {
  std::int64_t dim = pow3(qutrits);
  CMat m = CMat::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(qutrits, std::move(m));
}

QState apply(const CMat& u, const QState& s) {
  if (u.rows() != u.cols() || u.cols() != s.dim()) {
    throw DimensionError("apply: operator shape " + std::to_string(u.rows()) +
                         "x" + std::to_string(u.cols()) +
                         " does not fit state dimension " +
                         std::to_string(s.dim()));
  }
  CVec out = u * s.amplitudes();
  if (std::abs(out.norm() - 1.0) > 1e-8) {
    throw DimensionError("apply: operator is not norm preserving");
  }
  return QState(s.qutrits(), std::move(out));
}

DensityMatrix conjugate(const CMat& u, const DensityMatrix& rho) {
  if (u.rows() != u.cols() || u.cols() != rho.dim()) {
    throw DimensionError("conjugate: operator does not fit density matrix");
  }
  return DensityMatrix(rho.qutrits(), u * rho.matrix() * u.adjoint());
}

double trace_distance(const DensityMatrix& p, const DensityMatrix& q) {
  if (p.dim() != q.dim()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(p.matrix() - q.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("trace_distance: eigensolver failed");
  }
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const DensityMatrix& p) {
  Eigen::SelfAdjointEigenSolver<CMat> es(p.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("von_neumann_entropy: eigensolver failed");
  }
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lambda = es.eigenvalues()(i);
    if (lambda < -1e-9) {
      throw std::invalid_argument("von_neumann_entropy: negative eigenvalue " +
                                  std::to_string(lambda));
    }
    if (lambda > 1e-12) h -= lambda * std::log(lambda);
  }
  return h / std::log(3.0);
}

}  // namespace triqhe
