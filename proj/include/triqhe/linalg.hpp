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

#ifndef TRIQHE_LINALG_HPP
#define TRIQHE_LINALG_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace triqhe {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// 3^n, valid for 0 <= n <= 39.
std::int64_t pow3(int n);

// Largest entry magnitude; 0 for empty matrices.
double max_abs(const CMat& a);

CMat dagger(const CMat& a);

// Kronecker product, row-major block convention: the first factor selects
// the block, the second fills it.
CMat kron(const CMat& a, const CMat& b);

// max_abs(U U^dag - I) <= tol.
bool is_unitary(const CMat& u, double tol = 1e-10);

// Pure state of n qutrits over the computational basis, indexed big-endian:
// the first qutrit is the most significant base-3 digit.
class QState {
 public:
  // amplitudes must have length 3^n and unit norm within 1e-8.
  QState(int qutrits, CVec amplitudes);

  static QState basis(int qutrits, std::int64_t index);

  int qutrits() const { return n_; }
  std::int64_t dim() const { return amps_.size(); }
  const CVec& amplitudes() const { return amps_; }

 private:
  int n_;
  CVec amps_;
};

// Hermitian, unit-trace operator on n qutrits.
class DensityMatrix {
 public:
  // m must be 3^n x 3^n, Hermitian within 1e-10, trace 1 within 1e-10.
  DensityMatrix(int qutrits, CMat m);

  static DensityMatrix pure(const QState& s);
  static DensityMatrix maximally_mixed(int qutrits);

  int qutrits() const { return n_; }
  std::int64_t dim() const { return m_.rows(); }
  const CMat& matrix() const { return m_; }

 private:
  int n_;
  CMat m_;
};

// u|s>. Rejects dimension mismatch and norm drift beyond 1e-8; never
// renormalizes.
QState apply(const CMat& u, const QState& s);

// u rho u^dag.
DensityMatrix conjugate(const CMat& u, const DensityMatrix& rho);

// (1/2) * sum of |eigenvalues| of p - q.
double trace_distance(const DensityMatrix& p, const DensityMatrix& q);

// -sum lambda * log3(lambda) over eigenvalues above 1e-12. Rejects
// eigenvalues below -1e-9.
double von_neumann_entropy(const DensityMatrix& p);

}  // namespace triqhe

#endif  // TRIQHE_LINALG_HPP
