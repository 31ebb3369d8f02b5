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

#ifndef TRIQHE_CARTAN_HPP
#define TRIQHE_CARTAN_HPP

#include <array>
#include <cstdint>

#include "triqhe/linalg.hpp"

namespace triqhe {

// Parameters of the eight-factor product
//   e^(i alpha) Ry01(beta) Ry02(gamma) Ry01(delta) Rz01(theta)
//   Rz02(phi) Ry01(beta2) Ry02(gamma2) Ry01(delta2)
// which covers all of U(3).
struct CartanParams {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  double delta = 0;
  double theta = 0;
  double phi = 0;
  double beta2 = 0;
  double gamma2 = 0;
  double delta2 = 0;

  std::array<double, 9> to_array() const;
  static CartanParams from_array(const std::array<double, 9>& a);

  // Rotation angles wrapped into [-2 pi, 2 pi), alpha into [-pi, pi).
  CartanParams normalized() const;
};

// The eight individual rotation factors, leftmost first, phase excluded.
std::array<CMat, 8> cartan_factors(const CartanParams& p);

CMat compose(const CartanParams& p);

// Frobenius norm of compose(p) - u.
double residual(const CartanParams& p, const CMat& u);

struct FitOptions {
  int max_restarts = 48;
  int search_iterations = 2500;
  int polish_iterations = 600;
  double target_residual = 1e-10;  // stop restarting once reached
  double fail_threshold = 1e-8;    // above this the fit reports failure
  std::uint64_t seed = 20240917;
};

// Recovers parameters with residual(fit(u), u) <= fail_threshold via a
// derivative-free simplex search with deterministic seeded restarts. The
// same input and options always return the same parameters; ties between
// equally good restarts go to the lexicographically smaller normalized
// parameter vector.
CartanParams fit(const CMat& u, const FitOptions& opt = {});

}  // namespace triqhe

#endif  // TRIQHE_CARTAN_HPP
