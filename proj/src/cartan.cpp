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

#include "triqhe/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "triqhe/errors.hpp"
#include "triqhe/gates.hpp"

namespace triqhe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps into [-half, half).
double wrap(double x, double half) {
  double span = 2.0 * half;
  double r = x - span * std::floor((x + half) / span);
  if (r >= half) r -= span;  // guards the floor rounding edge
  return r;
}

}  // namespace

std::array<double, 9> CartanParams::to_array() const {
  return {alpha, beta, gamma, delta, theta, phi, beta2, gamma2, delta2};
}

CartanParams CartanParams::from_array(const std::array<double, 9>& a) {
  CartanParams p;
  p.alpha = a[0];
  p.beta = a[1];
  p.gamma = a[2];
  p.delta = a[3];
  p.theta = a[4];
  p.phi = a[5];
  p.beta2 = a[6];
  p.gamma2 = a[7];
  p.delta2 = a[8];
  return p;
}

CartanParams CartanParams::normalized() const {
  auto a = to_array();
  a[0] = wrap(a[0], std::numbers::pi);
  for (int i = 1; i < 9; ++i) a[i] = wrap(a[i], kTwoPi);
  return from_array(a);
}

std::array<CMat, 8> cartan_factors(const CartanParams& p) {
  const LevelPair p01(0, 1), p02(0, 2);
  return {rotation(Axis::Y, p01, p.beta),   rotation(Axis::Y, p02, p.gamma),
          rotation(Axis::Y, p01, p.delta),  rotation(Axis::Z, p01, p.theta),
          rotation(Axis::Z, p02, p.phi),    rotation(Axis::Y, p01, p.beta2),
          rotation(Axis::Y, p02, p.gamma2), rotation(Axis::Y, p01, p.delta2)};
}

CMat compose(const CartanParams& p) {
  auto f = cartan_factors(p);
  CMat u = f[0];
  for (int i = 1; i < 8; ++i) u *= f[i];
  return std::exp(Complex(0, p.alpha)) * u;
}

double residual(const CartanParams& p, const CMat& u) {
  return (compose(p) - u).norm();
}

namespace {

using Vec9 = Eigen::Matrix<double, 9, 1>;

CartanParams params_of(const Vec9& x) {
  std::array<double, 9> a;
  for (int i = 0; i < 9; ++i) a[i] = x(i);
  return CartanParams::from_array(a);
}

double objective(const Vec9& x, const CMat& u) {
  return (compose(params_of(x)) - u).squaredNorm();
}

// Simplex descent: reflect, expand, inside-contract, shrink.
void nelder_mead(const CMat& u, Vec9& x, double& fx, double h, int iters) {
  constexpr int kN = 9;
  std::array<Vec9, kN + 1> pts;
  std::array<double, kN + 1> fs;
  pts[0] = x;
  fs[0] = fx;
  for (int i = 0; i < kN; ++i) {
    pts[i + 1] = x;
    pts[i + 1](i) += h;
    fs[i + 1] = objective(pts[i + 1], u);
  }

  std::array<int, kN + 1> order;
  for (int it = 0; it < iters; ++it) {
    for (int i = 0; i <= kN; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    {
      std::array<Vec9, kN + 1> p2;
      std::array<double, kN + 1> f2;
      for (int i = 0; i <= kN; ++i) {
        p2[i] = pts[order[i]];
        f2[i] = fs[order[i]];
      }
      pts = p2;
      fs = f2;
    }
    if (fs[0] < 1e-26) break;

    Vec9 c = Vec9::Zero();
    for (int i = 0; i < kN; ++i) c += pts[i];
    c /= kN;

    Vec9 xr = 2.0 * c - pts[kN];
    double fr = objective(xr, u);
    if (fr < fs[0]) {
      Vec9 xe = c + 2.0 * (c - pts[kN]);
      double fe = objective(xe, u);
      if (fe < fr) {
        pts[kN] = xe;
        fs[kN] = fe;
      } else {
        pts[kN] = xr;
        fs[kN] = fr;
      }
    } else if (fr < fs[kN - 1]) {
      pts[kN] = xr;
      fs[kN] = fr;
    } else {
      Vec9 xc = c + 0.5 * (pts[kN] - c);
      double fc = objective(xc, u);
      if (fc < fs[kN]) {
        pts[kN] = xc;
        fs[kN] = fc;
      } else {
        for (int i = 1; i <= kN; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          fs[i] = objective(pts[i], u);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= kN; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  x = pts[best];
  fx = fs[best];
}

bool lex_less(const std::array<double, 9>& a, const std::array<double, 9>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CartanParams fit(const CMat& u, const FitOptions& opt) {
  if (u.rows() != 3 || u.cols() != 3) {
    throw std::invalid_argument("fit: need a 3x3 matrix");
  }
  if (!is_unitary(u, 1e-8)) {
    throw std::invalid_argument("fit: matrix is not unitary");
  }
  if (opt.max_restarts < 1) {
    throw std::invalid_argument("fit: need at least one restart");
  }

  std::mt19937_64 engine(opt.seed);
  std::uniform_real_distribution<double> start(-std::numbers::pi,
                                               std::numbers::pi);

  bool have_best = false;
  double best_f = 0;
  std::array<double, 9> best_params{};
  const double target_f = opt.target_residual * opt.target_residual;

  for (int restart = 0; restart < opt.max_restarts; ++restart) {
    Vec9 x;
    for (int i = 0; i < 9; ++i) x(i) = start(engine);
    double fx = objective(x, u);
    nelder_mead(u, x, fx, 1.0, opt.search_iterations);
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      nelder_mead(u, x, fx, h, opt.polish_iterations);
    }

    CartanParams cand = params_of(x).normalized();
    auto arr = cand.to_array();
    double f = objective(Vec9(arr.data()), u);
    if (!have_best || f < best_f - 1e-24 ||
        (std::abs(f - best_f) <= 1e-24 && lex_less(arr, best_params))) {
      have_best = true;
      best_f = f;
      best_params = arr;
    }
    if (best_f <= target_f) break;
  }

  if (std::sqrt(best_f) > opt.fail_threshold) {
    throw ConvergenceError("fit: best residual " +
                           std::to_string(std::sqrt(best_f)) +
                           " above threshold after restarts");
  }
  return CartanParams::from_array(best_params);
}

}  // namespace triqhe
