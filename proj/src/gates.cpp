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

#include "triqhe/gates.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

// Permutation matrix of f over {0,..,dim-1}: column x carries a 1 in row f(x).
CMat perm_matrix(std::int64_t dim, const std::function<std::int64_t(std::int64_t)>& f) {
  CMat m = CMat::Zero(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) m(f(x), x) = 1.0;
  return m;
}

}  // namespace

LevelPair::LevelPair(int i_, int j_) : i(i_), j(j_) {
  if (i < 0 || j > 2 || i >= j) {
    throw std::invalid_argument("LevelPair: need 0 <= i < j <= 2, got (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
  }
}

LevelPair LevelPair::from_index(int k) {
  switch (k) {
    case 0:
      return LevelPair(0, 1);
    case 1:
      return LevelPair(0, 2);
    case 2:
      return LevelPair(1, 2);
    default:
      throw std::invalid_argument("LevelPair: index " + std::to_string(k) +
                                  " outside {0,1,2}");
  }
}

int LevelPair::index() const {
  if (i == 0) return j == 1 ? 0 : 1;
  return 2;
}

AffineMap shift_map(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::Buffer:
      return {1, 0};
    case ShiftKind::SingleShift:
      return {1, 1};
    case ShiftKind::DualShift:
      return {1, 2};
    case ShiftKind::SelfShift:
      return {2, 0};
    case ShiftKind::SelfSingleShift:
      return {2, 1};
    case ShiftKind::SelfDualShift:
      return {2, 2};
  }
  throw std::invalid_argument("shift_map: bad kind");
}

ShiftKind shift_from_map(AffineMap m) {
  if ((m.a != 1 && m.a != 2) || m.b < 0 || m.b > 2) {
    throw std::invalid_argument("shift_from_map: not an affine bijection");
  }
  static constexpr ShiftKind table[2][3] = {
      {ShiftKind::Buffer, ShiftKind::SingleShift, ShiftKind::DualShift},
      {ShiftKind::SelfShift, ShiftKind::SelfSingleShift,
       ShiftKind::SelfDualShift}};
  return table[m.a - 1][m.b];
}

CMat tx(LevelPair p) {
  return perm_matrix(3, [p](std::int64_t x) -> std::int64_t {
    if (x == p.i) return p.j;
    if (x == p.j) return p.i;
    return x;
  });
}

CMat th(LevelPair p) {
  const double r = 1.0 / std::sqrt(2.0);
  CMat m = CMat::Zero(3, 3);
  m(p.i, p.i) = r;
  m(p.i, p.j) = r;
  m(p.j, p.i) = r;
  m(p.j, p.j) = -r;
  m(p.other(), p.other()) = 1.0;
  return m;
}

CMat tz(int level) {
  if (level < 0 || level > 2) {
    throw std::invalid_argument("tz: level outside {0,1,2}");
  }
  CMat m = CMat::Identity(3, 3);
  m(level, level) = -1.0;
  return m;
}

CMat shift(ShiftKind kind) {
  AffineMap f = shift_map(kind);
  return perm_matrix(3, [f](std::int64_t x) -> std::int64_t {
    return (f.a * x + f.b) % 3;
  });
}

CMat rotation(Axis axis, LevelPair p, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  CMat m = CMat::Zero(3, 3);
  m(p.other(), p.other()) = 1.0;
  switch (axis) {
    case Axis::X:
      m(p.i, p.i) = c;
      m(p.i, p.j) = Complex(0, -s);
      m(p.j, p.i) = Complex(0, -s);
      m(p.j, p.j) = c;
      break;
    case Axis::Y:
      m(p.i, p.i) = c;
      m(p.i, p.j) = -s;
      m(p.j, p.i) = s;
      m(p.j, p.j) = c;
      break;
    case Axis::Z:
      m(p.i, p.i) = std::exp(Complex(0, -theta / 2));
      m(p.j, p.j) = std::exp(Complex(0, theta / 2));
      break;
  }
  return m;
}

CMat gcx(int control_value, LevelPair p) {
  if (control_value < 0 || control_value > 2) {
    throw std::invalid_argument("gcx: control value outside {0,1,2}");
  }
  CMat m = CMat::Identity(9, 9);
  m.block(3 * control_value, 3 * control_value, 3, 3) = tx(p);
  return m;
}

CMat feynman() {
  return perm_matrix(9, [](std::int64_t x) -> std::int64_t {
    std::int64_t a = x / 3, b = x % 3;
    return 3 * a + (a + b) % 3;
  });
}

namespace {

void check_controls(const char* who, int controls) {
  if (controls < 1) {
    throw std::invalid_argument(std::string(who) +
                                ": need at least one control");
  }
  if (controls > 8) {
    throw std::invalid_argument(std::string(who) + ": too many controls");
  }
}

}  // namespace

CMat tkcx(int controls, LevelPair p) {
  check_controls("tkcx", controls);
  std::int64_t dim = pow3(controls + 1);
  std::int64_t all2 = dim / 3 - 1;  // first `controls` digits all equal 2
  return perm_matrix(dim, [=](std::int64_t x) -> std::int64_t {
    if (x / 3 != all2) return x;
    std::int64_t b = x % 3;
    if (b == p.i) b = p.j;
    else if (b == p.j) b = p.i;
    return x - x % 3 + b;
  });
}

CMat tkcnot(int controls) {
  check_controls("tkcnot", controls);
  std::int64_t dim = pow3(controls + 1);
  std::int64_t all2 = dim / 3 - 1;
  return perm_matrix(dim, [=](std::int64_t x) -> std::int64_t {
    if (x / 3 != all2) return x;
    return x - x % 3 + (x % 3 + 1) % 3;
  });
}

CMat ncr(int qutrits, NcrSubspace subspace, double theta) {
  if (qutrits < 2) {
    throw std::invalid_argument("ncr: need at least two qutrits");
  }
  if (qutrits > 9) {
    throw std::invalid_argument("ncr: too many qutrits");
  }
  std::int64_t dim = pow3(qutrits);
  std::int64_t base = (dim / 3 - 1) * 3;  // block with all controls at 2
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CMat m = CMat::Identity(dim, dim);
  int lo = subspace == NcrSubspace::L01 ? 0 : 1;
  m(base + lo, base + lo) = c;
  m(base + lo, base + lo + 1) = -s;
  m(base + lo + 1, base + lo) = s;
  m(base + lo + 1, base + lo + 1) = c;
  return m;
}

int arity(const GateSpec& g) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GcxGate>) {
          return 2;
        } else if constexpr (std::is_same_v<T, TkcxGate> ||
                             std::is_same_v<T, TkcnotGate>) {
          return v.controls + 1;
        } else if constexpr (std::is_same_v<T, NcrGate>) {
          return v.qutrits;
        } else {
          return 1;
        }
      },
      g);
}

CMat matrix(const GateSpec& g) {
  return std::visit(
      [](const auto& v) -> CMat {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TxGate>) {
          return tx(v.pair);
        } else if constexpr (std::is_same_v<T, ThGate>) {
          return th(v.pair);
        } else if constexpr (std::is_same_v<T, TzGate>) {
          return tz(v.level);
        } else if constexpr (std::is_same_v<T, ShiftGate>) {
          return shift(v.kind);
        } else if constexpr (std::is_same_v<T, RotationGate>) {
          return rotation(v.axis, v.pair, v.theta);
        } else if constexpr (std::is_same_v<T, GcxGate>) {
          return gcx(v.control_value, v.pair);
        } else if constexpr (std::is_same_v<T, TkcxGate>) {
          return tkcx(v.controls, v.pair);
        } else if constexpr (std::is_same_v<T, TkcnotGate>) {
          return tkcnot(v.controls);
        } else {
          return ncr(v.qutrits, v.subspace, v.theta);
        }
      },
      g);
}

}  // namespace triqhe
