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

#ifndef TRIQHE_GATES_HPP
#define TRIQHE_GATES_HPP

#include <variant>

#include "triqhe/linalg.hpp"

namespace triqhe {

// Ordered pair of distinct qutrit levels, 0 <= i < j <= 2.
struct LevelPair {
  int i;
  int j;

  LevelPair(int i_, int j_);

  // Single-index aliases: 0 -> (0,1), 1 -> (0,2), 2 -> (1,2).
  static LevelPair from_index(int k);
  int index() const;

  // The level outside the pair.
  int other() const { return 3 - i - j; }

  bool operator==(const LevelPair& o) const { return i == o.i && j == o.j; }
};

enum class Axis { X, Y, Z };

// The six affine permutations of {0,1,2}: x -> a*x + b mod 3 with a in {1,2}.
enum class ShiftKind {
  Buffer,           // a=1, b=0
  SingleShift,      // a=1, b=1
  DualShift,        // a=1, b=2
  SelfShift,        // a=2, b=0
  SelfSingleShift,  // a=2, b=1
  SelfDualShift,    // a=2, b=2
};

struct AffineMap {
  int a;
  int b;
  bool operator==(const AffineMap& o) const { return a == o.a && b == o.b; }
};

AffineMap shift_map(ShiftKind kind);
ShiftKind shift_from_map(AffineMap m);

enum class NcrSubspace { L01, L12 };

// Single-qutrit constructors (3x3).

// Exchanges levels i and j, fixes the third.
CMat tx(LevelPair p);

// Hadamard on the (i,j) subspace: entries 1/sqrt(2) at (i,i), (i,j), (j,i),
// -1/sqrt(2) at (j,j), and 1 on the untouched level.
CMat th(LevelPair p);

// Diagonal of ones with -1 at the given level.
CMat tz(int level);

CMat shift(ShiftKind kind);

// exp(-i * sigma_axis^(ij) * theta / 2): a 2x2 rotation by theta/2 embedded
// in the (i,j) subspace, identity on the third level.
CMat rotation(Axis axis, LevelPair p, double theta);

// Two-qutrit constructors (9x9), control first, big-endian.

// Applies tx(p) to the target when the control reads control_value.
CMat gcx(int control_value, LevelPair p);

// |A,B> -> |A, A+B mod 3>.
CMat feynman();

// Multi-qutrit constructors on controls+1 wires; all controls must read 2.

CMat tkcx(int controls, LevelPair p);
CMat tkcnot(int controls);

// Identity except a rotation by theta (full angle) on the last qutrit's
// (0,1) or (1,2) plane when the first qutrits-1 wires all read 2.
CMat ncr(int qutrits, NcrSubspace subspace, double theta);

// Symbolic gate descriptions used by circuits.

struct TxGate {
  LevelPair pair;
};
struct ThGate {
  LevelPair pair;
};
struct TzGate {
  int level;
};
struct ShiftGate {
  ShiftKind kind;
};
struct RotationGate {
  Axis axis;
  LevelPair pair;
  double theta;
};
struct GcxGate {
  int control_value;
  LevelPair pair;
};
struct TkcxGate {
  int controls;
  LevelPair pair;
};
struct TkcnotGate {
  int controls;
};
struct NcrGate {
  int qutrits;
  NcrSubspace subspace;
  double theta;
};

using GateSpec = std::variant<TxGate, ThGate, TzGate, ShiftGate, RotationGate,
                              GcxGate, TkcxGate, TkcnotGate, NcrGate>;

// Number of wires the gate occupies.
int arity(const GateSpec& g);

// Dense matrix on 3^arity dimensions.
CMat matrix(const GateSpec& g);

}  // namespace triqhe

#endif  // TRIQHE_GATES_HPP
