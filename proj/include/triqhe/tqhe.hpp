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

#ifndef TRIQHE_TQHE_HPP
#define TRIQHE_TQHE_HPP

#include <variant>

#include "triqhe/cartan.hpp"
#include "triqhe/circuit.hpp"
#include "triqhe/tqotp.hpp"

namespace triqhe {

// Correction factor for a controlled exchange evaluated under encryption:
// identity when the encrypted control value matches the plaintext control,
// the inverse exchange otherwise.
CMat tau(int control_value, int plaintext_control, LevelPair p);

// Homomorphic evaluation jobs. Every scheme turns a plaintext-side target
// into a ciphertext-side operator by conjugating with the pad.

// Single-qutrit rotation, axis y or z, pair (0,1) or (0,2).
struct Scheme1Job {
  Key key;
  Axis axis;
  LevelPair pair;
  double theta;
};

// Arbitrary single-qutrit unitary.
struct Scheme2Job {
  Key key;
  CMat target;
};

// Controlled exchange on two qutrits with a known plaintext control value.
struct Scheme3Job {
  Key key;
  int control_value;
  LevelPair pair;
  int plaintext_control;
};

// Whole circuit on an n-qutrit register.
struct Scheme4Job {
  Key key;
  Circuit circuit;
};

using EvalJob = std::variant<Scheme1Job, Scheme2Job, Scheme3Job, Scheme4Job>;

CMat hom_rotation(const Scheme1Job& job);

// Direct conjugation of the full unitary.
CMat hom_general(const Key& k, const CMat& u);

// Same operator assembled from the eight fitted rotation factors, each
// conjugated separately; agrees with hom_general up to fit accuracy.
CMat hom_general_product(const Key& k, const CMat& u,
                         const FitOptions& opt = {});

// Ciphertext-side operator built from the known plaintext control: the
// target collapses to (identity) x (exchange * tau).
CMat hom_gcx(const Scheme3Job& job);

// Variant without plaintext knowledge: conjugates the genuine controlled
// exchange.
CMat hom_gcx_full(const Key& k, int control_value, LevelPair p);

CMat hom_circuit(const Scheme4Job& job);

// Dispatch over the job variant. Scheme 3 uses hom_gcx.
CMat hom_operator(const EvalJob& job);

// The plaintext-side unitary the job is meant to enact.
CMat target_unitary(const EvalJob& job);

// Key width each job needs.
int job_width(const EvalJob& job);

// Applies a ciphertext-side operator; sees only the operator and the
// encrypted state.
QState evaluate(const CMat& hom_op, const QState& cipher);

// encrypt, evaluate, decrypt.
QState run_pipeline(const EvalJob& job, const QState& plain);

}  // namespace triqhe

#endif  // TRIQHE_TQHE_HPP
