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

#ifndef TRIQHE_IO_HPP
#define TRIQHE_IO_HPP

#include <string>
#include <variant>

#include "triqhe/gcx_synth.hpp"
#include "triqhe/tqhe.hpp"

namespace triqhe {

// State files:
//   qutrits: <n>
//   <re> <im>            one line per amplitude, 3^n lines
// Written with 17 significant digits so a read reproduces the values.
// Reads renormalize with a warning when the norm drifts past 1e-10 and
// reject past 1e-6.
QState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const QState& s);

// Key files: one line per qutrit, three digits "alpha beta delta".
Key read_key_file(const std::string& path);
void write_key_file(const std::string& path, const Key& k);

// Evaluation jobs without the key; '#' comments allowed, tokens free-form:
//   scheme1 <y|z> <01|02> <theta>
//   scheme2 matrix <18 reals, row-major re im>
//   scheme2 params <9 angles>
//   scheme3 <control-value> <01|02|12> <plaintext-control>
//   scheme4 <circuit path, relative to the job file>
struct JobRotation {
  Axis axis;
  LevelPair pair;
  double theta;
};
struct JobMatrix {
  CMat target;
};
struct JobControlled {
  int control_value;
  LevelPair pair;
  int plaintext_control;
};
struct JobCircuit {
  Circuit circuit;
};
using JobSpec =
    std::variant<JobRotation, JobMatrix, JobControlled, JobCircuit>;

JobSpec read_job_file(const std::string& path);

// Attaches the key, checking its width against what the job needs.
EvalJob bind_job(const JobSpec& spec, const Key& k);

// 3x3 complex matrix: 18 reals, row-major re im pairs, '#' comments.
CMat read_matrix_file(const std::string& path);

// Nine integers: images of the two-qutrit basis states.
PermTable read_perm_file(const std::string& path);

}  // namespace triqhe

#endif  // TRIQHE_IO_HPP
