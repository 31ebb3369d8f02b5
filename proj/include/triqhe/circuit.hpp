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

#ifndef TRIQHE_CIRCUIT_HPP
#define TRIQHE_CIRCUIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "triqhe/gates.hpp"

namespace triqhe {

struct GateInstance {
  GateSpec spec;
  std::vector<int> wires;
};

// Gate list in time order: gates[0] acts first.
struct Circuit {
  int qutrits = 0;
  std::vector<GateInstance> gates;
};

// Wires must be distinct, inside [0, width), and match the gate's arity.
void validate_instance(const GateInstance& g, int width);
void validate_circuit(const Circuit& c);

// Dense operator of the gate on the full width-qutrit register.
CMat embed(const GateInstance& g, int width);

// Product of embedded gates; the last gate ends up leftmost.
CMat circuit_unitary(const Circuit& c);

// Applies gates one at a time without forming the full unitary.
QState apply_circuit(const Circuit& c, const QState& s);

// Text form:
//   qutrits: <n>
//   <mnemonic> <wire...> [<angle>]
// with '#' comments and blank lines ignored. Parameterized mnemonics carry
// their parameters right after the name: ROTy01 <wire> <angle>,
// GCX <control-value> <ij> <control> <target>, TKCX <ij> <wires...>,
// TKCNOT <wires...>, NCR <01|12> <wires...> <angle>.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_file(const std::string& path);
std::string format_circuit(const Circuit& c);
std::string format_instance(const GateInstance& g);

}  // namespace triqhe

#endif  // TRIQHE_CIRCUIT_HPP
