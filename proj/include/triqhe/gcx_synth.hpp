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

#ifndef TRIQHE_GCX_SYNTH_HPP
#define TRIQHE_GCX_SYNTH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triqhe/gates.hpp"

namespace triqhe {

// Permutation of the nine two-qutrit basis states; image[x] is where state
// x goes.
struct PermTable {
  std::array<std::uint8_t, 9> image;
  bool operator==(const PermTable& o) const = default;
};

PermTable identity_perm();
PermTable perm_from_images(std::span<const int> images);
PermTable perm_compose(const PermTable& later, const PermTable& first);
PermTable perm_inverse(const PermTable& p);
// 0 for even permutations, 1 for odd.
int perm_parity(const PermTable& p);

// One controlled level exchange on a two-qutrit register: the control wire
// (0 or 1) is compared against control_value; on match the other wire's
// pair levels swap. 18 symbols, ordered by
// index = control_wire * 9 + control_value * 3 + pair index.
struct GcxSymbol {
  int control_wire;
  int control_value;
  LevelPair pair;

  int index() const;
  static GcxSymbol from_index(int k);
  bool operator==(const GcxSymbol& o) const = default;
};

using GcxSeq = std::vector<GcxSymbol>;

PermTable symbol_perm(const GcxSymbol& s);
// Composition in time order: seq[0] acts first.
PermTable seq_perm(const GcxSeq& seq);
// The symbol as a circuit-level gate matrix (9x9).
CMat symbol_matrix(const GcxSymbol& s);

// First sequence of exactly `length` symbols realizing the target, in
// lexicographic symbol-index order; nullopt if none exists. Every symbol is
// a 3-state exchange, so a target is only reachable at lengths of its
// parity. Lengths up to 5 run a direct scan, 6 to 12 meet in the middle.
std::optional<GcxSeq> search_exact(const PermTable& target, int length);

enum class NamedTarget { Tsum, Tswap, Cnot1, SingleShift };

std::string named_target_name(NamedTarget t);
std::optional<NamedTarget> named_target_from_name(const std::string& name);
PermTable named_target_perm(NamedTarget t);
// Exchange count the construction is documented to reach.
int named_target_claimed(NamedTarget t);

struct SynthesisReport {
  NamedTarget target;
  GcxSeq sequence;
  int achieved = 0;
  int claimed = 0;
  std::string note;
};

// Searches at the claimed count first, then longer lengths up to 12.
// Throws ConvergenceError when nothing under that budget realizes the
// target.
SynthesisReport synthesize_named(NamedTarget t);

// Minimal-length sequence for an arbitrary target within the length-12
// budget; nullopt when none exists.
std::optional<GcxSeq> synthesize_perm(const PermTable& target);

}  // namespace triqhe

#endif  // TRIQHE_GCX_SYNTH_HPP
