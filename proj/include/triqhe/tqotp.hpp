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

#ifndef TRIQHE_TQOTP_HPP
#define TRIQHE_TQOTP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "triqhe/gates.hpp"

namespace triqhe {

// One-time-pad digits for a single qutrit, each in {0,1,2}.
struct KeyTriple {
  int alpha;
  int beta;
  int delta;

  KeyTriple(int alpha_, int beta_, int delta_);
  bool operator==(const KeyTriple& o) const = default;
};

// Pad for an n-qutrit register, one triple per qutrit.
struct Key {
  std::vector<KeyTriple> triples;
  int qutrits() const { return static_cast<int>(triples.size()); }
};

// Deterministic randomness; the same seed reproduces every draw.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Key keygen(int qutrits, RandomSource& rng);

// X^(alpha) H^(beta) Z^(delta) with superscripts naming level pairs for X
// and H (0 -> (0,1), 1 -> (0,2), 2 -> (1,2)) and a level for Z.
CMat pad_operator(const KeyTriple& t);

// Tensor product of the per-qutrit pad operators, first qutrit leftmost.
CMat enc_operator(const Key& k);

QState encrypt(const Key& k, const QState& plain);
QState decrypt(const Key& k, const QState& cipher);

// 27^n, defined for 1 <= n <= 13.
std::uint64_t key_space_size(int qutrits);

// 1 / 27^n.
double key_probability(int qutrits);

}  // namespace triqhe

#endif  // TRIQHE_TQOTP_HPP
