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

#include "triqhe/tqotp.hpp"

#include <string>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

int checked_digit(int v, const char* name) {
  if (v < 0 || v > 2) {
    throw std::invalid_argument(std::string("KeyTriple: ") + name +
                                " outside {0,1,2}");
  }
  return v;
}

void check_key(const Key& k) {
  if (k.triples.empty()) {
    throw std::invalid_argument("Key: need at least one qutrit");
  }
}

}  // namespace

KeyTriple::KeyTriple(int alpha_, int beta_, int delta_)
    : alpha(checked_digit(alpha_, "alpha")),
      beta(checked_digit(beta_, "beta")),
      delta(checked_digit(delta_, "delta")) {}

Key keygen(int qutrits, RandomSource& rng) {
  if (qutrits < 1) {
    throw std::invalid_argument("keygen: need at least one qutrit");
  }
  Key k;
  k.triples.reserve(qutrits);
  for (int q = 0; q < qutrits; ++q) {
    int a = rng.uniform_int(0, 2);
    int b = rng.uniform_int(0, 2);
    int d = rng.uniform_int(0, 2);
    k.triples.emplace_back(a, b, d);
  }
  return k;
}

CMat pad_operator(const KeyTriple& t) {
  return tx(LevelPair::from_index(t.alpha)) * th(LevelPair::from_index(t.beta)) *
         tz(t.delta);
}

CMat enc_operator(const Key& k) {
  check_key(k);
  CMat u = pad_operator(k.triples[0]);
  for (std::size_t q = 1; q < k.triples.size(); ++q) {
    u = kron(u, pad_operator(k.triples[q]));
  }
  return u;
}

QState encrypt(const Key& k, const QState& plain) {
  check_key(k);
  if (k.qutrits() != plain.qutrits()) {
    throw DimensionError("encrypt: key width " + std::to_string(k.qutrits()) +
                         " does not match state width " +
                         std::to_string(plain.qutrits()));
  }
  return triqhe::apply(enc_operator(k), plain);
}

QState decrypt(const Key& k, const QState& cipher) {
  check_key(k);
  if (k.qutrits() != cipher.qutrits()) {
    throw DimensionError("decrypt: key width " + std::to_string(k.qutrits()) +
                         " does not match state width " +
                         std::to_string(cipher.qutrits()));
  }
  return triqhe::apply(dagger(enc_operator(k)), cipher);
}

std::uint64_t key_space_size(int qutrits) {
  if (qutrits < 1 || qutrits > 13) {
    throw std::invalid_argument("key_space_size: width outside [1,13]");
  }
  std::uint64_t s = 1;
  for (int q = 0; q < 3 * qutrits; ++q) s *= 3;
  return s;
}

double key_probability(int qutrits) {
  return 1.0 / static_cast<double>(key_space_size(qutrits));
}

}  // namespace triqhe
