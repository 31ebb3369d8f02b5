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

#ifndef TRIQHE_SECURITY_HPP
#define TRIQHE_SECURITY_HPP

#include <cstdint>

#include "triqhe/tqotp.hpp"

namespace triqhe {

// Gaussian amplitudes, normalized.
QState random_pure_state(int qutrits, RandomSource& rng);

// Exact average of pad rho pad^dag over every key, width limited to 2 so
// the enumeration stays exhaustive.
DensityMatrix average_ciphertext(const DensityMatrix& rho);

struct GuessResult {
  double rate = 0;
  double stderr_rate = 0;
  std::uint64_t trials = 0;
};

// Draws a fresh key per trial and counts hits of a fixed guess.
GuessResult guess_experiment(int qutrits, std::uint64_t trials,
                             RandomSource& rng);

struct SecurityReport {
  int qutrits = 0;
  std::uint64_t key_space = 0;
  double key_probability = 0;
  GuessResult guess;
  int plaintext_samples = 0;
  double avg_trace_distance = 0;
  double min_trace_distance = 0;
  double avg_entropy = 0;
  double max_entropy = 0;
};

// Key statistics plus ciphertext-average metrics over random pure
// plaintexts: trace distance to the maximally mixed state and base-3
// entropy of the averaged ciphertext.
SecurityReport security_report(int qutrits, int plaintext_samples,
                               std::uint64_t trials, RandomSource& rng);

}  // namespace triqhe

#endif  // TRIQHE_SECURITY_HPP
