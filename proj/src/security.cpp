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

#include "triqhe/security.hpp"

#include <algorithm>
#include <cmath>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

Key key_from_ordinal(int qutrits, std::uint64_t ordinal) {
  Key k;
  k.triples.reserve(qutrits);
  std::uint64_t rest = ordinal;
  std::uint64_t place = 1;
  for (int q = 1; q < qutrits; ++q) place *= 27;
  for (int q = 0; q < qutrits; ++q) {
    int t = static_cast<int>((rest / place) % 27);
    k.triples.emplace_back(t / 9, (t / 3) % 3, t % 3);
    rest %= place;
    place /= 27;
  }
  return k;
}

}  // namespace

QState random_pure_state(int qutrits, RandomSource& rng) {
  if (qutrits < 1) {
    throw std::invalid_argument("random_pure_state: need at least one qutrit");
  }
  CVec a(pow3(qutrits));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    a(i) = Complex(rng.normal(), rng.normal());
  }
  double norm = a.norm();
  if (norm == 0.0) a(0) = 1.0;
  else a /= norm;
  return QState(qutrits, std::move(a));
}

DensityMatrix average_ciphertext(const DensityMatrix& rho) {
  const int n = rho.qutrits();
  if (n > 2) {
    throw std::invalid_argument(
        "average_ciphertext: exhaustive averaging is limited to 2 qutrits");
  }
  const std::uint64_t keys = key_space_size(n);
  CMat acc = CMat::Zero(rho.dim(), rho.dim());
  for (std::uint64_t ord = 0; ord < keys; ++ord) {
    CMat pad = enc_operator(key_from_ordinal(n, ord));
    acc += pad * rho.matrix() * pad.adjoint();
  }
  acc /= static_cast<double>(keys);
  return DensityMatrix(n, std::move(acc));
}

GuessResult guess_experiment(int qutrits, std::uint64_t trials,
                             RandomSource& rng) {
  if (qutrits < 1 || qutrits > 2) {
    throw std::invalid_argument("guess_experiment: width must be 1 or 2");
  }
  if (trials < 1000) {
    throw std::invalid_argument("guess_experiment: need at least 1000 trials");
  }
  const int keys = static_cast<int>(key_space_size(qutrits));
  const int guess = rng.uniform_int(0, keys - 1);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (rng.uniform_int(0, keys - 1) == guess) ++hits;
  }
  GuessResult r;
  r.trials = trials;
  r.rate = static_cast<double>(hits) / static_cast<double>(trials);
  r.stderr_rate =
      std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(trials));
  return r;
}

SecurityReport security_report(int qutrits, int plaintext_samples,
                               std::uint64_t trials, RandomSource& rng) {
  if (plaintext_samples < 1) {
    throw std::invalid_argument("security_report: need at least one sample");
  }
  SecurityReport rep;
  rep.qutrits = qutrits;
  rep.key_space = key_space_size(qutrits);
  rep.key_probability = key_probability(qutrits);
  rep.guess = guess_experiment(qutrits, trials, rng);
  rep.plaintext_samples = plaintext_samples;

  DensityMatrix mixed = DensityMatrix::maximally_mixed(qutrits);
  double sum_td = 0, sum_h = 0;
  double min_td = 0, max_h = 0;
  for (int s = 0; s < plaintext_samples; ++s) {
    QState psi = random_pure_state(qutrits, rng);
    DensityMatrix avg = average_ciphertext(DensityMatrix::pure(psi));
    double td = trace_distance(avg, mixed);
    double h = von_neumann_entropy(avg);
    sum_td += td;
    sum_h += h;
    if (s == 0 || td < min_td) min_td = td;
    if (s == 0 || h > max_h) max_h = h;
  }
  rep.avg_trace_distance = sum_td / plaintext_samples;
  rep.min_trace_distance = min_td;
  rep.avg_entropy = sum_h / plaintext_samples;
  rep.max_entropy = max_h;
  return rep;
}

}  // namespace triqhe
