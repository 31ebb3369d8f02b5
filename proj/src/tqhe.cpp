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

#include "triqhe/tqhe.hpp"

#include <string>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

void require_width(const Key& k, int width, const char* who) {
  if (k.qutrits() != width) {
    throw DimensionError(std::string(who) + ": key width " +
                         std::to_string(k.qutrits()) + ", need " +
                         std::to_string(width));
  }
}

int checked_trit(int v, const char* what) {
  if (v < 0 || v > 2) {
    throw std::invalid_argument(std::string(what) + " outside {0,1,2}");
  }
  return v;
}

}  // namespace

CMat tau(int control_value, int plaintext_control, LevelPair p) {
  checked_trit(control_value, "tau: control value");
  checked_trit(plaintext_control, "tau: plaintext control");
  if (control_value == plaintext_control) return CMat::Identity(3, 3);
  return dagger(tx(p));
}

CMat hom_rotation(const Scheme1Job& job) {
  require_width(job.key, 1, "hom_rotation");
  if (job.axis != Axis::Y && job.axis != Axis::Z) {
    throw std::invalid_argument("hom_rotation: axis must be y or z");
  }
  if (job.pair.index() == 2) {
    throw std::invalid_argument("hom_rotation: pair must be (0,1) or (0,2)");
  }
  CMat u = enc_operator(job.key);
  return u * rotation(job.axis, job.pair, job.theta) * dagger(u);
}

CMat hom_general(const Key& k, const CMat& u) {
  require_width(k, 1, "hom_general");
  if (u.rows() != 3 || u.cols() != 3 || !is_unitary(u, 1e-8)) {
    throw std::invalid_argument("hom_general: target is not a 3x3 unitary");
  }
  CMat pad = enc_operator(k);
  return pad * u * dagger(pad);
}

CMat hom_general_product(const Key& k, const CMat& u, const FitOptions& opt) {
  require_width(k, 1, "hom_general_product");
  CartanParams p = fit(u, opt);
  CMat pad = enc_operator(k);
  CMat pad_dag = dagger(pad);
  CMat acc = CMat::Identity(3, 3);
  for (const CMat& f : cartan_factors(p)) acc *= pad * f * pad_dag;
  return std::exp(Complex(0, p.alpha)) * acc;
}

CMat hom_gcx(const Scheme3Job& job) {
  require_width(job.key, 2, "hom_gcx");
  checked_trit(job.control_value, "hom_gcx: control value");
  checked_trit(job.plaintext_control, "hom_gcx: plaintext control");
  CMat pad = enc_operator(job.key);
  CMat core = tx(job.pair) * tau(job.control_value, job.plaintext_control, job.pair);
  CMat op = kron(CMat::Identity(3, 3), core);
  return pad * op * dagger(pad);
}

CMat hom_gcx_full(const Key& k, int control_value, LevelPair p) {
  require_width(k, 2, "hom_gcx_full");
  CMat pad = enc_operator(k);
  return pad * gcx(control_value, p) * dagger(pad);
}

CMat hom_circuit(const Scheme4Job& job) {
  require_width(job.key, job.circuit.qutrits, "hom_circuit");
  CMat pad = enc_operator(job.key);
  return pad * circuit_unitary(job.circuit) * dagger(pad);
}

CMat hom_operator(const EvalJob& job) {
  return std::visit(
      [](const auto& j) -> CMat {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, Scheme1Job>) {
          return hom_rotation(j);
        } else if constexpr (std::is_same_v<T, Scheme2Job>) {
          return hom_general(j.key, j.target);
        } else if constexpr (std::is_same_v<T, Scheme3Job>) {
          return hom_gcx(j);
        } else {
          return hom_circuit(j);
        }
      },
      job);
}

CMat target_unitary(const EvalJob& job) {
  return std::visit(
      [](const auto& j) -> CMat {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, Scheme1Job>) {
          return rotation(j.axis, j.pair, j.theta);
        } else if constexpr (std::is_same_v<T, Scheme2Job>) {
          return j.target;
        } else if constexpr (std::is_same_v<T, Scheme3Job>) {
          CMat core =
              tx(j.pair) * tau(j.control_value, j.plaintext_control, j.pair);
          return kron(CMat::Identity(3, 3), core);
        } else {
          return circuit_unitary(j.circuit);
        }
      },
      job);
}

int job_width(const EvalJob& job) {
  return std::visit(
      [](const auto& j) -> int {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, Scheme1Job> ||
                      std::is_same_v<T, Scheme2Job>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Scheme3Job>) {
          return 2;
        } else {
          return j.circuit.qutrits;
        }
      },
      job);
}

QState evaluate(const CMat& hom_op, const QState& cipher) {
  return triqhe::apply(hom_op, cipher);
}

QState run_pipeline(const EvalJob& job, const QState& plain) {
  const Key& k = std::visit([](const auto& j) -> const Key& { return j.key; }, job);
  if (plain.qutrits() != job_width(job)) {
    throw DimensionError("run_pipeline: state width " +
                         std::to_string(plain.qutrits()) +
                         " does not match job width " +
                         std::to_string(job_width(job)));
  }
  QState cipher = encrypt(k, plain);
  QState evolved = evaluate(hom_operator(job), cipher);
  return decrypt(k, evolved);
}

}  // namespace triqhe
