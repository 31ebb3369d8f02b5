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

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the binary exits zero only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "triqhe/errors.hpp"
#include "triqhe/gcx_synth.hpp"
#include "triqhe/io.hpp"
#include "triqhe/security.hpp"

using namespace triqhe;
using oracles::dev;

namespace {

Key random_key(int n, std::mt19937_64& eng) {
  Key k;
  for (int q = 0; q < n; ++q) {
    k.triples.emplace_back(static_cast<int>(eng() % 3),
                           static_cast<int>(eng() % 3),
                           static_cast<int>(eng() % 3));
  }
  return k;
}

QState random_state(int n, std::mt19937_64& eng) {
  return QState(n, oracles::random_state_vec(static_cast<int>(pow3(n)), eng));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

// Worked single-qutrit walkthrough: pad, ciphertext-side rotation operator
// and full pipeline against frozen values.
bool c1_rotation_walkthrough(std::string& detail) {
  const double s2 = std::sqrt(2.0);
  Key key{{KeyTriple(2, 0, 1)}};

  CMat pad_expected(3, 3);
  pad_expected << 1 / s2, -1 / s2, 0, 0, 0, 1, 1 / s2, 1 / s2, 0;
  double pad_dev = dev(enc_operator(key), pad_expected);
  if (pad_dev != 0.0) {
    detail = "pad operator off by " + fmt(pad_dev);
    return false;
  }
  double worst = 0;

  Scheme1Job job{key, Axis::Y, LevelPair(0, 2), std::numbers::pi};
  CMat hom_expected(3, 3);
  hom_expected << 0.5, -s2 / 2, -0.5, s2 / 2, 0, s2 / 2, -0.5, -s2 / 2, 0.5;
  worst = std::max(worst, dev(hom_rotation(job), hom_expected));

  QState out = run_pipeline(EvalJob(job), QState::basis(1, 0));
  CVec target(3);
  target << 0, 0, 1;
  worst = std::max(worst,
                   (out.amplitudes() - target).cwiseAbs().maxCoeff());

  detail = "max deviation " + fmt(worst);
  return worst <= 1e-12;
}

// Worked two-qutrit walkthrough: controlled exchange takes |02> to |00>.
bool c2_exchange_walkthrough(std::string& detail) {
  Key key{{KeyTriple(1, 0, 0), KeyTriple(2, 2, 1)}};
  Scheme3Job job{key, 0, LevelPair(0, 2), 0};
  QState out = run_pipeline(EvalJob(job), QState::basis(2, 2));
  CVec target = CVec::Zero(9);
  target(0) = 1;
  double worst = (out.amplitudes() - target).cwiseAbs().maxCoeff();
  detail = "max deviation " + fmt(worst);
  return worst <= 1e-10;
}

// Key probabilities are exact powers of 1/27 and a guessing adversary stays
// within four standard errors of them.
bool c3_key_statistics(std::string& detail) {
  bool ok = key_probability(1) == 1.0 / 27.0 &&
            key_probability(2) == 1.0 / 729.0 &&
            key_probability(3) == 1.0 / 19683.0;

  RandomSource r1(3001);
  GuessResult g1 = guess_experiment(1, 270000, r1);
  double dev1 = std::abs(g1.rate - 1.0 / 27.0) / g1.stderr_rate;
  ok = ok && dev1 < 4.0;

  RandomSource r2(3002);
  GuessResult g2 = guess_experiment(2, 1000000, r2);
  double dev2 = std::abs(g2.rate - 1.0 / 729.0) / g2.stderr_rate;
  ok = ok && dev2 < 4.0;

  std::ostringstream ss;
  ss << "exact p_k; guesses at " << fmt(dev1) << " / " << fmt(dev2)
     << " sigma";
  detail = ss.str();
  return ok;
}

// Every scheme evaluates its target through the pad: 100 random cases per
// scheme checked end to end, plus the operator identity hom * pad =
// pad * target.
bool c4_homomorphism(std::string& detail) {
  std::mt19937_64 eng(4001);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  double worst_state = 0, worst_op = 0;

  for (int rep = 0; rep < 100; ++rep) {
    Key k = random_key(1, eng);
    Scheme1Job job{k, eng() % 2 ? Axis::Y : Axis::Z,
                   LevelPair::from_index(static_cast<int>(eng() % 2)),
                   angle(eng)};
    CMat pad = enc_operator(k);
    worst_op = std::max(
        worst_op, dev(hom_rotation(job) * pad,
                      pad * target_unitary(EvalJob(job))));
    QState plain = random_state(1, eng);
    QState direct = triqhe::apply(target_unitary(EvalJob(job)), plain);
    QState via = run_pipeline(EvalJob(job), plain);
    worst_state = std::max(
        worst_state, dev(via.amplitudes(), direct.amplitudes()));
  }

  for (int rep = 0; rep < 100; ++rep) {
    Key k = random_key(1, eng);
    Scheme2Job job{k, oracles::haar_unitary(3, eng)};
    CMat pad = enc_operator(k);
    worst_op = std::max(worst_op, dev(hom_general(k, job.target) * pad,
                                      pad * job.target));
    QState plain = random_state(1, eng);
    QState direct = triqhe::apply(job.target, plain);
    QState via = run_pipeline(EvalJob(job), plain);
    worst_state = std::max(
        worst_state, dev(via.amplitudes(), direct.amplitudes()));
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    Key k = random_key(2, eng);
    int cv = static_cast<int>(eng() % 3);
    int m = static_cast<int>(eng() % 3);
    Scheme3Job job{k, cv, LevelPair::from_index(static_cast<int>(eng() % 3)),
                   m};
    CMat pad = enc_operator(k);
    worst_op = std::max(worst_op, dev(hom_gcx(job) * pad,
                                      pad * target_unitary(EvalJob(job))));
    // Plaintext with the promised control digit.
    CVec amps = CVec::Zero(9);
    for (int b = 0; b < 3; ++b) amps(3 * m + b) = Complex(gauss(eng), gauss(eng));
    amps /= amps.norm();
    QState plain(2, amps);
    QState direct = triqhe::apply(gcx(cv, job.pair), plain);
    QState via = run_pipeline(EvalJob(job), plain);
    worst_state = std::max(
        worst_state, dev(via.amplitudes(), direct.amplitudes()));
  }

  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(eng() % 3);
    Key k = random_key(n, eng);
    Circuit c;
    c.qutrits = n;
    for (int g = 0; g < 6; ++g) {
      int w = static_cast<int>(eng() % n);
      switch (eng() % 3) {
        case 0:
          c.gates.push_back(
              {ThGate{LevelPair::from_index(static_cast<int>(eng() % 3))},
               {w}});
          break;
        case 1:
          c.gates.push_back(
              {RotationGate{Axis::X,
                            LevelPair::from_index(static_cast<int>(eng() % 3)),
                            angle(eng)},
               {w}});
          break;
        default:
          if (n >= 2) {
            c.gates.push_back(
                {GcxGate{static_cast<int>(eng() % 3),
                         LevelPair::from_index(static_cast<int>(eng() % 3))},
                 {w, (w + 1) % n}});
          } else {
            c.gates.push_back({TzGate{static_cast<int>(eng() % 3)}, {w}});
          }
      }
    }
    Scheme4Job job{k, c};
    CMat pad = enc_operator(k);
    worst_op = std::max(worst_op, dev(hom_circuit(job) * pad,
                                      pad * circuit_unitary(c)));
    QState plain = random_state(n, eng);
    QState direct = triqhe::apply(circuit_unitary(c), plain);
    QState via = run_pipeline(EvalJob(job), plain);
    worst_state = std::max(
        worst_state, dev(via.amplitudes(), direct.amplitudes()));
  }

  detail = "states " + fmt(worst_state) + ", operators " + fmt(worst_op);
  return worst_state <= 1e-8 && worst_op <= 1e-10;
}

// Exchange synthesis reaches the documented counts with exact permutations.
bool c5_synthesis(std::string& detail) {
  bool ok = true;
  std::string counts;
  for (NamedTarget t : {NamedTarget::Tsum, NamedTarget::Cnot1,
                        NamedTarget::Tswap, NamedTarget::SingleShift}) {
    SynthesisReport rep = synthesize_named(t);
    bool exact = seq_perm(rep.sequence) == named_target_perm(t);
    ok = ok && exact && rep.achieved == rep.claimed &&
         static_cast<int>(rep.sequence.size()) == rep.achieved;
    counts += named_target_name(t) + "@" + std::to_string(rep.achieved) + " ";
  }
  detail = counts + (ok ? "all exact" : "MISMATCH");
  return ok;
}

// The eight-factor rotation product fits arbitrary unitaries.
bool c6_decomposition(std::string& detail) {
  std::mt19937_64 eng(6001);
  std::uniform_real_distribution<double> a(-std::numbers::pi, std::numbers::pi);
  double worst_round = 0, worst_haar = 0, worst_prod = 0;

  FitOptions opt;
  for (int rep = 0; rep < 50; ++rep) {
    std::array<double, 9> arr;
    for (double& x : arr) x = a(eng);
    CMat u = compose(CartanParams::from_array(arr));
    opt.seed = 600100 + rep;
    worst_round = std::max(worst_round, residual(fit(u, opt), u));
  }
  if (worst_round > 1e-8) {
    detail = "round-trip residual " + fmt(worst_round);
    return false;
  }

  for (int rep = 0; rep < 100; ++rep) {
    CMat u = oracles::haar_unitary(3, eng);
    opt.seed = 600200 + rep;
    worst_haar = std::max(worst_haar, residual(fit(u, opt), u));
  }
  if (worst_haar > 1e-6) {
    detail = "fit residual " + fmt(worst_haar);
    return false;
  }

  for (int rep = 0; rep < 20; ++rep) {
    Key k = random_key(1, eng);
    CMat u = oracles::haar_unitary(3, eng);
    opt.seed = 600300 + rep;
    worst_prod = std::max(
        worst_prod, dev(hom_general(k, u), hom_general_product(k, u, opt)));
  }

  detail = "residuals " + fmt(worst_round) + " / " + fmt(worst_haar) +
           ", factored " + fmt(worst_prod);
  return worst_prod <= 1e-8;
}

// The key-averaged ciphertext sits a fixed distance from the uniform
// mixture: close, but measurably biased.
bool c7_mixing(std::string& detail) {
  DensityMatrix avg =
      average_ciphertext(DensityMatrix::pure(QState::basis(1, 0)));
  double td = trace_distance(avg, DensityMatrix::maximally_mixed(1));
  double s = von_neumann_entropy(avg);
  bool ok = std::abs(td - 2.0 / 9.0) <= 1e-12 && td > 1e-3 && s < 1.0 &&
            std::abs(s - 0.9057125980138372) <= 1e-12;

  RandomSource rng(7003);
  for (int rep = 0; rep < 5 && ok; ++rep) {
    DensityMatrix a =
        average_ciphertext(DensityMatrix::pure(random_pure_state(1, rng)));
    ok = trace_distance(a, DensityMatrix::maximally_mixed(1)) > 1e-3 &&
         von_neumann_entropy(a) < 1.0;
  }
  detail = "distance " + fmt(td) + ", entropy " + fmt(s);
  return ok;
}

// Compact re-checks of the structural properties the unit suites cover in
// depth.
bool c8_properties(std::string& detail) {
  std::mt19937_64 eng(8001);
  double worst = 0;

  // Gate constructors stay unitary.
  for (int pi = 0; pi < 3; ++pi) {
    LevelPair p = LevelPair::from_index(pi);
    for (const CMat& m :
         {tx(p), th(p), tz(pi), rotation(Axis::Y, p, 1.3), gcx(pi, p),
          feynman(), tkcx(2, p), ncr(2, NcrSubspace::L01, 0.7)}) {
      if (!is_unitary(m, 1e-10)) {
        detail = "constructor lost unitarity";
        return false;
      }
    }
  }

  // Rotation composition and the 2 pi sign flip.
  LevelPair p02(0, 2);
  worst = std::max(worst, dev(rotation(Axis::Y, p02, 0.7) *
                                  rotation(Axis::Y, p02, 0.5),
                              rotation(Axis::Y, p02, 1.2)));
  CMat full = rotation(Axis::Z, p02, 4 * std::numbers::pi);
  worst = std::max(worst, dev(full, CMat::Identity(3, 3)));
  if (std::abs(rotation(Axis::Z, p02, 2 * std::numbers::pi)(0, 0) -
               Complex(-1, 0)) > 1e-12) {
    detail = "2 pi rotation missed the sign flip";
    return false;
  }

  // The shift family closes under composition.
  for (ShiftKind x : {ShiftKind::Buffer, ShiftKind::SingleShift,
                      ShiftKind::SelfDualShift}) {
    for (ShiftKind y : {ShiftKind::DualShift, ShiftKind::SelfShift,
                        ShiftKind::SelfSingleShift}) {
      AffineMap mx = shift_map(x), my = shift_map(y);
      AffineMap prod{(mx.a * my.a) % 3, (mx.a * my.b + mx.b) % 3};
      worst = std::max(
          worst, dev(shift(x) * shift(y), shift(shift_from_map(prod))));
    }
  }

  // All 27 pads differ beyond a global phase.
  for (int u = 0; u < 27; ++u) {
    for (int v = u + 1; v < 27; ++v) {
      CMat A = pad_operator(KeyTriple(u / 9, (u / 3) % 3, u % 3));
      CMat B = pad_operator(KeyTriple(v / 9, (v / 3) % 3, v % 3));
      CMat r = dagger(A) * B;
      if (dev(r, (r.trace() / 3.0) * CMat::Identity(3, 3)) <= 1e-8) {
        detail = "two pads coincide up to phase";
        return false;
      }
    }
  }

  // Decryption inverts encryption on random registers.
  for (int n = 1; n <= 3; ++n) {
    Key k = random_key(n, eng);
    QState s = random_state(n, eng);
    worst = std::max(
        worst, dev(decrypt(k, encrypt(k, s)).amplitudes(), s.amplitudes()));
  }

  // Embedding matches explicit tensor products.
  CMat g = th(LevelPair(0, 1));
  worst = std::max(
      worst,
      dev(embed({ThGate{LevelPair(0, 1)}, {1}}, 3),
          kron(kron(CMat::Identity(3, 3), g), CMat::Identity(3, 3))));

  // Text round-trip preserves circuits.
  Circuit c;
  c.qutrits = 2;
  c.gates.push_back({ThGate{LevelPair(0, 1)}, {0}});
  c.gates.push_back({GcxGate{2, LevelPair(1, 2)}, {0, 1}});
  c.gates.push_back({RotationGate{Axis::Z, LevelPair(0, 2), 0.25}, {1}});
  std::istringstream ss(format_circuit(c));
  worst = std::max(worst,
                   dev(circuit_unitary(parse_circuit(ss)), circuit_unitary(c)));

  detail = "max deviation " + fmt(worst);
  return worst <= 1e-10;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1 single-qutrit walkthrough", c1_rotation_walkthrough},
      {"C2 controlled-exchange walkthrough", c2_exchange_walkthrough},
      {"C3 key statistics", c3_key_statistics},
      {"C4 homomorphic evaluation", c4_homomorphism},
      {"C5 exchange synthesis", c5_synthesis},
      {"C6 rotation-product decomposition", c6_decomposition},
      {"C7 ciphertext mixing", c7_mixing},
      {"C8 structural properties", c8_properties},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("%s  %-36s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", c.label,
                detail.c_str(), secs);
    all_ok = all_ok && ok;
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all_ok ? 0 : 1;
}
