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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "triqhe/errors.hpp"
#include "triqhe/io.hpp"
#include "triqhe/security.hpp"

namespace {

using namespace triqhe;

std::string fmt_matrix(const CMat& m) {
  std::string out;
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%+.6f%+.6fi  ", m(r, c).real(),
                    m(r, c).imag());
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string fmt_state(const QState& s) {
  std::string out;
  char buf[64];
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    std::snprintf(buf, sizeof(buf), "  [%ld] %+.6f%+.6fi\n",
                  static_cast<long>(i), s.amplitudes()(i).real(),
                  s.amplitudes()(i).imag());
    out += buf;
  }
  return out;
}

bool check_line(const std::string& label, double deviation, double tol) {
  std::printf("%s  %s (max deviation %.3e)\n",
              deviation <= tol ? "PASS" : "FAIL", label.c_str(), deviation);
  return deviation <= tol;
}

int cmd_demo_rotation() {
  const double s2 = std::sqrt(2.0);
  bool ok = true;

  Key key{{KeyTriple(2, 0, 1)}};
  CMat pad = enc_operator(key);
  CMat pad_expected(3, 3);
  pad_expected << 1 / s2, -1 / s2, 0, 0, 0, 1, 1 / s2, 1 / s2, 0;
  std::printf("pad operator for key (2,0,1):\n%s", fmt_matrix(pad).c_str());
  ok &= check_line("pad operator", max_abs(pad - pad_expected), 1e-8);

  Scheme1Job job{key, Axis::Y, LevelPair(0, 2), std::numbers::pi};
  CMat hom = hom_rotation(job);
  CMat hom_expected(3, 3);
  hom_expected << 0.5, -s2 / 2, -0.5, s2 / 2, 0, s2 / 2, -0.5, -s2 / 2, 0.5;
  std::printf("ciphertext-side rotation operator:\n%s", fmt_matrix(hom).c_str());
  ok &= check_line("ciphertext-side operator", max_abs(hom - hom_expected),
                   1e-8);

  QState out = run_pipeline(EvalJob(job), QState::basis(1, 0));
  CVec expected(3);
  expected << 0, 0, 1;
  std::printf("pipeline output for |0>:\n%s", fmt_state(out).c_str());
  ok &= check_line("pipeline output",
                   (out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-8);

  return ok ? 0 : 1;
}

int cmd_demo_exchange() {
  const double s2 = std::sqrt(2.0);
  bool ok = true;

  Key key{{KeyTriple(1, 0, 0), KeyTriple(2, 2, 1)}};
  Scheme3Job job{key, 0, LevelPair(0, 2), 0};

  CMat second_factor = pad_operator(key.triples[1]) * tx(LevelPair(0, 2)) *
                       tau(0, 0, LevelPair(0, 2)) *
                       dagger(pad_operator(key.triples[1]));
  CMat factor_expected(3, 3);
  factor_expected << 0, -s2 / 2, s2 / 2, -s2 / 2, 0.5, 0.5, s2 / 2, 0.5, 0.5;
  std::printf("second-wire factor of the ciphertext-side operator:\n%s",
              fmt_matrix(second_factor).c_str());
  ok &= check_line("second-wire factor", max_abs(second_factor - factor_expected),
                   1e-8);

  QState out = run_pipeline(EvalJob(job), QState::basis(2, 2));  // |02>
  CVec expected = CVec::Zero(9);
  expected(0) = 1;  // |00>
  std::printf("pipeline output for |02>:\n%s", fmt_state(out).c_str());
  ok &= check_line("pipeline maps |02> to |00>",
                   (out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-8);

  return ok ? 0 : 1;
}

std::string sequence_listing(const GcxSeq& seq) {
  std::string out = "qutrits: 2\n";
  for (const auto& s : seq) {
    static constexpr const char* pair_names[3] = {"01", "02", "12"};
    out += "GCX " + std::to_string(s.control_value) + " " +
           pair_names[s.pair.index()] +
           (s.control_wire == 0 ? " 0 1" : " 1 0") + "\n";
  }
  return out;
}

int cmd_synth(const std::string& named, const std::string& target_file) {
  if (named.empty() == target_file.empty()) {
    throw std::invalid_argument(
        "synth: give exactly one of a named target or --target-file");
  }

  if (!named.empty()) {
    auto t = named_target_from_name(named);
    if (!t) {
      throw std::invalid_argument("synth: unknown target '" + named +
                                  "' (TSUM, TSWAP, CNOT1, SINGLESHIFT)");
    }
    SynthesisReport rep = synthesize_named(*t);
    bool exact = seq_perm(rep.sequence) == named_target_perm(*t);
    std::printf("target: %s\nclaimed: %d\nachieved: %d\nverified: %s\n",
                named_target_name(rep.target).c_str(), rep.claimed,
                rep.achieved, exact ? "exact" : "MISMATCH");
    if (!rep.note.empty()) std::printf("note: %s\n", rep.note.c_str());
    std::printf("%s", sequence_listing(rep.sequence).c_str());
    return exact ? 0 : 1;
  }

  PermTable target = read_perm_file(target_file);
  auto seq = synthesize_perm(target);
  if (!seq) {
    throw ConvergenceError("synth: no sequence of length <= 12 realizes '" +
                           target_file + "'");
  }
  bool exact = seq_perm(*seq) == target;
  std::printf("target: %s\nachieved: %d\nverified: %s\n", target_file.c_str(),
              static_cast<int>(seq->size()), exact ? "exact" : "MISMATCH");
  std::printf("%s", sequence_listing(*seq).c_str());
  return exact ? 0 : 1;
}

int cmd_decompose(const std::string& matrix_path, std::uint64_t seed,
                  int restarts) {
  CMat u = read_matrix_file(matrix_path);
  FitOptions opt;
  opt.seed = seed;
  if (restarts > 0) opt.max_restarts = restarts;
  CartanParams p = fit(u, opt);
  static constexpr const char* names[9] = {"alpha", "beta",  "gamma",
                                           "delta", "theta", "phi",
                                           "beta2", "gamma2", "delta2"};
  auto arr = p.to_array();
  for (int i = 0; i < 9; ++i) std::printf("%-7s % .17g\n", names[i], arr[i]);
  std::printf("residual %.3e\n", residual(p, u));
  return 0;
}

int cmd_security_report(int n, int plaintexts, std::uint64_t trials,
                        std::uint64_t seed) {
  RandomSource rng(seed);
  if (trials == 0) trials = n == 1 ? 270000 : 1000000;
  SecurityReport rep = security_report(n, plaintexts, trials, rng);
  std::printf("security report (n=%d)\n", rep.qutrits);
  std::printf("  key space            : %llu keys\n",
              static_cast<unsigned long long>(rep.key_space));
  std::printf("  p_k = 1/%llu = %.10g\n",
              static_cast<unsigned long long>(rep.key_space),
              rep.key_probability);
  std::printf("  empirical guess rate : %.6f +- %.6f (%llu trials)\n",
              rep.guess.rate, rep.guess.stderr_rate,
              static_cast<unsigned long long>(rep.guess.trials));
  double sigmas = rep.guess.stderr_rate > 0
                      ? std::abs(rep.guess.rate - rep.key_probability) /
                            rep.guess.stderr_rate
                      : 0.0;
  std::printf("  deviation from p_k   : %.2f sigma\n", sigmas);
  std::printf("  plaintext samples    : %d\n", rep.plaintext_samples);
  std::printf("  avg trace distance   : %.10g (min %.10g)\n",
              rep.avg_trace_distance, rep.min_trace_distance);
  std::printf("  avg entropy (base 3) : %.10g (max %.10g)\n", rep.avg_entropy,
              rep.max_entropy);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qutrit one-time-pad and homomorphic evaluation toolkit"};
  app.require_subcommand(1);

  int n = 1;
  std::uint64_t seed = 0;
  std::string key_path, state_path, out_path, job_path;

  auto* keygen_cmd = app.add_subcommand("keygen", "draw a fresh key");
  keygen_cmd->add_option("--n", n, "register width in qutrits")->required();
  keygen_cmd->add_option("--seed", seed, "random seed")->required();
  keygen_cmd->add_option("--out", out_path, "key file to write")->required();

  auto* encrypt_cmd = app.add_subcommand("encrypt", "apply the pad");
  encrypt_cmd->add_option("--key", key_path)->required();
  encrypt_cmd->add_option("--state", state_path)->required();
  encrypt_cmd->add_option("--out", out_path)->required();

  auto* decrypt_cmd = app.add_subcommand("decrypt", "undo the pad");
  decrypt_cmd->add_option("--key", key_path)->required();
  decrypt_cmd->add_option("--state", state_path)->required();
  decrypt_cmd->add_option("--out", out_path)->required();

  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "apply a job's ciphertext-side operator");
  evaluate_cmd->add_option("--key", key_path)->required();
  evaluate_cmd->add_option("--job", job_path)->required();
  evaluate_cmd->add_option("--state", state_path)->required();
  evaluate_cmd->add_option("--out", out_path)->required();

  std::string demo_which;
  auto* demo_cmd = app.add_subcommand("demo", "worked examples with checks");
  demo_cmd->add_option("which", demo_which, "rotation or exchange")->required();

  std::string synth_target, synth_file;
  auto* synth_cmd =
      app.add_subcommand("synth", "find exchange sequences for two-qutrit "
                                  "permutation gates");
  synth_cmd->add_option("target", synth_target,
                        "TSUM, TSWAP, CNOT1 or SINGLESHIFT");
  synth_cmd->add_option("--target-file", synth_file,
                        "file with 9 basis state images");

  std::string matrix_path;
  int restarts = 0;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "fit the eight-factor rotation product to a unitary");
  decompose_cmd->add_option("--matrix", matrix_path)->required();
  decompose_cmd->add_option("--seed", seed);
  decompose_cmd->add_option("--restarts", restarts);

  int plaintexts = 20;
  std::uint64_t trials = 0;
  auto* security_cmd =
      app.add_subcommand("security-report", "pad statistics and mixing");
  security_cmd->add_option("--n", n)->required();
  security_cmd->add_option("--plaintexts", plaintexts);
  security_cmd->add_option("--trials", trials);
  security_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*keygen_cmd) {
      RandomSource rng(seed);
      write_key_file(out_path, keygen(n, rng));
      return 0;
    }
    if (*encrypt_cmd) {
      write_state_file(
          out_path, encrypt(read_key_file(key_path), read_state_file(state_path)));
      return 0;
    }
    if (*decrypt_cmd) {
      write_state_file(
          out_path, decrypt(read_key_file(key_path), read_state_file(state_path)));
      return 0;
    }
    if (*evaluate_cmd) {
      EvalJob job = bind_job(read_job_file(job_path), read_key_file(key_path));
      QState out = evaluate(hom_operator(job), read_state_file(state_path));
      write_state_file(out_path, out);
      return 0;
    }
    if (*demo_cmd) {
      if (demo_which == "rotation") return cmd_demo_rotation();
      if (demo_which == "exchange") return cmd_demo_exchange();
      throw std::invalid_argument("demo: unknown demo '" + demo_which +
                                  "' (rotation, exchange)");
    }
    if (*synth_cmd) return cmd_synth(synth_target, synth_file);
    if (*decompose_cmd) return cmd_decompose(matrix_path, seed, restarts);
    if (*security_cmd) return cmd_security_report(n, plaintexts, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
