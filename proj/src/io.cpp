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

#include "triqhe/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::vector<std::string> file_tokens(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string t;
    while (ss >> t) toks.push_back(t);
  }
  return toks;
}

int token_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(what + ": trailing characters in '" + tok + "'");
  }
  return v;
}

double token_double(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": expected number, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(what + ": trailing characters in '" + tok + "'");
  }
  return v;
}

LevelPair token_pair(const std::string& tok, const std::string& what) {
  if (tok == "01") return LevelPair(0, 1);
  if (tok == "02") return LevelPair(0, 2);
  if (tok == "12") return LevelPair(1, 2);
  throw ParseError(what + ": expected level pair 01, 02 or 12, got '" + tok +
                   "'");
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

QState read_state_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto toks = file_tokens(in);
  if (toks.size() < 2 || toks[0] != "qutrits:") {
    throw ParseError(path + ": expected header 'qutrits: <n>'");
  }
  int n = token_int(toks[1], path);
  if (n < 1) throw ParseError(path + ": qutrit count must be positive");
  std::int64_t dim = pow3(n);
  if (static_cast<std::int64_t>(toks.size()) != 2 + 2 * dim) {
    throw ParseError(path + ": expected " + std::to_string(2 * dim) +
                     " amplitude values, got " +
                     std::to_string(toks.size() - 2));
  }
  CVec a(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    a(i) = Complex(token_double(toks[2 + 2 * i], path),
                   token_double(toks[3 + 2 * i], path));
  }
  double norm = a.norm();
  double drift = std::abs(norm - 1.0);
  if (drift > 1e-6) {
    throw ParseError(path + ": state norm " + std::to_string(norm) +
                     " too far from 1");
  }
  if (drift > 1e-10) {
    std::cerr << "warning: " << path << ": renormalizing state, norm drift "
              << drift << "\n";
    a /= norm;
  }
  return QState(n, std::move(a));
}

void write_state_file(const std::string& path, const QState& s) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << "qutrits: " << s.qutrits() << "\n";
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    out << fmt_double(s.amplitudes()(i).real()) << " "
        << fmt_double(s.amplitudes()(i).imag()) << "\n";
  }
  if (!out.flush()) throw ParseError("write failed for '" + path + "'");
}

Key read_key_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto toks = file_tokens(in);
  if (toks.empty() || toks.size() % 3 != 0) {
    throw ParseError(path + ": expected triples 'alpha beta delta'");
  }
  Key k;
  for (std::size_t i = 0; i < toks.size(); i += 3) {
    int a = token_int(toks[i], path);
    int b = token_int(toks[i + 1], path);
    int d = token_int(toks[i + 2], path);
    if (a < 0 || a > 2 || b < 0 || b > 2 || d < 0 || d > 2) {
      throw ParseError(path + ": key digits must lie in {0,1,2}");
    }
    k.triples.emplace_back(a, b, d);
  }
  return k;
}

void write_key_file(const std::string& path, const Key& k) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  for (const auto& t : k.triples) {
    out << t.alpha << " " << t.beta << " " << t.delta << "\n";
  }
  if (!out.flush()) throw ParseError("write failed for '" + path + "'");
}

JobSpec read_job_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto toks = file_tokens(in);
  if (toks.empty()) throw ParseError(path + ": empty job file");
  const std::string& scheme = toks[0];

  if (scheme == "scheme1") {
    if (toks.size() != 4) {
      throw ParseError(path + ": scheme1 takes axis, pair and angle");
    }
    Axis axis;
    if (toks[1] == "y") {
      axis = Axis::Y;
    } else if (toks[1] == "z") {
      axis = Axis::Z;
    } else {
      throw ParseError(path + ": scheme1 axis must be y or z");
    }
    LevelPair p = token_pair(toks[2], path);
    if (p.index() == 2) {
      throw ParseError(path + ": scheme1 pair must be 01 or 02");
    }
    return JobRotation{axis, p, token_double(toks[3], path)};
  }

  if (scheme == "scheme2") {
    if (toks.size() < 2) {
      throw ParseError(path + ": scheme2 needs 'matrix' or 'params'");
    }
    if (toks[1] == "matrix") {
      if (toks.size() != 20) {
        throw ParseError(path + ": scheme2 matrix takes 18 values");
      }
      CMat m(3, 3);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          int base = 2 + 2 * (3 * r + c);
          m(r, c) = Complex(token_double(toks[base], path),
                            token_double(toks[base + 1], path));
        }
      }
      return JobMatrix{std::move(m)};
    }
    if (toks[1] == "params") {
      if (toks.size() != 11) {
        throw ParseError(path + ": scheme2 params takes 9 angles");
      }
      std::array<double, 9> a;
      for (int i = 0; i < 9; ++i) a[i] = token_double(toks[2 + i], path);
      return JobMatrix{compose(CartanParams::from_array(a))};
    }
    throw ParseError(path + ": scheme2 needs 'matrix' or 'params', got '" +
                     toks[1] + "'");
  }

  if (scheme == "scheme3") {
    if (toks.size() != 4) {
      throw ParseError(path +
                       ": scheme3 takes control value, pair and plaintext "
                       "control");
    }
    int cv = token_int(toks[1], path);
    int m = token_int(toks[3], path);
    if (cv < 0 || cv > 2 || m < 0 || m > 2) {
      throw ParseError(path + ": scheme3 control values must lie in {0,1,2}");
    }
    return JobControlled{cv, token_pair(toks[2], path), m};
  }

  if (scheme == "scheme4") {
    if (toks.size() != 2) {
      throw ParseError(path + ": scheme4 takes a circuit path");
    }
    std::filesystem::path cpath(toks[1]);
    if (cpath.is_relative()) {
      cpath = std::filesystem::path(path).parent_path() / cpath;
    }
    return JobCircuit{parse_circuit_file(cpath.string())};
  }

  throw ParseError(path + ": unknown scheme '" + scheme + "'");
}

EvalJob bind_job(const JobSpec& spec, const Key& k) {
  return std::visit(
      [&](const auto& j) -> EvalJob {
        using T = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<T, JobRotation>) {
          if (k.qutrits() != 1) {
            throw DimensionError("scheme1 needs a 1-qutrit key, got " +
                                 std::to_string(k.qutrits()));
          }
          return Scheme1Job{k, j.axis, j.pair, j.theta};
        } else if constexpr (std::is_same_v<T, JobMatrix>) {
          if (k.qutrits() != 1) {
            throw DimensionError("scheme2 needs a 1-qutrit key, got " +
                                 std::to_string(k.qutrits()));
          }
          return Scheme2Job{k, j.target};
        } else if constexpr (std::is_same_v<T, JobControlled>) {
          if (k.qutrits() != 2) {
            throw DimensionError("scheme3 needs a 2-qutrit key, got " +
                                 std::to_string(k.qutrits()));
          }
          return Scheme3Job{k, j.control_value, j.pair, j.plaintext_control};
        } else {
          if (k.qutrits() != j.circuit.qutrits) {
            throw DimensionError(
                "scheme4 circuit width " + std::to_string(j.circuit.qutrits) +
                " does not match key width " + std::to_string(k.qutrits()));
          }
          return Scheme4Job{k, j.circuit};
        }
      },
      spec);
}

CMat read_matrix_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto toks = file_tokens(in);
  if (toks.size() != 18) {
    throw ParseError(path + ": expected 18 values for a 3x3 complex matrix");
  }
  CMat m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int base = 2 * (3 * r + c);
      m(r, c) = Complex(token_double(toks[base], path),
                        token_double(toks[base + 1], path));
    }
  }
  return m;
}

PermTable read_perm_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto toks = file_tokens(in);
  if (toks.size() != 9) {
    throw ParseError(path + ": expected 9 basis state images");
  }
  std::array<int, 9> images;
  for (int i = 0; i < 9; ++i) images[i] = token_int(toks[i], path);
  try {
    return perm_from_images(images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace triqhe
