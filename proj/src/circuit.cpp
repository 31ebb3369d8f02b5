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

#include "triqhe/circuit.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "triqhe/errors.hpp"

namespace triqhe {

namespace {

std::int64_t digit_at(std::int64_t index, std::int64_t stride) {
  return (index / stride) % 3;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void validate_instance(const GateInstance& g, int width) {
  const int a = arity(g.spec);
  if (static_cast<int>(g.wires.size()) != a) {
    throw DimensionError("gate needs " + std::to_string(a) + " wires, got " +
                         std::to_string(g.wires.size()));
  }
  for (std::size_t t = 0; t < g.wires.size(); ++t) {
    if (g.wires[t] < 0 || g.wires[t] >= width) {
      throw DimensionError("wire " + std::to_string(g.wires[t]) +
                           " outside register of width " +
                           std::to_string(width));
    }
    for (std::size_t u = t + 1; u < g.wires.size(); ++u) {
      if (g.wires[t] == g.wires[u]) {
        throw DimensionError("repeated wire " + std::to_string(g.wires[t]));
      }
    }
  }
}

void validate_circuit(const Circuit& c) {
  if (c.qutrits < 1) {
    throw DimensionError("circuit needs at least one qutrit");
  }
  for (const auto& g : c.gates) validate_instance(g, c.qutrits);
}

CMat embed(const GateInstance& g, int width) {
  validate_instance(g, width);
  const CMat gm = matrix(g.spec);
  const int a = static_cast<int>(g.wires.size());
  const std::int64_t dim = pow3(width);
  const std::int64_t sub = pow3(a);

  std::vector<std::int64_t> stride(a);
  for (int t = 0; t < a; ++t) stride[t] = pow3(width - 1 - g.wires[t]);

  CMat out = CMat::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    std::int64_t loc_in = 0;
    std::int64_t base = col;
    for (int t = 0; t < a; ++t) {
      std::int64_t d = digit_at(col, stride[t]);
      loc_in = loc_in * 3 + d;
      base -= d * stride[t];
    }
    for (std::int64_t loc_out = 0; loc_out < sub; ++loc_out) {
      Complex v = gm(loc_out, loc_in);
      if (v == 0.0) continue;
      std::int64_t row = base;
      std::int64_t tmp = loc_out;
      for (int t = a - 1; t >= 0; --t) {
        row += (tmp % 3) * stride[t];
        tmp /= 3;
      }
      out(row, col) = v;
    }
  }
  return out;
}

CMat circuit_unitary(const Circuit& c) {
  validate_circuit(c);
  const std::int64_t dim = pow3(c.qutrits);
  CMat u = CMat::Identity(dim, dim);
  for (const auto& g : c.gates) u = embed(g, c.qutrits) * u;
  return u;
}

namespace {

void apply_instance(const GateInstance& g, int width, CVec& amps) {
  const CMat gm = matrix(g.spec);
  const int a = static_cast<int>(g.wires.size());
  const std::int64_t dim = amps.size();
  const std::int64_t sub = pow3(a);

  std::vector<std::int64_t> stride(a);
  for (int t = 0; t < a; ++t) stride[t] = pow3(width - 1 - g.wires[t]);

  std::vector<std::int64_t> offset(sub, 0);
  for (std::int64_t loc = 0; loc < sub; ++loc) {
    std::int64_t tmp = loc;
    for (int t = a - 1; t >= 0; --t) {
      offset[loc] += (tmp % 3) * stride[t];
      tmp /= 3;
    }
  }

  CVec in(sub), out(sub);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    bool is_base = true;
    for (int t = 0; t < a && is_base; ++t) {
      if (digit_at(idx, stride[t]) != 0) is_base = false;
    }
    if (!is_base) continue;
    for (std::int64_t loc = 0; loc < sub; ++loc) in(loc) = amps(idx + offset[loc]);
    out.noalias() = gm * in;
    for (std::int64_t loc = 0; loc < sub; ++loc) amps(idx + offset[loc]) = out(loc);
  }
}

}  // namespace

QState apply_circuit(const Circuit& c, const QState& s) {
  validate_circuit(c);
  if (c.qutrits != s.qutrits()) {
    throw DimensionError("circuit width " + std::to_string(c.qutrits) +
                         " does not match state width " +
                         std::to_string(s.qutrits()));
  }
  CVec amps = s.amplitudes();
  for (const auto& g : c.gates) apply_instance(g, c.qutrits, amps);
  return QState(c.qutrits, std::move(amps));
}

namespace {

std::vector<std::string> line_tokens(const std::string& line) {
  std::string cut = line.substr(0, line.find('#'));
  std::istringstream ss(cut);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "trailing characters in '" + tok + "'");
  return v;
}

double parse_double(const std::string& tok, int line_no) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected number, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "trailing characters in '" + tok + "'");
  return v;
}

LevelPair parse_pair(const std::string& tok, int line_no) {
  if (tok == "01") return LevelPair(0, 1);
  if (tok == "02") return LevelPair(0, 2);
  if (tok == "12") return LevelPair(1, 2);
  fail(line_no, "expected level pair 01, 02 or 12, got '" + tok + "'");
}

std::optional<GateSpec> fixed_gate(const std::string& name) {
  if (name == "TX01") return GateSpec(TxGate{LevelPair(0, 1)});
  if (name == "TX02") return GateSpec(TxGate{LevelPair(0, 2)});
  if (name == "TX12") return GateSpec(TxGate{LevelPair(1, 2)});
  if (name == "TH01") return GateSpec(ThGate{LevelPair(0, 1)});
  if (name == "TH02") return GateSpec(ThGate{LevelPair(0, 2)});
  if (name == "TH12") return GateSpec(ThGate{LevelPair(1, 2)});
  if (name == "TZ0") return GateSpec(TzGate{0});
  if (name == "TZ1") return GateSpec(TzGate{1});
  if (name == "TZ2") return GateSpec(TzGate{2});
  if (name == "SHIFT+0") return GateSpec(ShiftGate{ShiftKind::Buffer});
  if (name == "SHIFT+1") return GateSpec(ShiftGate{ShiftKind::SingleShift});
  if (name == "SHIFT+2") return GateSpec(ShiftGate{ShiftKind::DualShift});
  if (name == "SHIFT*2") return GateSpec(ShiftGate{ShiftKind::SelfShift});
  if (name == "SHIFT*2+1")
    return GateSpec(ShiftGate{ShiftKind::SelfSingleShift});
  if (name == "SHIFT*2+2") return GateSpec(ShiftGate{ShiftKind::SelfDualShift});
  return std::nullopt;
}

GateInstance parse_gate_line(const std::vector<std::string>& toks,
                             int line_no) {
  const std::string& name = toks[0];

  if (auto g = fixed_gate(name)) {
    if (toks.size() != 2) fail(line_no, name + " takes exactly one wire");
    return {*g, {parse_int(toks[1], line_no)}};
  }

  if (name.size() == 6 && name.compare(0, 3, "ROT") == 0) {
    Axis axis;
    switch (name[3]) {
      case 'x':
        axis = Axis::X;
        break;
      case 'y':
        axis = Axis::Y;
        break;
      case 'z':
        axis = Axis::Z;
        break;
      default:
        fail(line_no, "unknown rotation axis in '" + name + "'");
    }
    LevelPair p = parse_pair(name.substr(4), line_no);
    if (toks.size() != 3) fail(line_no, name + " takes one wire and an angle");
    return {RotationGate{axis, p, parse_double(toks[2], line_no)},
            {parse_int(toks[1], line_no)}};
  }

  if (name == "GCX") {
    if (toks.size() != 5) {
      fail(line_no, "GCX takes control value, level pair and two wires");
    }
    int cv = parse_int(toks[1], line_no);
    if (cv < 0 || cv > 2) fail(line_no, "GCX control value outside {0,1,2}");
    LevelPair p = parse_pair(toks[2], line_no);
    return {GcxGate{cv, p},
            {parse_int(toks[3], line_no), parse_int(toks[4], line_no)}};
  }

  if (name == "TKCX") {
    if (toks.size() < 4) fail(line_no, "TKCX takes a level pair and >= 2 wires");
    LevelPair p = parse_pair(toks[1], line_no);
    std::vector<int> wires;
    for (std::size_t t = 2; t < toks.size(); ++t) {
      wires.push_back(parse_int(toks[t], line_no));
    }
    return {TkcxGate{static_cast<int>(wires.size()) - 1, p}, std::move(wires)};
  }

  if (name == "TKCNOT") {
    if (toks.size() < 3) fail(line_no, "TKCNOT takes >= 2 wires");
    std::vector<int> wires;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      wires.push_back(parse_int(toks[t], line_no));
    }
    return {TkcnotGate{static_cast<int>(wires.size()) - 1}, std::move(wires)};
  }

  if (name == "NCR") {
    if (toks.size() < 5) {
      fail(line_no, "NCR takes a subspace, >= 2 wires and an angle");
    }
    NcrSubspace sub;
    if (toks[1] == "01") {
      sub = NcrSubspace::L01;
    } else if (toks[1] == "12") {
      sub = NcrSubspace::L12;
    } else {
      fail(line_no, "NCR subspace must be 01 or 12");
    }
    std::vector<int> wires;
    for (std::size_t t = 2; t + 1 < toks.size(); ++t) {
      wires.push_back(parse_int(toks[t], line_no));
    }
    double theta = parse_double(toks.back(), line_no);
    return {NcrGate{static_cast<int>(wires.size()), sub, theta},
            std::move(wires)};
  }

  fail(line_no, "unknown gate '" + name + "'");
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = line_tokens(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "qutrits:") {
        fail(line_no, "expected header 'qutrits: <n>'");
      }
      c.qutrits = parse_int(toks[1], line_no);
      if (c.qutrits < 1) fail(line_no, "qutrit count must be positive");
      have_header = true;
      continue;
    }
    c.gates.push_back(parse_gate_line(toks, line_no));
  }
  if (!have_header) throw ParseError("missing 'qutrits: <n>' header");
  validate_circuit(c);
  return c;
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file '" + path + "'");
  return parse_circuit(in);
}

std::string format_instance(const GateInstance& g) {
  struct Parts {
    std::string lead;
    bool angle = false;
    double theta = 0;
  };
  Parts parts = std::visit(
      [](const auto& v) -> Parts {
        using T = std::decay_t<decltype(v)>;
        static constexpr const char* pair_names[3] = {"01", "02", "12"};
        if constexpr (std::is_same_v<T, TxGate>) {
          return {std::string("TX") + pair_names[v.pair.index()]};
        } else if constexpr (std::is_same_v<T, ThGate>) {
          return {std::string("TH") + pair_names[v.pair.index()]};
        } else if constexpr (std::is_same_v<T, TzGate>) {
          return {"TZ" + std::to_string(v.level)};
        } else if constexpr (std::is_same_v<T, ShiftGate>) {
          switch (v.kind) {
            case ShiftKind::Buffer:
              return {"SHIFT+0"};
            case ShiftKind::SingleShift:
              return {"SHIFT+1"};
            case ShiftKind::DualShift:
              return {"SHIFT+2"};
            case ShiftKind::SelfShift:
              return {"SHIFT*2"};
            case ShiftKind::SelfSingleShift:
              return {"SHIFT*2+1"};
            default:
              return {"SHIFT*2+2"};
          }
        } else if constexpr (std::is_same_v<T, RotationGate>) {
          char a = v.axis == Axis::X ? 'x' : v.axis == Axis::Y ? 'y' : 'z';
          return {std::string("ROT") + a + pair_names[v.pair.index()], true,
                  v.theta};
        } else if constexpr (std::is_same_v<T, GcxGate>) {
          return {"GCX " + std::to_string(v.control_value) + " " +
                  pair_names[v.pair.index()]};
        } else if constexpr (std::is_same_v<T, TkcxGate>) {
          return {std::string("TKCX ") + pair_names[v.pair.index()]};
        } else if constexpr (std::is_same_v<T, TkcnotGate>) {
          return {"TKCNOT"};
        } else {
          return {std::string("NCR ") +
                      (v.subspace == NcrSubspace::L01 ? "01" : "12"),
                  true, v.theta};
        }
      },
      g.spec);

  std::string out = parts.lead;
  for (int w : g.wires) out += " " + std::to_string(w);
  if (parts.angle) out += " " + fmt_double(parts.theta);
  return out;
}

std::string format_circuit(const Circuit& c) {
  std::string out = "qutrits: " + std::to_string(c.qutrits) + "\n";
  for (const auto& g : c.gates) out += format_instance(g) + "\n";
  return out;
}

}  // namespace triqhe
