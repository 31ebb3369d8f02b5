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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "triqhe/circuit.hpp"
#include "triqhe/errors.hpp"

using namespace triqhe;
using oracles::dev;

namespace {

// Random mix of the gate menagerie on `width` wires.
Circuit random_circuit(int width, int gates, std::mt19937_64& eng) {
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<int> wire(0, width - 1);
  std::uniform_int_distribution<int> trit(0, 2);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  Circuit c;
  c.qutrits = width;
  for (int g = 0; g < gates; ++g) {
    int w0 = wire(eng);
    int w1 = (w0 + 1 + wire(eng) % std::max(1, width - 1)) % width;
    switch (pick(eng)) {
      case 0:
        c.gates.push_back({TxGate{LevelPair::from_index(trit(eng))}, {w0}});
        break;
      case 1:
        c.gates.push_back({ThGate{LevelPair::from_index(trit(eng))}, {w0}});
        break;
      case 2:
        c.gates.push_back({TzGate{trit(eng)}, {w0}});
        break;
      case 3:
        c.gates.push_back(
            {RotationGate{Axis::Y, LevelPair::from_index(trit(eng)),
                          angle(eng)},
             {w0}});
        break;
      case 4:
        c.gates.push_back(
            {RotationGate{Axis::Z, LevelPair::from_index(trit(eng)),
                          angle(eng)},
             {w0}});
        break;
      case 5:
        if (width >= 2) {
          c.gates.push_back(
              {GcxGate{trit(eng), LevelPair::from_index(trit(eng))}, {w0, w1}});
          break;
        }
        [[fallthrough]];
      default:
        c.gates.push_back({ShiftGate{ShiftKind::SingleShift}, {w0}});
    }
  }
  return c;
}

}  // namespace

TEST_CASE("single-wire embedding equals explicit tensor products") {
  CMat g = th(LevelPair(0, 2));
  CMat i3 = CMat::Identity(3, 3);
  GateSpec spec = ThGate{LevelPair(0, 2)};
  CHECK(dev(embed({spec, {0}}, 3), kron(kron(g, i3), i3)) == 0.0);
  CHECK(dev(embed({spec, {1}}, 3), kron(kron(i3, g), i3)) == 0.0);
  CHECK(dev(embed({spec, {2}}, 3), kron(kron(i3, i3), g)) == 0.0);
}

TEST_CASE("adjacent two-wire embedding equals a tensor factor") {
  GateSpec spec = GcxGate{1, LevelPair(1, 2)};
  CMat g = gcx(1, LevelPair(1, 2));
  CMat i3 = CMat::Identity(3, 3);
  CHECK(dev(embed({spec, {0, 1}}, 3), kron(g, i3)) == 0.0);
  CHECK(dev(embed({spec, {1, 2}}, 3), kron(i3, g)) == 0.0);
}

TEST_CASE("wire order reversal conjugates by the swap permutation") {
  GateSpec spec = GcxGate{2, LevelPair(0, 1)};
  CMat fwd = embed({spec, {0, 1}}, 2);
  CMat rev = embed({spec, {1, 0}}, 2);
  CMat swap = oracles::perm_matrix(9, [](int x) { return 3 * (x % 3) + x / 3; });
  CHECK(dev(rev, swap * fwd * swap) == 0.0);
}

TEST_CASE("nonadjacent wires: control above, target below") {
  // Control on wire 0, target on wire 2 of three; middle untouched.
  CMat u = embed({GateSpec(GcxGate{2, LevelPair(0, 1)}), {0, 2}}, 3);
  for (int x = 0; x < 27; ++x) {
    int a = x / 9, b = (x / 3) % 3, c = x % 3;
    int cc = a == 2 ? (c == 0 ? 1 : c == 1 ? 0 : 2) : c;
    int y = 9 * a + 3 * b + cc;
    CHECK(u(y, x) == Complex(1, 0));
  }
}

TEST_CASE("instance validation") {
  GateSpec gcx_spec = GcxGate{0, LevelPair(0, 1)};
  CHECK_THROWS_AS(validate_instance({gcx_spec, {0}}, 2), DimensionError);
  CHECK_THROWS_AS(validate_instance({gcx_spec, {0, 0}}, 2), DimensionError);
  CHECK_THROWS_AS(validate_instance({gcx_spec, {0, 2}}, 2), DimensionError);
  CHECK_THROWS_AS(validate_instance({gcx_spec, {-1, 0}}, 2), DimensionError);
  CHECK_NOTHROW(validate_instance({gcx_spec, {1, 0}}, 2));
}

TEST_CASE("unitary accumulation matches gate-by-gate application") {
  std::mt19937_64 eng(21);
  for (int rep = 0; rep < 6; ++rep) {
    int width = 1 + static_cast<int>(eng() % 3);
    Circuit c = random_circuit(width, 30, eng);
    CMat u = circuit_unitary(c);
    CHECK(is_unitary(u, 1e-10));
    QState in(width, oracles::random_state_vec(static_cast<int>(pow3(width)), eng));
    QState via_circuit = apply_circuit(c, in);
    CHECK(dev(u * in.amplitudes(), via_circuit.amplitudes()) < 1e-12);
  }
}

TEST_CASE("gate order: later gates multiply from the left") {
  Circuit c;
  c.qutrits = 1;
  c.gates.push_back({TxGate{LevelPair(0, 1)}, {0}});
  c.gates.push_back({TzGate{0}, {0}});
  CHECK(dev(circuit_unitary(c), tz(0) * tx(LevelPair(0, 1))) == 0.0);
}

TEST_CASE("parse a representative circuit") {
  std::istringstream in(
      "# modular sum from guarded exchanges\n"
      "qutrits: 2\n"
      "\n"
      "GCX 1 01 0 1\n"
      "GCX 1 02 0 1   # trailing comment\n"
      "GCX 2 01 0 1\n"
      "GCX 2 12 0 1\n");
  Circuit c = parse_circuit(in);
  CHECK(c.qutrits == 2);
  CHECK(c.gates.size() == 4);
  CHECK(dev(circuit_unitary(c), feynman()) == 0.0);
}

TEST_CASE("parse every mnemonic family") {
  std::istringstream in(
      "qutrits: 3\n"
      "TX02 1\n"
      "TH12 0\n"
      "TZ1 2\n"
      "SHIFT*2+1 0\n"
      "ROTy01 1 0.5\n"
      "ROTz02 2 -2.25\n"
      "GCX 0 12 2 0\n"
      "TKCX 02 0 1 2\n"
      "TKCNOT 1 2\n"
      "NCR 12 0 1 2 0.125\n");
  Circuit c = parse_circuit(in);
  REQUIRE(c.gates.size() == 10);
  CHECK(std::get<TxGate>(c.gates[0].spec).pair == LevelPair(0, 2));
  CHECK(std::get<ShiftGate>(c.gates[3].spec).kind == ShiftKind::SelfSingleShift);
  CHECK(std::get<RotationGate>(c.gates[5].spec).theta == -2.25);
  CHECK(std::get<TkcxGate>(c.gates[7].spec).controls == 2);
  CHECK(std::get<TkcnotGate>(c.gates[8].spec).controls == 1);
  CHECK(std::get<NcrGate>(c.gates[9].spec).qutrits == 3);
  CHECK(std::get<NcrGate>(c.gates[9].spec).theta == 0.125);
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 eng(22);
  Circuit c = random_circuit(3, 25, eng);
  std::string text = format_circuit(c);
  std::istringstream in(text);
  Circuit back = parse_circuit(in);
  CHECK(format_circuit(back) == text);
  CHECK(dev(circuit_unitary(back), circuit_unitary(c)) == 0.0);
}

TEST_CASE("parse failures carry the offending line") {
  auto expect_parse_error = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_circuit(in), ParseError);
  };
  expect_parse_error("");                            // no header
  expect_parse_error("TX01 0\n");                    // gate before header
  expect_parse_error("qutrits: x\n");                // bad count
  expect_parse_error("qutrits: 1\nWAT 0\n");         // unknown gate
  expect_parse_error("qutrits: 1\nTX01\n");          // missing wire
  expect_parse_error("qutrits: 1\nTX01 0 1\n");      // extra wire
  expect_parse_error("qutrits: 1\nROTy01 0\n");      // missing angle
  expect_parse_error("qutrits: 1\nROTq01 0 1.0\n");  // bad axis
  expect_parse_error("qutrits: 2\nGCX 4 01 0 1\n");  // bad control value
  expect_parse_error("qutrits: 2\nGCX 1 03 0 1\n");  // bad pair
  expect_parse_error("qutrits: 2\nNCR 02 0 1 0.5\n");  // bad subspace

  std::istringstream out_of_range("qutrits: 1\nTX01 4\n");
  CHECK_THROWS_AS(parse_circuit(out_of_range), DimensionError);
  std::istringstream repeated("qutrits: 2\nGCX 1 01 1 1\n");
  CHECK_THROWS_AS(parse_circuit(repeated), DimensionError);
}

TEST_CASE("application rejects width mismatch") {
  Circuit c;
  c.qutrits = 2;
  c.gates.push_back({TxGate{LevelPair(0, 1)}, {0}});
  CHECK_THROWS_AS(apply_circuit(c, QState::basis(1, 0)), DimensionError);
}
