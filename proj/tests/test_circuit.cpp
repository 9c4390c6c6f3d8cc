// Copyright 2026 The zxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "zxsynth/circuit.hpp"

using namespace zxsynth;

namespace {

std::size_t cx(Circuit const& c) { return cnot_count(c); }

} // namespace

TEST(naive, examples) {
  auto const line2 = line_architecture(2);
  Phase const a(1, 4);
  EXPECT_EQ(naive_gadget_circuit(z_gadget(LegSet{1}, a), line2).gates, (std::vector<Gate>{Gate::rz(a, 1)}));
  EXPECT_EQ(naive_gadget_circuit(z_gadget(LegSet{0, 1}, a), line2).gates,
            (std::vector<Gate>{Gate::cx(0, 1), Gate::rz(a, 1), Gate::cx(0, 1)}));
  auto const far = naive_gadget_circuit(z_gadget(LegSet{0, 2}, a), line_architecture(3));
  EXPECT_EQ(cx(far), 8u);
  EXPECT_LT(oracle::phase_distance(oracle::circuit(far), oracle::gadget(z_gadget(LegSet{0, 2}, a), 3)), 1e-12);
}

TEST(routed_cnot, distance_two_sequence) {
  std::vector<Gate> out;
  emit_routed_cnot(line_architecture(3), 0, 2, out);
  EXPECT_EQ(out, (std::vector<Gate>{Gate::cx(0, 1), Gate::cx(1, 2), Gate::cx(0, 1), Gate::cx(1, 2)}));
}

TEST(routed_cnot, equals_cnot_at_every_distance) {
  for (std::size_t q = 2; q <= 6; ++q) {
    auto const a = line_architecture(q);
    for (qubit_t c = 0; c < q; ++c) {
      for (qubit_t t = 0; t < q; ++t) {
        if (c == t) {
          continue;
        }
        Circuit circ(q);
        emit_routed_cnot(a, c, t, circ.gates);
        auto const d = a.distance(c, t);
        ASSERT_EQ(circ.gates.size(), d == 1 ? 1u : 4 * (d - 1));
        ASSERT_TRUE(respects_architecture(circ, a));
        ASSERT_LT(oracle::distance(oracle::circuit(circ), oracle::cnot(c, t, q)), 1e-12);
      }
    }
  }
}

TEST(steiner_emitter, line_example) {
  Phase const a(1, 4);
  auto const g = z_gadget(LegSet{0, 2}, a);
  auto const c = steiner_gadget_circuit(g, line_architecture(3), qubit_t{2});
  std::vector<Gate> const ladder{Gate::cx(1, 2), Gate::cx(0, 1), Gate::cx(1, 2)};
  std::vector<Gate> expected = ladder;
  expected.push_back(Gate::rz(a, 2));
  expected.insert(expected.end(), ladder.rbegin(), ladder.rend());
  EXPECT_EQ(c.gates, expected);
  EXPECT_EQ(cx(c), 6u);
  EXPECT_LT(oracle::phase_distance(oracle::circuit(c), oracle::gadget(g, 3)), 1e-12);
  // default root is the most central leg, the lower index on ties
  EXPECT_EQ(steiner_gadget_circuit(g, line_architecture(3)).gates[3], Gate::rz(a, 0));
  EXPECT_THROW(steiner_gadget_circuit(g, line_architecture(3), qubit_t{1}), std::invalid_argument);
}

TEST(steiner_emitter, small_cases) {
  Phase const a(3, 8);
  auto const adj = z_gadget(LegSet{1, 2}, a);
  EXPECT_EQ(cx(steiner_gadget_circuit(adj, line_architecture(4))), 2u);
  EXPECT_EQ(steiner_gadget_circuit(x_gadget(LegSet{3}, a), line_architecture(4)).gates,
            (std::vector<Gate>{Gate::rx(a, 3)}));
}

TEST(emitters, match_gadget_unitary_on_all_topologies) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    auto const q = 1 + rng() % 5;
    auto const g = oracle::random_gadget(q, rng);
    auto const expected = oracle::gadget(g, q);
    for (auto const& a : oracle::topologies(q)) {
      auto const naive = naive_gadget_circuit(g, a);
      auto const tree = steiner_gadget_circuit(g, a);
      ASSERT_TRUE(respects_architecture(naive, a));
      ASSERT_TRUE(respects_architecture(tree, a));
      ASSERT_LT(oracle::phase_distance(oracle::circuit(naive), expected), 1e-12) << g << " " << a.name();
      ASSERT_LT(oracle::phase_distance(oracle::circuit(tree), expected), 1e-12) << g << " " << a.name();
      if (a.name().starts_with("line") && g.legs.size() >= 3) {
        ASSERT_LE(cx(tree), cx(naive));
      }
    }
  }
}

TEST(lower_regions, trivial_lists) {
  auto const a = line_architecture(3);
  EXPECT_TRUE(lower_regions({identity_map(3)}, a).gates.empty());
  auto const g = x_gadget(LegSet{0, 1}, Phase(1, 2));
  auto const c = lower_regions({identity_map(3), ZXPolynomial(3, {g}), identity_map(3)}, a);
  EXPECT_EQ(c, steiner_gadget_circuit(g, a));
  EXPECT_THROW(lower_regions({identity_map(2)}, a), std::invalid_argument);
}

TEST(metrics, counts_and_reduction) {
  EXPECT_EQ(cnot_count(Circuit(3)), 0u);
  EXPECT_DOUBLE_EQ(reduction(100, 40), 60.0);
  EXPECT_DOUBLE_EQ(reduction(100, 100), 0.0);
  EXPECT_DOUBLE_EQ(reduction(50, 75), -50.0);
  EXPECT_THROW(reduction(0, 0), std::invalid_argument);
}

TEST(qasm, export_format) {
  Circuit c(2, {Gate::cx(0, 1), Gate::rz(Phase(1, 2), 1), Gate::rx(Phase(7, 4), 0)});
  EXPECT_EQ(to_qasm(c), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n"
                        "cx q[0],q[1];\nrz(1.57079632679) q[1];\nrx(5.49778714378) q[0];\n");
}

TEST(qasm, round_trip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto const q = 2 + rng() % 5;
    Circuit c(q);
    for (int i = 0; i < 20; ++i) {
      auto const a = static_cast<qubit_t>(rng() % q);
      switch (rng() % 3) {
      case 0: {
        auto b = static_cast<qubit_t>(rng() % (q - 1));
        b += b >= a;
        c.gates.push_back(Gate::cx(a, b));
        break;
      }
      case 1:
        c.gates.push_back(Gate::rz(Phase(static_cast<std::int64_t>(rng() % 32), 16), a));
        break;
      default:
        c.gates.push_back(Gate::rx(Phase(static_cast<std::int64_t>(rng() % 14), 7), a));
        break;
      }
    }
    ASSERT_EQ(from_qasm(to_qasm(c)), c);
  }
}

TEST(qasm, parses_pi_expressions_and_rejects_garbage) {
  auto const c = from_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nrz(pi/4) q[0];\nrx(-3*pi/8) q[1];\n"
                           "// comment\nrz(0.5*pi) q[1];\n");
  ASSERT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(c.gates[0].phase, Phase(1, 4));
  EXPECT_EQ(c.gates[1].phase, Phase(13, 8));
  EXPECT_EQ(c.gates[2].phase, Phase(1, 2));
  EXPECT_THROW(from_qasm("qreg q[2];\nh q[0];\n"), std::invalid_argument);
  EXPECT_THROW(from_qasm("qreg q[2];\ncx q[0],q[2];\n"), std::invalid_argument);
  EXPECT_THROW(from_qasm("cx q[0],q[1];\n"), std::invalid_argument);
}
