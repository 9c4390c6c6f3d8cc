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
#include "zxsynth/sim.hpp"

using namespace zxsynth;

TEST(sim, single_qubit_rz) {
  auto const u = gadget_unitary(z_gadget(LegSet{0}, Phase::pi()), 1);
  EXPECT_NEAR(std::abs(u.at(0, 0) - std::polar(1.0, -std::numbers::pi / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u.at(1, 1) - std::polar(1.0, std::numbers::pi / 2)), 0.0, 1e-15);
  EXPECT_EQ(u.at(0, 1), cplx{});
}

TEST(sim, zero_phase_is_identity) {
  EXPECT_LT(frobenius_distance(gadget_unitary(x_gadget(LegSet{0, 2}, Phase::zero()), 3), Unitary(3)), 1e-15);
}

TEST(sim, gadget_unitary_matches_ladder) {
  auto const g = z_gadget(LegSet{0, 1}, Phase(3, 8));
  Circuit const ladder(2, {Gate::cx(0, 1), Gate::rz(g.phase, 1), Gate::cx(0, 1)});
  EXPECT_LT(frobenius_distance(gadget_unitary(g, 2), circuit_unitary(ladder)), 1e-12);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto const q = 1 + rng() % 5;
    auto const h = oracle::random_gadget(q, rng);
    auto const u = gadget_unitary(h, q);
    ASSERT_LT(oracle::distance(oracle::from(u), oracle::gadget(h, q)), 1e-12);
    ASSERT_LT(frobenius_distance(u, circuit_unitary(naive_gadget_circuit(h, complete_architecture(q)))), 1e-12);
    ASSERT_LT(frobenius_distance(u * u.adjoint(), Unitary(q)), 1e-10);
  }
}

TEST(sim, circuit_and_parity_unitaries) {
  EXPECT_LT(frobenius_distance(circuit_unitary(Circuit(3)), Unitary(3)), 1e-15);
  auto const cx = circuit_unitary(Circuit(2, {Gate::cx(0, 1)}));
  EXPECT_LT(oracle::distance(oracle::from(cx), oracle::cnot(0, 1, 2)), 1e-15);
  // little-endian: |x0=1, x1=0> = index 1 maps to index 3
  EXPECT_EQ(cx.at(3, 1), cplx(1.0));
  EXPECT_LT(frobenius_distance(parity_unitary(ParityMap::from_rows({0b01, 0b11})), cx), 1e-15);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    auto const q = 2 + rng() % 4;
    auto const m = oracle::random_invertible(q, rng);
    auto const c = static_cast<qubit_t>(rng() % q);
    auto t = static_cast<qubit_t>(rng() % (q - 1));
    t += t >= c;
    auto const lhs = parity_unitary(append_cnot(m, {c, t}));
    auto const rhs = circuit_unitary(Circuit(q, {Gate::cx(c, t)})) * parity_unitary(m);
    ASSERT_LT(frobenius_distance(lhs, rhs), 1e-15);
  }
}

TEST(sim, global_phase_comparison) {
  auto const u = gadget_unitary(x_gadget(LegSet{0, 1}, Phase(1, 3)), 2);
  auto v = u;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      v.at(r, c) *= std::polar(1.0, std::numbers::pi / 7);
    }
  }
  EXPECT_TRUE(equal_up_to_global_phase(u, u, 1e-12));
  EXPECT_TRUE(equal_up_to_global_phase(u, v, 1e-12));
  EXPECT_FALSE(equal_up_to_global_phase(circuit_unitary(Circuit(2, {Gate::cx(0, 1)})), Unitary(2), 1e-3));
  EXPECT_THROW(equal_up_to_global_phase(Unitary(2), Unitary(3), 1e-9), std::invalid_argument);
  EXPECT_THROW(Unitary(13), std::invalid_argument);
}
