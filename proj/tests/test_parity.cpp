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
#include "zxsynth/parity.hpp"

using namespace zxsynth;

TEST(parity_map, identity_and_cnots) {
  EXPECT_EQ(identity_map(1).row(0), 1u);
  EXPECT_TRUE(identity_map(3).is_identity());
  auto const m = append_cnot(identity_map(2), {0, 1});
  EXPECT_EQ(m, ParityMap::from_rows({0b01, 0b11}));
  EXPECT_EQ(append_cnot(m, {0, 1}), identity_map(2));
  // prepend CNOT(2,0): column 2 gains column 0
  auto const p = prepend_cnot(identity_map(3), {2, 0});
  EXPECT_EQ(p, ParityMap::from_rows({0b101, 0b010, 0b100}));
  EXPECT_THROW(append_cnot(identity_map(2), {0, 2}), std::invalid_argument);
}

TEST(parity_map, append_and_prepend_match_replay) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto const q = 2 + rng() % 6;
    std::vector<CnotOp> ops;
    for (int i = 0; i < 12; ++i) {
      auto const c = static_cast<qubit_t>(rng() % q);
      auto t = static_cast<qubit_t>(rng() % (q - 1));
      t += t >= c;
      ops.push_back({c, t});
    }
    auto appended = identity_map(q);
    for (auto const& op : ops) {
      appended = append_cnot(appended, op);
    }
    auto prepended = identity_map(q);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      prepended = prepend_cnot(prepended, *it);
    }
    auto const cols = oracle::replay_columns(q, ops);
    ASSERT_TRUE(oracle::matches(appended, cols));
    ASSERT_TRUE(oracle::matches(prepended, cols));
    ASSERT_EQ(replay(q, ops), appended);
  }
}

TEST(gauss_cnots, examples) {
  EXPECT_TRUE(gauss_cnots(identity_map(4)).empty());
  auto const m = ParityMap::from_rows({0b01, 0b11});
  EXPECT_EQ(gauss_cnots(m), (std::vector<CnotOp>{{0, 1}}));
  EXPECT_THROW(gauss_cnots(ParityMap::from_rows({0b11, 0b11})), std::invalid_argument);
}

TEST(gauss_cnots, shortest_sequence_for_two_qubit_example) {
  // all CNOT sequences of length <= 2 on 2 qubits
  auto const target = ParityMap::from_rows({0b01, 0b11});
  std::vector<CnotOp> const gates{{0, 1}, {1, 0}};
  std::size_t best = 99;
  for (std::size_t len = 0; len <= 2 && best == 99; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::vector<CnotOp> seq;
      for (std::size_t i = 0; i < len; ++i) {
        seq.push_back(gates[(code >> i) & 1u]);
      }
      if (oracle::matches(target, oracle::replay_columns(2, seq))) {
        best = len;
      }
    }
  }
  EXPECT_EQ(best, 1u);
  EXPECT_EQ(gauss_cnots(target).size(), best);
  EXPECT_EQ(steiner_gauss(target, complete_architecture(2)), (std::vector<CnotOp>{{0, 1}}));
  EXPECT_EQ(cnot_cost(target, complete_architecture(2)), best);
}

TEST(gauss_cnots, random_replay) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto const m = oracle::random_invertible(5, rng);
    ASSERT_TRUE(oracle::matches(m, oracle::replay_columns(5, gauss_cnots(m))));
  }
}

TEST(steiner_gauss, identity_is_free) {
  for (auto const& a : oracle::topologies(6)) {
    EXPECT_TRUE(steiner_gauss(identity_map(6), a).empty());
    EXPECT_EQ(cnot_cost(identity_map(6), a), 0u);
  }
}

TEST(steiner_gauss, replay_exact_and_edges_only) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto const q = 2 + rng() % 7;
    auto const m = oracle::random_invertible(q, rng);
    for (auto const& a : oracle::topologies(q)) {
      auto const ops = steiner_gauss(m, a);
      ASSERT_TRUE(oracle::matches(m, oracle::replay_columns(q, ops))) << a.name() << "\n" << m.to_string();
      for (auto const& op : ops) {
        ASSERT_TRUE(a.adjacent(op.control, op.target)) << a.name();
      }
    }
  }
}

TEST(steiner_gauss, handles_hard_subgraphs) {
  // a 3x3 grid and a star stress the restricted-tree fallback
  std::mt19937_64 rng(8);
  Architecture const star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, "star");
  Architecture const reversed_line(6, {{5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}, {0, 5}}, "ring");
  for (int trial = 0; trial < 50; ++trial) {
    auto const m9 = oracle::random_invertible(9, rng);
    ASSERT_TRUE(oracle::matches(m9, oracle::replay_columns(9, steiner_gauss(m9, grid_architecture(3, 3)))));
    auto const m6 = oracle::random_invertible(6, rng);
    ASSERT_TRUE(oracle::matches(m6, oracle::replay_columns(6, steiner_gauss(m6, star))));
    ASSERT_TRUE(oracle::matches(m6, oracle::replay_columns(6, steiner_gauss(m6, reversed_line))));
  }
}

TEST(steiner_gauss, close_to_plain_gauss_on_complete_graphs) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto const q = 2 + rng() % 7;
    auto const m = oracle::random_invertible(q, rng);
    EXPECT_LE(steiner_gauss(m, complete_architecture(q)).size(), gauss_cnots(m).size() + q);
  }
}

TEST(steiner_gauss, rejects_bad_input) {
  EXPECT_THROW(steiner_gauss(ParityMap::from_rows({0b11, 0b11}), line_architecture(2)), std::invalid_argument);
  EXPECT_THROW(steiner_gauss(identity_map(3), line_architecture(4)), std::invalid_argument);
}
