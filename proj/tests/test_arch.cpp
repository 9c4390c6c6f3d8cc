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
#include <set>

#include "oracle.hpp"
#include "zxsynth/arch.hpp"

using namespace zxsynth;

TEST(architecture, descriptors) {
  auto const line = build_architecture("line:4");
  EXPECT_EQ(line.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(line.distance(0, 3), 3u);
  EXPECT_EQ(build_architecture("complete:5").distance(2, 4), 1u);
  EXPECT_EQ(build_architecture("circle:6").distance(0, 3), 3u);
  EXPECT_EQ(build_architecture("line:5").distance(1, 4), 3u);
  EXPECT_EQ(build_architecture("square:9").name(), "grid:3x3");
  EXPECT_THROW(build_architecture("line"), std::invalid_argument);
  EXPECT_THROW(build_architecture("torus:4"), std::invalid_argument);
  EXPECT_THROW(build_architecture("square:5"), std::invalid_argument);
  EXPECT_THROW(Architecture(3, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Architecture(2, {{0, 0}}), std::invalid_argument);
}

TEST(architecture, grid_matches_bfs) {
  auto const g = build_architecture("grid:3x3");
  auto const bfs = oracle::bfs_distances(9, g.edges());
  EXPECT_EQ(bfs[0][8], 4);
  EXPECT_EQ(g.distance(0, 8), 4u);
  auto const g23 = build_architecture("grid:2x3");
  auto const d = oracle::bfs_distances(6, g23.edges());
  auto const table = all_pairs_distances(g23);
  for (qubit_t u = 0; u < 6; ++u) {
    for (qubit_t v = 0; v < 6; ++v) {
      EXPECT_EQ(static_cast<int>(table[u * 6 + v]), d[u][v]);
    }
  }
}

namespace {

Architecture random_connected(std::size_t q, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (qubit_t v = 1; v < q; ++v) {
    edges.emplace_back(static_cast<qubit_t>(rng() % v), v);  // random spanning tree
  }
  auto const extra = rng() % (q + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    auto const u = static_cast<qubit_t>(rng() % q), v = static_cast<qubit_t>(rng() % q);
    if (u != v) {
      edges.emplace_back(u, v);
    }
  }
  return {q, edges};
}

} // namespace

TEST(architecture, distances_match_bfs_on_random_graphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto const q = 2 + rng() % 9;
    auto const a = random_connected(q, rng);
    auto const d = oracle::bfs_distances(q, a.edges());
    for (qubit_t u = 0; u < q; ++u) {
      for (qubit_t v = 0; v < q; ++v) {
        ASSERT_EQ(static_cast<int>(a.distance(u, v)), d[u][v]);
        ASSERT_EQ(a.adjacent(u, v), d[u][v] == 1);
      }
    }
  }
}

TEST(architecture, shortest_path_is_lexicographically_smallest) {
  auto const g = build_architecture("grid:2x2");  // 0-1, 0-2, 1-3, 2-3
  EXPECT_EQ(g.shortest_path(0, 3), (std::vector<qubit_t>{0, 1, 3}));
  EXPECT_EQ(g.shortest_path(3, 0), (std::vector<qubit_t>{3, 1, 0}));
  auto const c = build_architecture("circle:4");
  EXPECT_EQ(c.shortest_path(0, 2), (std::vector<qubit_t>{0, 1, 2}));
}

TEST(terminal_tree, examples) {
  EXPECT_EQ(terminal_tree(build_architecture("line:5"), {0, 2, 4}).weight, 4u);
  EXPECT_EQ(terminal_tree(build_architecture("grid:3x3"), {3}).weight, 0u);
  EXPECT_EQ(terminal_tree(build_architecture("complete:4"), {0, 1, 2}).weight, 2u);
  EXPECT_EQ(oracle::steiner_weight(5, build_architecture("line:5").edges(), 0b10101), 4);
}

TEST(terminal_tree, valid_and_within_twice_optimal) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto const q = 2 + rng() % 5;
    auto const a = random_connected(q, rng);
    std::uint64_t terms = 0;
    while (std::popcount(terms) < 1 + static_cast<int>(rng() % q)) {
      terms |= std::uint64_t{1} << (rng() % q);
    }
    auto const tree = terminal_tree(a, LegSet(terms).to_vector());
    auto const exact = oracle::steiner_weight(q, a.edges(), terms);
    ASSERT_GE(static_cast<int>(tree.weight), exact);
    ASSERT_LE(static_cast<int>(tree.weight), 2 * exact);
    ASSERT_EQ(tree.weight, tree.edges.size());
    // a tree over the terminals made of coupling edges
    std::set<qubit_t> vertices;
    for (auto [u, v] : tree.edges) {
      ASSERT_TRUE(a.adjacent(u, v));
      vertices.insert(u);
      vertices.insert(v);
    }
    if (!tree.edges.empty()) {
      ASSERT_EQ(vertices.size(), tree.edges.size() + 1);
      for (auto t : LegSet(terms).to_vector()) {
        ASSERT_TRUE(vertices.count(t));
      }
      EXPECT_NO_THROW(RootedTree(q, tree.edges, *vertices.begin()));
    }
  }
}

TEST(terminal_tree, exact_on_lines) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto const q = 2 + rng() % 7;
    auto const a = line_architecture(q);
    std::uint64_t terms = 0;
    while (std::popcount(terms) < 2) {
      terms |= std::uint64_t{1} << (rng() % q);
    }
    terms |= rng() & ((std::uint64_t{1} << q) - 1);
    EXPECT_EQ(static_cast<int>(terminal_tree(a, LegSet(terms).to_vector()).weight),
              oracle::steiner_weight(q, a.edges(), terms));
  }
}
