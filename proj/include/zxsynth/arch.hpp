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

/*!
  \file arch.hpp
  \brief Coupling graphs, hop-count distance tables and approximate Steiner trees.

  An `Architecture` is an undirected, connected, unweighted coupling graph.
  Besides the all-pairs distance table it keeps one table per lower bound
  `lb`, holding distances inside the subgraph induced by vertices `>= lb`.
  Those restricted tables let the parity synthesis grow trees that never
  touch rows which are already eliminated.
*/

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace zxsynth {

using Edge = std::pair<qubit_t, qubit_t>;

class Architecture {
public:
  static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

  /// Builds from an explicit edge list. Throws on q = 0, bad indices,
  /// self loops, or a disconnected graph.
  Architecture(std::size_t num_qubits, std::vector<Edge> const& edges, std::string name = "custom")
      : q_(num_qubits), name_(std::move(name)) {
    if (q_ == 0) {
      throw std::invalid_argument("architecture needs at least one qubit");
    }
    if (q_ > max_qubits) {
      throw std::invalid_argument("architecture exceeds " + std::to_string(max_qubits) + " qubits");
    }
    std::set<Edge> unique;
    for (auto [u, v] : edges) {
      if (u >= q_ || v >= q_) {
        throw std::invalid_argument("edge endpoint out of range");
      }
      if (u == v) {
        throw std::invalid_argument("self loop on qubit " + std::to_string(u));
      }
      unique.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(unique.begin(), unique.end());
    adjacency_.assign(q_, {});
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& n : adjacency_) {
      std::sort(n.begin(), n.end());
    }

    restricted_.resize(q_);
    for (std::size_t lb = 0; lb < q_; ++lb) {
      restricted_[lb] = bfs_table(static_cast<qubit_t>(lb));
    }
    for (std::size_t v = 0; v < q_; ++v) {
      if (restricted_[0][v] == unreachable) {
        throw std::invalid_argument("architecture graph is disconnected");
      }
    }
  }

  std::size_t num_qubits() const { return q_; }
  std::vector<Edge> const& edges() const { return edges_; }
  std::vector<qubit_t> const& neighbors(qubit_t v) const { return adjacency_[v]; }
  std::string const& name() const { return name_; }

  std::uint32_t distance(qubit_t u, qubit_t v) const { return restricted_[0][u * q_ + v]; }

  /// Distance inside the subgraph induced by vertices >= lower_bound.
  std::uint32_t distance_within(qubit_t lower_bound, qubit_t u, qubit_t v) const {
    if (u < lower_bound || v < lower_bound) {
      return unreachable;
    }
    return restricted_[lower_bound][u * q_ + v];
  }

  bool adjacent(qubit_t u, qubit_t v) const { return u != v && distance(u, v) == 1; }

  /// Row-major q*q hop-count table.
  std::vector<std::uint32_t> const& distance_table() const { return restricted_[0]; }

  /// Lexicographically smallest shortest path u -> v inside vertices >= lower_bound.
  std::vector<qubit_t> shortest_path(qubit_t u, qubit_t v, qubit_t lower_bound = 0) const {
    if (distance_within(lower_bound, u, v) == unreachable) {
      throw std::invalid_argument("no path between qubits in the requested subgraph");
    }
    std::vector<qubit_t> path{u};
    auto cur = u;
    while (cur != v) {
      auto const d = distance_within(lower_bound, cur, v);
      for (auto w : adjacency_[cur]) {
        if (w >= lower_bound && distance_within(lower_bound, w, v) + 1 == d) {
          cur = w;
          break;
        }
      }
      path.push_back(cur);
    }
    return path;
  }

private:
  std::vector<std::uint32_t> bfs_table(qubit_t lb) const {
    std::vector<std::uint32_t> table(q_ * q_, unreachable);
    for (auto src = lb; src < q_; ++src) {
      auto* row = &table[src * q_];
      std::queue<qubit_t> frontier;
      row[src] = 0;
      frontier.push(src);
      while (!frontier.empty()) {
        auto const u = frontier.front();
        frontier.pop();
        for (auto w : adjacency_[u]) {
          if (w >= lb && row[w] == unreachable) {
            row[w] = row[u] + 1;
            frontier.push(w);
          }
        }
      }
    }
    return table;
  }

  std::size_t q_;
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<qubit_t>> adjacency_;
  std::vector<std::vector<std::uint32_t>> restricted_;
};

namespace detail {

inline std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("malformed size '" + std::string(text) + "' in topology descriptor");
  }
  return value;
}

} // namespace detail

inline Architecture line_architecture(std::size_t q) {
  std::vector<Edge> edges;
  for (qubit_t i = 0; i + 1 < q; ++i) {
    edges.emplace_back(i, i + 1);
  }
  return {q, edges, "line:" + std::to_string(q)};
}

inline Architecture circle_architecture(std::size_t q) {
  std::vector<Edge> edges;
  for (qubit_t i = 0; i + 1 < q; ++i) {
    edges.emplace_back(i, i + 1);
  }
  if (q > 2) {
    edges.emplace_back(static_cast<qubit_t>(q - 1), 0);
  }
  return {q, edges, "circle:" + std::to_string(q)};
}

inline Architecture complete_architecture(std::size_t q) {
  std::vector<Edge> edges;
  for (qubit_t i = 0; i < q; ++i) {
    for (qubit_t j = i + 1; j < q; ++j) {
      edges.emplace_back(i, j);
    }
  }
  return {q, edges, "complete:" + std::to_string(q)};
}

/// Row-major grid: qubit r*cols + c sits at row r, column c.
inline Architecture grid_architecture(std::size_t rows, std::size_t cols) {
  if (rows * cols == 0) {
    throw std::invalid_argument("grid architecture needs rows*cols > 0");
  }
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto const v = static_cast<qubit_t>(r * cols + c);
      if (c + 1 < cols) {
        edges.emplace_back(v, v + 1);
      }
      if (r + 1 < rows) {
        edges.emplace_back(v, static_cast<qubit_t>(v + cols));
      }
    }
  }
  return {rows * cols, edges, "grid:" + std::to_string(rows) + "x" + std::to_string(cols)};
}

/// Parses `line:q`, `circle:q`, `complete:q`, `grid:RxC`, or `square:q`
/// for a sqrt(q) x sqrt(q) grid.
inline Architecture build_architecture(std::string_view descriptor) {
  auto const colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("topology descriptor must look like kind:size, got '" + std::string(descriptor) + "'");
  }
  auto const kind = descriptor.substr(0, colon);
  auto const size = descriptor.substr(colon + 1);
  if (kind == "grid") {
    auto const x = size.find('x');
    if (x == std::string_view::npos) {
      throw std::invalid_argument("grid descriptor must be grid:RxC");
    }
    return grid_architecture(detail::parse_count(size.substr(0, x)), detail::parse_count(size.substr(x + 1)));
  }
  auto const q = detail::parse_count(size);
  if (q == 0) {
    throw std::invalid_argument("architecture needs at least one qubit");
  }
  if (kind == "line") {
    return line_architecture(q);
  }
  if (kind == "circle") {
    return circle_architecture(q);
  }
  if (kind == "complete") {
    return complete_architecture(q);
  }
  if (kind == "square") {
    std::size_t side = 1;
    while ((side + 1) * (side + 1) <= q) {
      ++side;
    }
    if (side * side != q) {
      throw std::invalid_argument("square topology needs a perfect-square qubit count");
    }
    return grid_architecture(side, side);
  }
  throw std::invalid_argument("unknown topology '" + std::string(kind) + "'");
}

inline std::vector<std::uint32_t> all_pairs_distances(Architecture const& arch) { return arch.distance_table(); }

struct SteinerTree {
  std::vector<Edge> edges; ///< physical coupling edges, each stored (min, max)
  std::size_t weight = 0;  ///< number of edges
};

/// Approximate Steiner tree: Kruskal MST over the metric closure of the
/// terminals, each closure edge expanded to its canonical shortest path,
/// the union reduced to a spanning tree and pruned of non-terminal leaves.
///
/// Equal-weight closure edges are taken in lexicographic order, except that
/// edges touching `root` (when given) go first. With `lower_bound` > 0 all
/// paths stay inside vertices >= lower_bound; throws if the terminals are
/// not connected there.
inline SteinerTree terminal_tree(Architecture const& arch, std::vector<qubit_t> terminals,
                                 std::optional<qubit_t> root = std::nullopt, qubit_t lower_bound = 0) {
  if (terminals.empty()) {
    throw std::invalid_argument("terminal set must be non-empty");
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  for (auto t : terminals) {
    if (t >= arch.num_qubits()) {
      throw std::invalid_argument("terminal out of range");
    }
  }
  if (terminals.size() == 1) {
    return {};
  }

  struct ClosureEdge {
    std::uint32_t dist;
    bool off_root;
    qubit_t u, v;
    auto key() const { return std::tie(dist, off_root, u, v); }
  };
  std::vector<ClosureEdge> closure;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      auto const u = terminals[i];
      auto const v = terminals[j];
      auto const d = arch.distance_within(lower_bound, u, v);
      if (d == Architecture::unreachable) {
        throw std::invalid_argument("terminals are not connected in the restricted subgraph");
      }
      bool const touches_root = root && (u == *root || v == *root);
      closure.push_back({d, !touches_root, u, v});
    }
  }
  std::sort(closure.begin(), closure.end(), [](auto const& a, auto const& b) { return a.key() < b.key(); });

  std::vector<qubit_t> dsu(arch.num_qubits());
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](qubit_t x) {
    while (dsu[x] != x) {
      x = dsu[x] = dsu[dsu[x]];
    }
    return x;
  };

  std::set<Edge> used;
  std::size_t joined = 0;
  for (auto const& e : closure) {
    auto const a = find(e.u);
    auto const b = find(e.v);
    if (a == b) {
      continue;
    }
    dsu[a] = b;
    auto const path = arch.shortest_path(e.u, e.v, lower_bound);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      used.emplace(std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1]));
    }
    if (++joined + 1 == terminals.size()) {
      break;
    }
  }

  // the union of paths may contain cycles; keep a BFS spanning tree of it
  auto const q = arch.num_qubits();
  std::vector<std::vector<qubit_t>> adj(q);
  for (auto [u, v] : used) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
  }
  auto const start = root && std::binary_search(terminals.begin(), terminals.end(), *root) ? *root : terminals.front();
  std::vector<int> parent(q, -2);
  parent[start] = -1;
  std::queue<qubit_t> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    auto const u = frontier.front();
    frontier.pop();
    for (auto w : adj[u]) {
      if (parent[w] == -2) {
        parent[w] = static_cast<int>(u);
        frontier.push(w);
      }
    }
  }

  std::vector<bool> is_terminal(q, false);
  for (auto t : terminals) {
    is_terminal[t] = true;
  }
  std::vector<int> degree(q, 0);
  for (qubit_t v = 0; v < q; ++v) {
    if (parent[v] >= 0) {
      ++degree[v];
      ++degree[parent[v]];
    }
  }
  std::vector<bool> removed(q, false);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (qubit_t v = 0; v < q; ++v) {
      if (!removed[v] && parent[v] >= 0 && !is_terminal[v] && degree[v] == 1) {
        removed[v] = true;
        --degree[v];
        --degree[parent[v]];
        pruned = true;
      }
    }
  }

  SteinerTree tree;
  for (qubit_t v = 0; v < q; ++v) {
    if (parent[v] >= 0 && !removed[v]) {
      auto const p = static_cast<qubit_t>(parent[v]);
      tree.edges.emplace_back(std::min(v, p), std::max(v, p));
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  tree.weight = tree.edges.size();
  return tree;
}

/// A tree over architecture vertices oriented away from a root.
struct RootedTree {
  qubit_t root = 0;
  std::vector<int> parent;                    ///< -1 for the root and for vertices outside the tree
  std::vector<std::vector<qubit_t>> children; ///< ascending
  std::vector<qubit_t> preorder;              ///< root first, children ascending

  RootedTree(std::size_t q, std::vector<Edge> const& edges, qubit_t root_vertex)
      : root(root_vertex), parent(q, -1), children(q) {
    std::vector<std::vector<qubit_t>> adj(q);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<bool> seen(q, false);
    std::vector<qubit_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      auto const u = stack.back();
      stack.pop_back();
      preorder.push_back(u);
      auto nbrs = adj[u];
      std::sort(nbrs.begin(), nbrs.end());
      for (auto w : nbrs) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = static_cast<int>(u);
          children[u].push_back(w);
        }
      }
      for (auto it = children[u].rbegin(); it != children[u].rend(); ++it) {
        stack.push_back(*it);
      }
    }
    if (preorder.size() != edges.size() + 1) {
      throw std::invalid_argument("edge set is not a tree containing the root");
    }
  }

  /// Children before parents; reverse of a preorder walk.
  std::vector<qubit_t> postorder() const {
    std::vector<qubit_t> out;
    out.reserve(preorder.size());
    std::vector<std::pair<qubit_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children[v].size()) {
        auto const c = children[v][next++];
        stack.emplace_back(c, 0);
      } else {
        out.push_back(v);
        stack.pop_back();
      }
    }
    return out;
  }
};

/// CNOT list (control, target) that XORs every terminal of the tree into
/// the root. Each edge v -> parent contributes CNOT(v, parent) after v's
/// subtree is done; a non-terminal v also sends one copy before its subtree,
/// so its own value cancels. Non-root wires are left holding partial sums.
inline std::vector<Edge> accumulate_sweep(RootedTree const& tree, std::vector<bool> const& is_terminal) {
  std::vector<Edge> sweep;
  struct Frame {
    qubit_t v;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  for (auto c : tree.children[tree.root]) {
    if (!is_terminal[c]) {
      sweep.emplace_back(c, tree.root);
    }
    stack.push_back({c, 0});
    while (!stack.empty()) {
      auto const v = stack.back().v;
      auto& next = stack.back().next_child;
      if (next < tree.children[v].size()) {
        auto const ch = tree.children[v][next++];
        if (!is_terminal[ch]) {
          sweep.emplace_back(ch, v);
        }
        stack.push_back({ch, 0});
      } else {
        sweep.emplace_back(v, static_cast<qubit_t>(tree.parent[v]));
        stack.pop_back();
      }
    }
  }
  return sweep;
}

} // namespace zxsynth
