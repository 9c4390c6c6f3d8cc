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
  \file parity.hpp
  \brief GF(2) parity maps of CNOT circuits and their re-synthesis.

  Row i of a parity map is the set of inputs whose XOR ends up on wire i.
  Appending CNOT(c, t) (gate after the map) adds row c into row t;
  prepending it (gate before the map) adds column t into column c.

  `steiner_gauss` re-synthesizes a map using only coupling-graph edges.
  It works column by column in two phases:

  1. Lower elimination, ascending columns. The pivot row and every row
     below it with a one in the column are connected by a Steiner tree
     drawn inside vertices >= column. Ones are filled along the tree, then
     removed bottom-up, leaving only the pivot. Rows above the column are
     never touched.
  2. Upper elimination, descending columns, on the now upper-triangular
     map. If the Steiner tree hangs strictly decreasing indices off the
     pivot, the same fill-and-remove sweep is exact. Otherwise the pivot
     row is fanned out to the tree's terminals with a clean CNOT network
     that leaves all other rows intact.

  If the rows >= column cannot reach each other without passing through an
  eliminated row (possible only for hand-written coupling graphs), phase 1
  falls back to the clean fan-out as well.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arch.hpp"
#include "rules.hpp"

namespace zxsynth {

class ParityMap {
public:
  ParityMap() = default;

  static ParityMap identity(std::size_t q) {
    if (q == 0 || q > max_qubits) {
      throw std::invalid_argument("parity map size must be in [1, 64]");
    }
    ParityMap m;
    m.rows_.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
      m.rows_[i] = std::uint64_t{1} << i;
    }
    return m;
  }

  static ParityMap from_rows(std::vector<std::uint64_t> rows) {
    ParityMap m;
    m.rows_ = std::move(rows);
    return m;
  }

  std::size_t size() const { return rows_.size(); }
  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  std::vector<std::uint64_t> const& rows() const { return rows_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }

  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }

  /// column[dst] ^= column[src]
  void add_column(std::size_t src, std::size_t dst) {
    for (auto& r : rows_) {
      r ^= ((r >> src) & 1u) << dst;
    }
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] != (std::uint64_t{1} << i)) {
        return false;
      }
    }
    return true;
  }

  /// Rank over GF(2).
  std::size_t rank() const {
    auto work = rows_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.size() && r < work.size(); ++c) {
      auto const bit = std::uint64_t{1} << c;
      auto it = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(r), work.end(),
                             [bit](auto row) { return (row & bit) != 0; });
      if (it == work.end()) {
        continue;
      }
      std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(r), it);
      for (std::size_t k = 0; k < work.size(); ++k) {
        if (k != r && (work[k] & bit)) {
          work[k] ^= work[r];
        }
      }
      ++r;
    }
    return r;
  }

  bool invertible() const { return rank() == rows_.size(); }

  std::string to_string() const {
    std::ostringstream os;
    for (auto r : rows_) {
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        os << ((r >> j) & 1u);
      }
      os << '\n';
    }
    return os.str();
  }

  bool operator==(ParityMap const&) const = default;

private:
  std::vector<std::uint64_t> rows_;
};

inline ParityMap identity_map(std::size_t q) { return ParityMap::identity(q); }

/// The gate acts after the map.
inline ParityMap append_cnot(ParityMap m, CnotOp const& cnot) {
  require_valid(cnot, m.size());
  m.add_row(cnot.control, cnot.target);
  return m;
}

/// The gate acts before the map.
inline ParityMap prepend_cnot(ParityMap m, CnotOp const& cnot) {
  require_valid(cnot, m.size());
  m.add_column(cnot.target, cnot.control);
  return m;
}

/// Map of a CNOT sequence replayed from the identity.
inline ParityMap replay(std::size_t q, std::vector<CnotOp> const& cnots) {
  auto m = identity_map(q);
  for (auto const& c : cnots) {
    m.add_row(c.control, c.target);
  }
  return m;
}

namespace detail {

/// Row operations that reduce a map to the identity. Replaying the
/// reversed list from the identity rebuilds the original map.
class RowReducer {
public:
  explicit RowReducer(ParityMap m) : m_(std::move(m)) {}

  ParityMap& map() { return m_; }

  void add(qubit_t src, qubit_t dst) {
    m_.add_row(src, dst);
    ops_.push_back({src, dst});
  }

  std::vector<CnotOp> into_circuit() && {
    if (!m_.is_identity()) {
      throw std::logic_error("row reduction did not reach the identity");
    }
    std::reverse(ops_.begin(), ops_.end());
    return std::move(ops_);
  }

private:
  ParityMap m_;
  std::vector<CnotOp> ops_;
};

[[noreturn]] inline void throw_singular() { throw std::invalid_argument("parity map is singular"); }

/// Gates XOR-ing every non-root terminal into the root while restoring all
/// other wires. Gate CNOT(a, b) means x_b ^= x_a.
inline std::vector<CnotOp> clean_fan_in(RootedTree const& tree, std::vector<bool> const& is_terminal) {
  auto const sweep = accumulate_sweep(tree, is_terminal);
  std::vector<CnotOp> out;
  out.reserve(2 * sweep.size());
  for (auto [from, to] : sweep) {
    out.push_back({from, to});
  }
  // the root is never read, so undoing the rest restores every other wire
  for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) {
    if (it->second != tree.root) {
      out.push_back({it->first, it->second});
    }
  }
  return out;
}

/// Transpose of the clean fan-in: x_t ^= x_root for every non-root terminal.
inline std::vector<CnotOp> clean_fan_out(RootedTree const& tree, std::vector<bool> const& is_terminal) {
  auto gates = clean_fan_in(tree, is_terminal);
  std::reverse(gates.begin(), gates.end());
  for (auto& g : gates) {
    std::swap(g.control, g.target);
  }
  return gates;
}

inline std::vector<bool> terminal_mask(std::size_t q, std::vector<qubit_t> const& terminals) {
  std::vector<bool> mask(q, false);
  for (auto t : terminals) {
    mask[t] = true;
  }
  return mask;
}

/// rows[t] ^= rows[root] for every t in targets, nothing else changes.
inline void fan_out_rows(RowReducer& red, Architecture const& arch, qubit_t root, std::vector<qubit_t> const& targets) {
  auto terminals = targets;
  terminals.push_back(root);
  auto const tree = terminal_tree(arch, terminals, root);
  RootedTree const rooted(arch.num_qubits(), tree.edges, root);
  for (auto const& g : clean_fan_out(rooted, terminal_mask(arch.num_qubits(), terminals))) {
    red.add(g.control, g.target);
  }
}

/// Fill-and-remove on a tree rooted at the pivot. Afterwards the pivot is
/// the only tree row carrying `bit`.
inline void fill_and_remove(RowReducer& red, RootedTree const& tree, std::uint64_t bit) {
  auto& m = red.map();
  auto const post = tree.postorder();
  if (m.row(tree.root) & bit) {
    for (auto v : tree.preorder) {
      if (v != tree.root && !(m.row(v) & bit)) {
        red.add(static_cast<qubit_t>(tree.parent[v]), v);
      }
    }
  } else {
    for (auto v : post) {
      if (!(m.row(v) & bit)) {
        auto const& ch = tree.children[v];
        auto it = std::find_if(ch.begin(), ch.end(), [&](qubit_t c) { return (m.row(c) & bit) != 0; });
        if (it == ch.end()) {
          throw_singular();
        }
        red.add(*it, v);
      }
    }
  }
  for (auto v : post) {
    if (v != tree.root) {
      red.add(static_cast<qubit_t>(tree.parent[v]), v);
    }
  }
}

inline std::size_t fill_and_remove_cost(ParityMap const& m, RootedTree const& tree, std::uint64_t bit) {
  std::size_t cost = tree.preorder.size() - 1;
  for (auto v : tree.preorder) {
    if (v != tree.root && !(m.row(v) & bit)) {
      ++cost;
    }
  }
  return cost;
}

inline void lower_phase(RowReducer& red, Architecture const& arch) {
  auto& m = red.map();
  auto const q = static_cast<qubit_t>(m.size());
  for (qubit_t c = 0; c < q; ++c) {
    auto const bit = std::uint64_t{1} << c;
    std::vector<qubit_t> ones;
    for (auto r = c + 1; r < q; ++r) {
      if (m.row(r) & bit) {
        ones.push_back(r);
      }
    }
    bool const pivot_set = (m.row(c) & bit) != 0;
    if (ones.empty()) {
      if (!pivot_set) {
        throw_singular();
      }
      continue;
    }
    bool const reachable = std::all_of(ones.begin(), ones.end(), [&](qubit_t r) {
      return arch.distance_within(c, c, r) != Architecture::unreachable;
    });
    if (reachable) {
      auto terminals = ones;
      terminals.push_back(c);
      auto const tree = terminal_tree(arch, terminals, c, c);
      fill_and_remove(red, RootedTree(q, tree.edges, c), bit);
      continue;
    }
    if (!pivot_set) {
      // borrow the closest row carrying the bit, then clear it again below
      auto const donor = *std::min_element(ones.begin(), ones.end(), [&](qubit_t a, qubit_t b) {
        return std::pair{arch.distance(c, a), a} < std::pair{arch.distance(c, b), b};
      });
      fan_out_rows(red, arch, donor, {c});
    }
    fan_out_rows(red, arch, c, ones);
  }
}

inline void upper_phase(RowReducer& red, Architecture const& arch) {
  auto& m = red.map();
  auto const q = static_cast<qubit_t>(m.size());
  for (auto c = static_cast<int>(q) - 1; c >= 0; --c) {
    auto const pivot = static_cast<qubit_t>(c);
    auto const bit = std::uint64_t{1} << pivot;
    std::vector<qubit_t> ones;
    for (qubit_t r = 0; r < pivot; ++r) {
      if (m.row(r) & bit) {
        ones.push_back(r);
      }
    }
    if (ones.empty()) {
      continue;
    }
    auto terminals = ones;
    terminals.push_back(pivot);
    auto const tree = terminal_tree(arch, terminals, pivot);
    RootedTree const rooted(q, tree.edges, pivot);
    bool const descending = std::all_of(rooted.preorder.begin(), rooted.preorder.end(), [&](qubit_t v) {
      return v == pivot || static_cast<int>(v) < rooted.parent[v];
    });
    auto fan_out = clean_fan_out(rooted, terminal_mask(q, terminals));
    if (descending && fill_and_remove_cost(m, rooted, bit) <= fan_out.size()) {
      fill_and_remove(red, rooted, bit);
    } else {
      for (auto const& g : fan_out) {
        red.add(g.control, g.target);
      }
    }
  }
}

} // namespace detail

/// Architecture-unaware Gauss-Jordan with row additions only.
inline std::vector<CnotOp> gauss_cnots(ParityMap const& m) {
  detail::RowReducer red(m);
  auto const q = static_cast<qubit_t>(m.size());
  for (qubit_t c = 0; c < q; ++c) {
    auto const bit = std::uint64_t{1} << c;
    if (!(red.map().row(c) & bit)) {
      qubit_t r = c + 1;
      while (r < q && !(red.map().row(r) & bit)) {
        ++r;
      }
      if (r == q) {
        detail::throw_singular();
      }
      red.add(r, c);
    }
    for (qubit_t r = 0; r < q; ++r) {
      if (r != c && (red.map().row(r) & bit)) {
        red.add(c, r);
      }
    }
  }
  return std::move(red).into_circuit();
}

/// Architecture-aware synthesis; every returned CNOT is a coupling edge and
/// replaying the list from the identity gives back `m`.
inline std::vector<CnotOp> steiner_gauss(ParityMap const& m, Architecture const& arch) {
  if (m.size() != arch.num_qubits()) {
    throw std::invalid_argument("parity map and architecture sizes differ");
  }
  detail::RowReducer red(m);
  detail::lower_phase(red, arch);
  detail::upper_phase(red, arch);
  return std::move(red).into_circuit();
}

/// Number of CNOTs `steiner_gauss` emits for the map.
inline std::size_t cnot_cost(ParityMap const& m, Architecture const& arch) { return steiner_gauss(m, arch).size(); }

} // namespace zxsynth
