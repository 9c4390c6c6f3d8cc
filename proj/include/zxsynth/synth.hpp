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
  \file synth.hpp
  \brief Architecture-aware synthesis of ZX polynomials: cost model, the
         gauss and fast optimizers, regrouping and divide and conquer.
*/

#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arch.hpp"
#include "parity.hpp"
#include "poly.hpp"
#include "region.hpp"
#include "rules.hpp"

namespace zxsynth {

enum class Mode : std::uint8_t { Fast, Gauss };

inline Mode parse_mode(std::string_view s) {
  if (s == "fast" || s == "divide_fast") {
    return Mode::Fast;
  }
  if (s == "gauss" || s == "divide_gauss") {
    return Mode::Gauss;
  }
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

enum class Side : std::uint8_t { Left, Right };

/// Signed change in estimated CNOT count; negative is an improvement.
using CostDelta = std::int64_t;

/// Estimated CNOTs for one gadget: twice the weight of its terminal tree.
inline std::int64_t gadget_cost(PhaseGadget const& g, Architecture const& arch) {
  if (g.legs.size() <= 1) {
    return 0;
  }
  return 2 * static_cast<std::int64_t>(terminal_tree(arch, g.legs.to_vector()).weight);
}

/// gadget_cost memoized on the leg set.
class CostModel {
public:
  explicit CostModel(Architecture const& arch) : arch_(&arch) {}

  Architecture const& arch() const { return *arch_; }

  std::int64_t gadget(PhaseGadget const& g) const {
    auto const key = g.legs.bits();
    if (auto it = cache_.find(key); it != cache_.end()) {
      return it->second;
    }
    return cache_[key] = gadget_cost(g, *arch_);
  }

  std::int64_t poly(ZXPolynomial const& p) const {
    std::int64_t s = 0;
    for (auto const& g : p.gadgets) {
      s += gadget(g);
    }
    return s;
  }

private:
  Architecture const* arch_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> cache_;
};

inline CostDelta effect_zx(ZXPolynomial const& p, CnotOp const& cnot, CostModel const& cost) {
  require_valid(cnot, p.num_qubits);
  CostDelta delta = 0;
  for (auto const& g : p.gadgets) {
    auto const moved = propagate_cnot_gadget(g, cnot);
    if (moved.legs != g.legs) {
      delta += cost.gadget(moved) - cost.gadget(g);
    }
  }
  return delta;
}

inline CostDelta effect_zx(ZXPolynomial const& p, CnotOp const& cnot, Architecture const& arch) {
  return effect_zx(p, cnot, CostModel(arch));
}

inline ParityMap absorb(ParityMap const& m, CnotOp const& cnot, Side side) {
  return side == Side::Left ? append_cnot(m, cnot) : prepend_cnot(m, cnot);
}

/// c(P) - c(P') where P' absorbs the CNOT on the side facing the gadgets.
inline CostDelta effect_parity(ParityMap const& m, CnotOp const& cnot, Side side, Architecture const& arch) {
  return static_cast<CostDelta>(cnot_cost(m, arch)) - static_cast<CostDelta>(cnot_cost(absorb(m, cnot, side), arch));
}

/// One optimization region: a polynomial between two parity maps.
struct Triple {
  ParityMap left;
  ZXPolynomial poly;
  ParityMap right;
};

/// Inserts CNOT CNOT on both sides of the polynomial and pushes one copy
/// into each flanking map.
inline void propagate(Triple& t, CnotOp const& cnot) {
  t.left = append_cnot(t.left, cnot);
  t.poly = propagate_cnot_poly(std::move(t.poly), cnot);
  t.right = prepend_cnot(t.right, cnot);
}

namespace detail {

inline void require_same_size(Triple const& t, Architecture const& arch) {
  auto const q = arch.num_qubits();
  if (t.left.size() != q || t.right.size() != q || t.poly.num_qubits != q) {
    throw std::invalid_argument("region sizes do not match the architecture");
  }
}

} // namespace detail

/// One ascending sweep over all ordered pairs, propagating whenever the
/// estimated total CNOT count drops. effect_parity is c(P) - c(P'), the
/// opposite orientation to effect_zx, so it enters the total negated.
inline Triple optimize_gauss(Triple t, Architecture const& arch, CostModel const& cost) {
  detail::require_same_size(t, arch);
  auto const q = static_cast<qubit_t>(arch.num_qubits());
  auto left_cost = static_cast<CostDelta>(cnot_cost(t.left, arch));
  auto right_cost = static_cast<CostDelta>(cnot_cost(t.right, arch));
  for (qubit_t c = 0; c < q; ++c) {
    for (qubit_t tg = 0; tg < q; ++tg) {
      if (c == tg) {
        continue;
      }
      CnotOp const cnot{c, tg};
      auto const zx = effect_zx(t.poly, cnot, cost);
      auto const new_left = static_cast<CostDelta>(cnot_cost(append_cnot(t.left, cnot), arch));
      auto const new_right = static_cast<CostDelta>(cnot_cost(prepend_cnot(t.right, cnot), arch));
      if (zx + (new_left - left_cost) + (new_right - right_cost) < 0) {
        propagate(t, cnot);
        left_cost = new_left;
        right_cost = new_right;
      }
    }
  }
  return t;
}

inline Triple optimize_gauss(Triple t, Architecture const& arch) { return optimize_gauss(std::move(t), arch, CostModel(arch)); }

/// Propagates only when the gadget saving beats the worst-case parity
/// growth of d(c,t) on each side. Candidates come first from the CNOTs
/// that synthesize each flanking map, then from all ordered pairs.
inline Triple optimize_fast(Triple t, Architecture const& arch, CostModel const& cost) {
  detail::require_same_size(t, arch);
  auto consider = [&](CnotOp const& cnot) {
    auto const bound = -2 * static_cast<CostDelta>(arch.distance(cnot.control, cnot.target));
    if (effect_zx(t.poly, cnot, cost) < bound) {
      propagate(t, cnot);
    }
  };
  for (auto const& cnot : steiner_gauss(t.left, arch)) {
    consider(cnot);
  }
  for (auto const& cnot : steiner_gauss(t.right, arch)) {
    consider(cnot);
  }
  auto const q = static_cast<qubit_t>(arch.num_qubits());
  for (qubit_t c = 0; c < q; ++c) {
    for (qubit_t tg = 0; tg < q; ++tg) {
      if (c != tg) {
        consider({c, tg});
      }
    }
  }
  return t;
}

inline Triple optimize_fast(Triple t, Architecture const& arch) { return optimize_fast(std::move(t), arch, CostModel(arch)); }

inline Triple optimize(Triple t, Architecture const& arch, Mode mode, CostModel const& cost) {
  return mode == Mode::Fast ? optimize_fast(std::move(t), arch, cost) : optimize_gauss(std::move(t), arch, cost);
}

/// Per wire: +1 when both gadgets have a leg there, -1 otherwise.
inline int score(PhaseGadget const& a, PhaseGadget const& b, std::size_t num_qubits) {
  return 2 * static_cast<int>((a.legs & b.legs).size()) - static_cast<int>(num_qubits);
}

namespace detail {

/// Swaps neighbours i and i+1 if that is sound, adjusting phases for the
/// pi rule.
inline bool legal_swap(std::vector<PhaseGadget>& gs, std::size_t i) {
  if (commutes(gs[i], gs[i + 1])) {
    std::swap(gs[i], gs[i + 1]);
    return true;
  }
  if (auto swapped = pi_commute_swap(gs[i], gs[i + 1])) {
    gs[i] = swapped->first;
    gs[i + 1] = swapped->second;
    return true;
  }
  return false;
}

} // namespace detail

/// Insertion-sort-like pass: while the gadget after `col` scores higher
/// against the predecessor than the one at `col` does, swap them and follow
/// the displaced gadget forward.
inline ZXPolynomial regroup(ZXPolynomial p) {
  auto& gs = p.gadgets;
  auto const n = gs.size();
  auto const q = p.num_qubits;
  std::size_t col = 1;
  while (col + 1 < n) {
    auto prev = col - 1;
    auto next = col + 1;
    while (next < n && score(gs[prev], gs[col], q) < score(gs[prev], gs[next], q) && detail::legal_swap(gs, col)) {
      prev = col;
      col = next;
      next = col + 1;
    }
    ++col;
  }
  return p;
}

/// First ceil(n/2) gadgets, then the rest.
inline std::pair<ZXPolynomial, ZXPolynomial> split(ZXPolynomial const& p) {
  if (p.empty()) {
    throw std::invalid_argument("cannot split an empty polynomial");
  }
  auto const mid = static_cast<std::ptrdiff_t>((p.size() + 1) / 2);
  return {ZXPolynomial(p.num_qubits, {p.gadgets.begin(), p.gadgets.begin() + mid}),
          ZXPolynomial(p.num_qubits, {p.gadgets.begin() + mid, p.gadgets.end()})};
}

namespace detail {

/// Optimizes `poly` against its flanking maps, then recurses on halves
/// that share a fresh identity map. Returns the interior of the region
/// list; the flanking maps are updated in place.
inline std::vector<Region> refine(ParityMap& left, ZXPolynomial poly, ParityMap& right, Architecture const& arch,
                                  Mode mode, CostModel const& cost) {
  auto t = optimize({std::move(left), regroup(std::move(poly)), std::move(right)}, arch, mode, cost);
  left = std::move(t.left);
  right = std::move(t.right);
  if (t.poly.size() <= 2) {
    return {std::move(t.poly)};
  }
  auto [first, second] = split(t.poly);
  auto middle = identity_map(arch.num_qubits());
  auto tail = refine(middle, std::move(second), right, arch, mode, cost);
  auto head = refine(left, std::move(first), middle, arch, mode, cost);
  head.emplace_back(std::move(middle));
  head.insert(head.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
  return head;
}

} // namespace detail

/// Divide and conquer: returns an alternating list P0, G1, P1, ..., Gk, Pk
/// whose product equals the input polynomial.
inline std::vector<Region> synthesize(ZXPolynomial const& p, Architecture const& arch, Mode mode) {
  require_valid(p);
  if (p.num_qubits != arch.num_qubits()) {
    throw std::invalid_argument("polynomial and architecture differ in qubit count");
  }
  auto left = identity_map(p.num_qubits);
  if (p.empty()) {
    return {std::move(left)};
  }
  auto right = identity_map(p.num_qubits);
  CostModel const cost(arch);
  auto interior = detail::refine(left, p, right, arch, mode, cost);
  std::vector<Region> regions;
  regions.reserve(interior.size() + 2);
  regions.emplace_back(std::move(left));
  regions.insert(regions.end(), std::make_move_iterator(interior.begin()), std::make_move_iterator(interior.end()));
  regions.emplace_back(std::move(right));
  return regions;
}

} // namespace zxsynth
