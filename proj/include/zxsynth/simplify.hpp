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
  \file simplify.hpp
  \brief Peephole simplification: move gadgets toward merge partners, merge,
         drop zero phases, repeat until nothing changes.
*/

#pragma once

#include <algorithm>
#include <vector>

#include "poly.hpp"
#include "rules.hpp"

namespace zxsynth {

namespace detail {

/// Moves gadgets[i] left until it meets an identical-support gadget of the
/// same basis, then merges. Returns false and leaves the list untouched if
/// it is blocked first.
inline bool try_move_and_merge(std::vector<PhaseGadget>& gadgets, std::size_t i) {
  auto trial = gadgets;
  for (auto j = i; j > 0; --j) {
    auto& left = trial[j - 1];
    auto& cur = trial[j];
    if (auto merged = try_merge(left, cur)) {
      left = *merged;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
      if (left.phase.is_zero()) {
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j - 1));
      }
      gadgets = std::move(trial);
      return true;
    }
    if (commutes(left, cur)) {
      std::swap(left, cur);
    } else if (auto swapped = pi_commute_swap(left, cur)) {
      left = swapped->first;
      cur = swapped->second;
    } else {
      return false;
    }
  }
  return false;
}

} // namespace detail

inline ZXPolynomial simplify(ZXPolynomial p) {
  require_valid(p);
  auto& gs = p.gadgets;
  for (bool changed = true; changed;) {
    changed = false;
    auto const before = gs.size();
    std::erase_if(gs, [](PhaseGadget const& g) { return g.phase.is_zero(); });
    changed = gs.size() != before;
    for (std::size_t i = 1; i < gs.size();) {
      if (detail::try_move_and_merge(gs, i)) {
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return p;
}

} // namespace zxsynth
