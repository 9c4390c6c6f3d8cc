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
  \file region.hpp
  \brief Alternating parity / gadget regions produced by synthesis.
*/

#pragma once

#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "parity.hpp"
#include "poly.hpp"

namespace zxsynth {

/// One segment of a synthesized circuit: a CNOT-only parity map or a
/// polynomial of gadgets. Lists are in temporal order.
using Region = std::variant<ParityMap, ZXPolynomial>;

inline bool is_parity(Region const& r) { return std::holds_alternative<ParityMap>(r); }
inline bool is_gadgets(Region const& r) { return std::holds_alternative<ZXPolynomial>(r); }

inline std::size_t region_qubits(Region const& r) {
  return std::visit(
      [](auto const& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ParityMap>) {
          return x.size();
        } else {
          return x.num_qubits;
        }
      },
      r);
}

/// True when the list reads Parity, Gadgets, ..., Parity over one qubit count.
inline bool is_alternating(std::vector<Region> const& regions) {
  if (regions.empty() || regions.size() % 2 == 0) {
    return false;
  }
  auto const q = region_qubits(regions.front());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (is_parity(regions[i]) != (i % 2 == 0) || region_qubits(regions[i]) != q) {
      return false;
    }
  }
  return true;
}

inline std::size_t gadget_count(std::vector<Region> const& regions) {
  std::size_t n = 0;
  for (auto const& r : regions) {
    if (auto const* p = std::get_if<ZXPolynomial>(&r)) {
      n += p->size();
    }
  }
  return n;
}

} // namespace zxsynth
