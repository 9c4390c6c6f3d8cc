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
  \file rules.hpp
  \brief Rewrite rules on phase gadgets: CNOT conjugation, commutation,
         pi-commutation and merging.
*/

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "poly.hpp"

namespace zxsynth {

struct CnotOp {
  qubit_t control;
  qubit_t target;

  bool operator==(CnotOp const&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, CnotOp const& c) {
  return os << "CNOT(" << c.control << "," << c.target << ")";
}

inline void require_valid(CnotOp const& c, std::size_t num_qubits) {
  if (c.control == c.target || c.control >= num_qubits || c.target >= num_qubits) {
    throw std::invalid_argument("invalid CNOT for " + std::to_string(num_qubits) + " qubits");
  }
}

/// Conjugates a gadget by CNOT on both sides.
///
/// Z gadgets pick up (or drop) the control leg when the target carries a
/// leg; X gadgets do the same for the target when the control carries one.
inline PhaseGadget propagate_cnot_gadget(PhaseGadget g, CnotOp const& cnot) {
  if (g.basis == Basis::Z) {
    if (g.legs.contains(cnot.target)) {
      g.legs.flip(cnot.control);
    }
  } else if (g.legs.contains(cnot.control)) {
    g.legs.flip(cnot.target);
  }
  return g;
}

/// Conjugates every gadget. The caller absorbs the CNOT pair into the
/// flanking parity maps: append on the left one, prepend on the right one.
inline ZXPolynomial propagate_cnot_poly(ZXPolynomial p, CnotOp const& cnot) {
  require_valid(cnot, p.num_qubits);
  for (auto& g : p.gadgets) {
    g = propagate_cnot_gadget(g, cnot);
  }
  return p;
}

inline bool commutes(PhaseGadget const& a, PhaseGadget const& b) {
  return a.basis == b.basis || (a.legs & b.legs).size() % 2 == 0;
}

/// Swaps a non-commuting pair when one of them has phase pi, negating the
/// other one's phase. Input order (a, b) means a is applied first; the
/// result is the new order. When both phases are pi the left one is taken
/// as the pi carrier.
inline std::optional<std::pair<PhaseGadget, PhaseGadget>> pi_commute_swap(PhaseGadget a, PhaseGadget b) {
  if (commutes(a, b)) {
    return std::nullopt;
  }
  if (a.phase.is_pi()) {
    b.phase = -b.phase;
  } else if (b.phase.is_pi()) {
    a.phase = -a.phase;
  } else {
    return std::nullopt;
  }
  return std::pair{b, a};
}

/// Same basis and identical legs: one gadget with the summed phase.
inline std::optional<PhaseGadget> try_merge(PhaseGadget const& a, PhaseGadget const& b) {
  if (a.basis != b.basis || a.legs != b.legs) {
    return std::nullopt;
  }
  return PhaseGadget{a.basis, a.legs, a.phase + b.phase};
}

} // namespace zxsynth
