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
  \file poly.hpp
  \brief Phase gadgets and ZX polynomials.

  A ZX polynomial is an ordered list of pure Z or pure X phase gadgets on
  q wires. Gadgets are applied left to right, so `gadgets[0]` acts first.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phase.hpp"

namespace zxsynth {

/// Upper bound on wire count; leg sets are stored in one machine word.
inline constexpr std::size_t max_qubits = 64;

using qubit_t = std::uint32_t;

/// Set of wires a gadget acts on.
class LegSet {
public:
  constexpr LegSet() = default;
  constexpr explicit LegSet(std::uint64_t bits) : bits_(bits) {}
  LegSet(std::initializer_list<qubit_t> legs) {
    for (auto l : legs) {
      set(l);
    }
  }

  static LegSet from_vector(std::vector<qubit_t> const& legs) {
    LegSet s;
    for (auto l : legs) {
      s.set(l);
    }
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(qubit_t q) const { return q < 64 && ((bits_ >> q) & 1u); }

  void set(qubit_t q) {
    if (q >= max_qubits) {
      throw std::out_of_range("leg index exceeds " + std::to_string(max_qubits));
    }
    bits_ |= std::uint64_t{1} << q;
  }
  void reset(qubit_t q) { bits_ &= ~(std::uint64_t{1} << q); }
  void flip(qubit_t q) { bits_ ^= std::uint64_t{1} << q; }

  /// Index of the highest set bit, or -1.
  int highest() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  std::vector<qubit_t> to_vector() const {
    std::vector<qubit_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<qubit_t>(std::countr_zero(b)));
    }
    return out;
  }

  LegSet operator&(LegSet o) const { return LegSet(bits_ & o.bits_); }
  LegSet operator|(LegSet o) const { return LegSet(bits_ | o.bits_); }
  LegSet operator^(LegSet o) const { return LegSet(bits_ ^ o.bits_); }
  bool operator==(LegSet const&) const = default;

private:
  std::uint64_t bits_ = 0;
};

enum class Basis : std::uint8_t { Z, X };

inline char basis_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

struct PhaseGadget {
  Basis basis = Basis::Z;
  LegSet legs;
  Phase phase;

  bool operator==(PhaseGadget const&) const = default;
};

inline PhaseGadget z_gadget(LegSet legs, Phase phase) { return {Basis::Z, legs, phase}; }
inline PhaseGadget x_gadget(LegSet legs, Phase phase) { return {Basis::X, legs, phase}; }

inline std::ostream& operator<<(std::ostream& os, PhaseGadget const& g) {
  os << basis_char(g.basis) << '{';
  bool first = true;
  for (auto l : g.legs.to_vector()) {
    os << (first ? "" : ",") << l;
    first = false;
  }
  return os << "}(" << g.phase << ')';
}

struct ZXPolynomial {
  std::size_t num_qubits = 1;
  std::vector<PhaseGadget> gadgets;

  ZXPolynomial() = default;
  explicit ZXPolynomial(std::size_t q, std::vector<PhaseGadget> gs = {}) : num_qubits(q), gadgets(std::move(gs)) {}

  std::size_t size() const { return gadgets.size(); }
  bool empty() const { return gadgets.empty(); }

  bool operator==(ZXPolynomial const&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, ZXPolynomial const& p) {
  os << "q=" << p.num_qubits << " [";
  for (std::size_t i = 0; i < p.gadgets.size(); ++i) {
    os << (i ? ", " : "") << p.gadgets[i];
  }
  return os << ']';
}

struct Violation {
  std::size_t gadget_index;
  std::string message;
};

/// Checks the polynomial invariants; returns the first violation found.
inline std::optional<Violation> validate(ZXPolynomial const& p) {
  if (p.num_qubits == 0) {
    return Violation{0, "polynomial must have at least one qubit"};
  }
  if (p.num_qubits > max_qubits) {
    return Violation{0, "too many qubits"};
  }
  auto const allowed = p.num_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.num_qubits) - 1;
  for (std::size_t i = 0; i < p.gadgets.size(); ++i) {
    auto const& g = p.gadgets[i];
    if (g.legs.empty()) {
      return Violation{i, "empty leg set at index " + std::to_string(i)};
    }
    if ((g.legs.bits() & ~allowed) != 0) {
      return Violation{i, "leg out of range at index " + std::to_string(i)};
    }
  }
  return std::nullopt;
}

inline void require_valid(ZXPolynomial const& p) {
  if (auto v = validate(p)) {
    throw std::invalid_argument(v->message);
  }
}

} // namespace zxsynth
