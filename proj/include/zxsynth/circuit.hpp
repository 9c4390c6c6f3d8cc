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
  \file circuit.hpp
  \brief Gate-level circuits over {CX, RZ, RX}, gadget emitters, region
         lowering and OpenQASM 2.0 export/import.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arch.hpp"
#include "parity.hpp"
#include "poly.hpp"
#include "region.hpp"

namespace zxsynth {

enum class GateKind : std::uint8_t { CX, RZ, RX };

struct Gate {
  GateKind kind = GateKind::CX;
  qubit_t qubit = 0;  ///< control for CX, the rotated wire otherwise
  qubit_t target = 0; ///< CX only
  Phase phase;        ///< rotations only

  static Gate cx(qubit_t control, qubit_t target) { return {GateKind::CX, control, target, {}}; }
  static Gate rz(Phase phase, qubit_t q) { return {GateKind::RZ, q, 0, phase}; }
  static Gate rx(Phase phase, qubit_t q) { return {GateKind::RX, q, 0, phase}; }

  bool operator==(Gate const&) const = default;
};

struct Circuit {
  std::size_t num_qubits = 1;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t q, std::vector<Gate> g = {}) : num_qubits(q), gates(std::move(g)) {}

  void append(Circuit const& other) { gates.insert(gates.end(), other.gates.begin(), other.gates.end()); }

  bool operator==(Circuit const&) const = default;
};

inline std::size_t cnot_count(Circuit const& c) {
  return static_cast<std::size_t>(
      std::count_if(c.gates.begin(), c.gates.end(), [](Gate const& g) { return g.kind == GateKind::CX; }));
}

/// Percentage of CNOTs saved relative to the naive circuit; positive is better.
inline double reduction(std::size_t cx_naive, std::size_t cx_out) {
  if (cx_naive == 0) {
    throw std::invalid_argument("reduction is undefined for a naive CNOT count of zero");
  }
  return 100.0 * (static_cast<double>(cx_naive) - static_cast<double>(cx_out)) / static_cast<double>(cx_naive);
}

/// Returns the first broken invariant, if any.
inline std::optional<std::string> check_circuit(Circuit const& c) {
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    auto const& g = c.gates[i];
    if (g.qubit >= c.num_qubits || (g.kind == GateKind::CX && g.target >= c.num_qubits)) {
      return "qubit out of range in gate " + std::to_string(i);
    }
    if (g.kind == GateKind::CX && g.qubit == g.target) {
      return "CNOT with control == target in gate " + std::to_string(i);
    }
  }
  return std::nullopt;
}

/// Every CNOT lies on a coupling edge.
inline bool respects_architecture(Circuit const& c, Architecture const& arch) {
  return std::all_of(c.gates.begin(), c.gates.end(),
                     [&](Gate const& g) { return g.kind != GateKind::CX || arch.adjacent(g.qubit, g.target); });
}

/// CNOT(control, target) on coupling edges only. Adjacent pairs cost one
/// gate; at distance d the path v0..vd is swept twice, 4(d-1) gates.
inline void emit_routed_cnot(Architecture const& arch, qubit_t control, qubit_t target, std::vector<Gate>& out) {
  auto const path = arch.shortest_path(control, target);
  auto const d = path.size() - 1;
  if (d == 1) {
    out.push_back(Gate::cx(control, target));
    return;
  }
  auto hop = [&](std::size_t i) { out.push_back(Gate::cx(path[i], path[i + 1])); };
  for (std::size_t i = 0; i < d; ++i) {
    hop(i);
  }
  for (std::size_t i = d - 1; i-- > 0;) {
    hop(i);
  }
  for (std::size_t i = 1; i < d; ++i) {
    hop(i);
  }
  for (std::size_t i = d - 1; i-- > 1;) {
    hop(i);
  }
}

namespace detail {

inline Gate rotation(PhaseGadget const& g, qubit_t q) {
  return g.basis == Basis::Z ? Gate::rz(g.phase, q) : Gate::rx(g.phase, q);
}

/// ladder, rotation, mirrored ladder
inline Circuit mirrored(std::size_t q, std::vector<Gate> ladder, Gate const& rot) {
  Circuit c(q, ladder);
  c.gates.push_back(rot);
  c.gates.insert(c.gates.end(), ladder.rbegin(), ladder.rend());
  return c;
}

} // namespace detail

/// The textbook ladder over ascending legs, rotation on the last leg, each
/// logical CNOT routed along a shortest path. X gadgets use the
/// Hadamard-conjugated ladder, i.e. every CNOT reversed.
inline Circuit naive_gadget_circuit(PhaseGadget const& g, Architecture const& arch) {
  auto const legs = g.legs.to_vector();
  if (legs.empty()) {
    throw std::invalid_argument("gadget without legs");
  }
  std::vector<Gate> ladder;
  for (std::size_t i = 0; i + 1 < legs.size(); ++i) {
    if (g.basis == Basis::Z) {
      emit_routed_cnot(arch, legs[i], legs[i + 1], ladder);
    } else {
      emit_routed_cnot(arch, legs[i + 1], legs[i], ladder);
    }
  }
  return detail::mirrored(arch.num_qubits(), std::move(ladder), detail::rotation(g, legs.back()));
}

inline Circuit naive_circuit(ZXPolynomial const& p, Architecture const& arch) {
  Circuit c(p.num_qubits);
  for (auto const& g : p.gadgets) {
    c.append(naive_gadget_circuit(g, arch));
  }
  return c;
}

/// Leg with the smallest eccentricity inside the tree; ties go to the lower index.
inline qubit_t central_leg(std::size_t q, std::vector<Edge> const& tree_edges, std::vector<qubit_t> const& legs) {
  std::vector<std::vector<qubit_t>> adj(q);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  qubit_t best = legs.front();
  auto best_ecc = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(q);
  for (auto s : legs) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::vector<qubit_t> frontier{s};
    dist[s] = 0;
    std::size_t ecc = 0;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      auto const u = frontier[k];
      ecc = std::max(ecc, dist[u]);
      for (auto w : adj[u]) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          frontier.push_back(w);
        }
      }
    }
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = s;
    }
  }
  return best;
}

/// Tree-based emission: XOR the leg parities into the root along the
/// gadget's Steiner tree, rotate, then mirror. Non-leg relay vertices send
/// their own value twice so it cancels.
inline Circuit steiner_gadget_circuit(PhaseGadget const& g, Architecture const& arch,
                                      std::optional<qubit_t> root = std::nullopt) {
  auto const legs = g.legs.to_vector();
  if (legs.empty()) {
    throw std::invalid_argument("gadget without legs");
  }
  auto const q = arch.num_qubits();
  if (legs.size() == 1) {
    return Circuit(q, {detail::rotation(g, legs.front())});
  }
  auto const tree = terminal_tree(arch, legs);
  auto const r = root.value_or(central_leg(q, tree.edges, legs));
  if (!g.legs.contains(r)) {
    throw std::invalid_argument("rotation root must be a leg");
  }
  RootedTree const rooted(q, tree.edges, r);
  std::vector<bool> is_leg(q, false);
  for (auto l : legs) {
    is_leg[l] = true;
  }
  std::vector<Gate> ladder;
  for (auto [from, to] : accumulate_sweep(rooted, is_leg)) {
    ladder.push_back(g.basis == Basis::Z ? Gate::cx(from, to) : Gate::cx(to, from));
  }
  return detail::mirrored(q, std::move(ladder), detail::rotation(g, r));
}

/// Parity regions through Steiner-Gauss, gadget regions gadget by gadget.
inline Circuit lower_regions(std::vector<Region> const& regions, Architecture const& arch) {
  Circuit c(arch.num_qubits());
  for (auto const& region : regions) {
    if (region_qubits(region) != arch.num_qubits()) {
      throw std::invalid_argument("region size does not match the architecture");
    }
    if (auto const* m = std::get_if<ParityMap>(&region)) {
      for (auto const& cx : steiner_gauss(*m, arch)) {
        c.gates.push_back(Gate::cx(cx.control, cx.target));
      }
    } else {
      for (auto const& g : std::get<ZXPolynomial>(region).gadgets) {
        c.append(steiner_gadget_circuit(g, arch));
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- QASM

inline std::string format_angle(Phase const& p) {
  std::ostringstream os;
  os << std::setprecision(12) << p.radians();
  return os.str();
}

inline std::string to_qasm(Circuit const& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits << "];\n";
  for (auto const& g : c.gates) {
    switch (g.kind) {
    case GateKind::CX:
      os << "cx q[" << g.qubit << "],q[" << g.target << "];\n";
      break;
    case GateKind::RZ:
      os << "rz(" << format_angle(g.phase) << ") q[" << g.qubit << "];\n";
      break;
    case GateKind::RX:
      os << "rx(" << format_angle(g.phase) << ") q[" << g.qubit << "];\n";
      break;
    }
  }
  return os.str();
}

namespace detail {

/// Best rational approximation of x with a bounded denominator.
inline Phase phase_from_pi_units(double x) {
  constexpr std::int64_t max_den = 1 << 20;
  auto const sign = x < 0 ? -1 : 1;
  auto v = std::abs(x);
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    auto const a = static_cast<std::int64_t>(std::floor(v));
    auto const p2 = a * p1 + p0;
    auto const q2 = a * q1 + q0;
    if (q2 > max_den) {
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    auto const frac = v - static_cast<double>(a);
    if (frac < 1e-12 || std::abs(static_cast<double>(p1) / static_cast<double>(q1) - std::abs(x)) < 1e-13) {
      break;
    }
    v = 1.0 / frac;
  }
  if (q1 == 0 || std::abs(static_cast<double>(p1) / static_cast<double>(q1) - std::abs(x)) > 1e-9) {
    throw std::invalid_argument("angle is not a rational multiple of pi");
  }
  return {sign * p1, q1};
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

/// Accepts a decimal in radians or a simple pi expression such as
/// `pi/4`, `-3*pi/8`, `0.5*pi`.
inline Phase parse_angle(std::string_view text) {
  auto s = std::string(trim(text));
  auto const pi_pos = s.find("pi");
  try {
    if (pi_pos == std::string::npos) {
      return phase_from_pi_units(std::stod(s) / std::numbers::pi);
    }
    double factor = 1.0;
    auto head = std::string(trim(std::string_view(s).substr(0, pi_pos)));
    if (!head.empty() && head.back() == '*') {
      head.pop_back();
    }
    if (head == "-") {
      factor = -1.0;
    } else if (!head.empty() && head != "+") {
      factor = std::stod(head);
    }
    auto tail = std::string(trim(std::string_view(s).substr(pi_pos + 2)));
    if (!tail.empty()) {
      if (tail.front() != '/') {
        throw std::invalid_argument("bad angle");
      }
      factor /= std::stod(tail.substr(1));
    }
    return phase_from_pi_units(factor);
  } catch (std::logic_error const&) {
    throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
  }
}

inline qubit_t parse_qubit_ref(std::string_view ref) {
  ref = trim(ref);
  auto const open = ref.find('[');
  auto const close = ref.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw std::invalid_argument("malformed qubit reference '" + std::string(ref) + "'");
  }
  return static_cast<qubit_t>(std::stoul(std::string(ref.substr(open + 1, close - open - 1))));
}

} // namespace detail

/// Reads the subset of OpenQASM 2.0 that `to_qasm` writes.
inline Circuit from_qasm(std::string_view text) {
  Circuit c;
  bool have_register = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto const end = text.find(';', pos);
    auto stmt = detail::trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    pos = end == std::string_view::npos ? text.size() : end + 1;
    // drop line comments
    while (stmt.starts_with("//")) {
      auto const nl = stmt.find('\n');
      stmt = nl == std::string_view::npos ? std::string_view{} : detail::trim(stmt.substr(nl + 1));
    }
    if (stmt.empty() || stmt.starts_with("OPENQASM") || stmt.starts_with("include")) {
      continue;
    }
    if (stmt.starts_with("qreg")) {
      if (have_register) {
        throw std::invalid_argument("only one quantum register is supported");
      }
      c.num_qubits = detail::parse_qubit_ref(stmt.substr(4)) ;
      have_register = true;
      continue;
    }
    if (!have_register) {
      throw std::invalid_argument("gate before qreg declaration");
    }
    if (stmt.starts_with("cx")) {
      auto const args = stmt.substr(2);
      auto const comma = args.find(',');
      if (comma == std::string_view::npos) {
        throw std::invalid_argument("cx needs two operands");
      }
      c.gates.push_back(Gate::cx(detail::parse_qubit_ref(args.substr(0, comma)), detail::parse_qubit_ref(args.substr(comma + 1))));
      continue;
    }
    if (stmt.starts_with("rz") || stmt.starts_with("rx")) {
      auto const open = stmt.find('(');
      auto const close = stmt.rfind(')');
      if (open == std::string_view::npos || close == std::string_view::npos) {
        throw std::invalid_argument("rotation needs an angle");
      }
      auto const phase = detail::parse_angle(stmt.substr(open + 1, close - open - 1));
      auto const q = detail::parse_qubit_ref(stmt.substr(close + 1));
      c.gates.push_back(stmt[1] == 'z' ? Gate::rz(phase, q) : Gate::rx(phase, q));
      continue;
    }
    throw std::invalid_argument("unsupported statement '" + std::string(stmt) + "'");
  }
  if (auto err = check_circuit(c)) {
    throw std::invalid_argument(*err);
  }
  return c;
}

} // namespace zxsynth
