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
  \file json_io.hpp
  \brief JSON forms of polynomials, architectures and circuits.

  Needs nlohmann/json on the include path; the rest of the library does not.

      polynomial    {"qubits": 3, "gadgets": [{"basis": "Z", "legs": [0, 2], "phase": "1/4"}]}
      architecture  {"qubits": 3, "edges": [[0, 1], [1, 2]]}
      circuit       {"qubits": 3, "gates": [{"gate": "cx", "control": 0, "target": 1},
                                            {"gate": "rz", "qubit": 1, "phase": "1/2"}]}

  Phases are strings "num/den" in units of pi.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arch.hpp"
#include "circuit.hpp"
#include "poly.hpp"

namespace zxsynth {

using json = nlohmann::json;

inline json to_json(ZXPolynomial const& p) {
  json gadgets = json::array();
  for (auto const& g : p.gadgets) {
    gadgets.push_back({{"basis", std::string(1, basis_char(g.basis))}, {"legs", g.legs.to_vector()},
                       {"phase", g.phase.to_string()}});
  }
  return {{"qubits", p.num_qubits}, {"gadgets", std::move(gadgets)}};
}

namespace detail {

inline Phase phase_field(json const& j) {
  auto const& v = j.at("phase");
  if (v.is_string()) {
    return Phase::parse(v.get<std::string>());
  }
  if (v.is_number_integer()) {
    return {v.get<std::int64_t>(), 1};
  }
  throw std::invalid_argument("phase must be a \"num/den\" string");
}

} // namespace detail

inline ZXPolynomial poly_from_json(json const& j) {
  try {
    ZXPolynomial p(j.at("qubits").get<std::size_t>());
    for (auto const& g : j.at("gadgets")) {
      auto const basis = g.at("basis").get<std::string>();
      if (basis != "Z" && basis != "X") {
        throw std::invalid_argument("basis must be \"Z\" or \"X\"");
      }
      p.gadgets.push_back({basis == "Z" ? Basis::Z : Basis::X,
                           LegSet::from_vector(g.at("legs").get<std::vector<qubit_t>>()), detail::phase_field(g)});
    }
    require_valid(p);
    return p;
  } catch (json::exception const& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
}

inline json to_json(Architecture const& a) {
  json edges = json::array();
  for (auto [u, v] : a.edges()) {
    edges.push_back({u, v});
  }
  return {{"qubits", a.num_qubits()}, {"edges", std::move(edges)}, {"name", a.name()}};
}

/// Accepts the object form or a descriptor string such as "line:4".
inline Architecture arch_from_json(json const& j) {
  if (j.is_string()) {
    return build_architecture(j.get<std::string>());
  }
  try {
    std::vector<Edge> edges;
    for (auto const& e : j.at("edges")) {
      edges.emplace_back(e.at(0).get<qubit_t>(), e.at(1).get<qubit_t>());
    }
    return {j.at("qubits").get<std::size_t>(), edges, j.value("name", std::string("custom"))};
  } catch (json::exception const& e) {
    throw std::invalid_argument(std::string("bad architecture JSON: ") + e.what());
  }
}

inline json to_json(Circuit const& c) {
  json gates = json::array();
  for (auto const& g : c.gates) {
    switch (g.kind) {
    case GateKind::CX:
      gates.push_back({{"gate", "cx"}, {"control", g.qubit}, {"target", g.target}});
      break;
    case GateKind::RZ:
      gates.push_back({{"gate", "rz"}, {"qubit", g.qubit}, {"phase", g.phase.to_string()}});
      break;
    case GateKind::RX:
      gates.push_back({{"gate", "rx"}, {"qubit", g.qubit}, {"phase", g.phase.to_string()}});
      break;
    }
  }
  return {{"qubits", c.num_qubits}, {"gates", std::move(gates)}};
}

inline Circuit circuit_from_json(json const& j) {
  try {
    Circuit c(j.at("qubits").get<std::size_t>());
    for (auto const& g : j.at("gates")) {
      auto const kind = g.at("gate").get<std::string>();
      if (kind == "cx") {
        c.gates.push_back(Gate::cx(g.at("control").get<qubit_t>(), g.at("target").get<qubit_t>()));
      } else if (kind == "rz") {
        c.gates.push_back(Gate::rz(detail::phase_field(g), g.at("qubit").get<qubit_t>()));
      } else if (kind == "rx") {
        c.gates.push_back(Gate::rx(detail::phase_field(g), g.at("qubit").get<qubit_t>()));
      } else {
        throw std::invalid_argument("unknown gate '" + kind + "'");
      }
    }
    if (auto err = check_circuit(c)) {
      throw std::invalid_argument(*err);
    }
    return c;
  } catch (json::exception const& e) {
    throw std::invalid_argument(std::string("bad circuit JSON: ") + e.what());
  }
}

} // namespace zxsynth
