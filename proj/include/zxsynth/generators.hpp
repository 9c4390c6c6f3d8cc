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
  \file generators.hpp
  \brief Seeded benchmark instances: random ZX polynomials and MaxCut QAOA
         ansatz polynomials.
*/

#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arch.hpp"
#include "poly.hpp"

namespace zxsynth {

/// Each gadget: basis uniform in {Z, X}, 1..max_legs legs chosen uniformly,
/// phase k*pi/4 with k uniform in 1..7.
inline ZXPolynomial random_poly(std::size_t num_qubits, std::size_t n_pgs, std::size_t max_legs,
                                std::uint64_t seed) {
  if (num_qubits == 0 || num_qubits > max_qubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  if (max_legs < 1 || max_legs > num_qubits) {
    throw std::invalid_argument("max_legs must lie in [1, qubits]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> leg_count(1, max_legs);
  std::uniform_int_distribution<std::int64_t> eighth(1, 7);
  std::vector<qubit_t> wires(num_qubits);
  ZXPolynomial p(num_qubits);
  p.gadgets.reserve(n_pgs);
  for (std::size_t i = 0; i < n_pgs; ++i) {
    auto const basis = coin(rng) == 0 ? Basis::Z : Basis::X;
    auto const k = leg_count(rng);
    std::iota(wires.begin(), wires.end(), qubit_t{0});
    LegSet legs;
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, num_qubits - 1);
      std::swap(wires[j], wires[pick(rng)]);
      legs.set(wires[j]);
    }
    p.gadgets.push_back({basis, legs, Phase(eighth(rng), 4)});
  }
  return p;
}

/// Erdos-Renyi G(n, p) edge list, (i, j) with i < j in lexicographic order.
inline std::vector<Edge> erdos_renyi(std::size_t n_vertices, double p_edge, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p_edge);
  std::vector<Edge> edges;
  for (qubit_t i = 0; i < n_vertices; ++i) {
    for (qubit_t j = i + 1; j < n_vertices; ++j) {
      if (keep(rng)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

/// QAOA MaxCut ansatz without the leading Hadamards. Per layer: a ZZ
/// gadget with phase gamma for every edge, then an X gadget with phase
/// beta on every vertex; gamma and beta are k*pi/8, k in 1..15.
inline ZXPolynomial maxcut_qaoa(std::size_t n_vertices, double p_edge, std::size_t layers, std::uint64_t seed) {
  if (n_vertices < 2 || n_vertices > max_qubits) {
    throw std::invalid_argument("vertex count out of range");
  }
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (layers < 1) {
    throw std::invalid_argument("at least one layer is required");
  }
  std::mt19937_64 rng(seed);
  auto const edges = erdos_renyi(n_vertices, p_edge, rng);
  std::uniform_int_distribution<std::int64_t> sixteenth(1, 15);
  ZXPolynomial p(n_vertices);
  for (std::size_t l = 0; l < layers; ++l) {
    Phase const gamma(sixteenth(rng), 8);
    Phase const beta(sixteenth(rng), 8);
    for (auto [i, j] : edges) {
      p.gadgets.push_back(z_gadget(LegSet{i, j}, gamma));
    }
    for (qubit_t v = 0; v < n_vertices; ++v) {
      p.gadgets.push_back(x_gadget(LegSet{v}, beta));
    }
  }
  return p;
}

} // namespace zxsynth
