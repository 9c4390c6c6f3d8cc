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

// Generates a random phase-gadget polynomial, simplifies it, synthesizes it
// for a 2x3 grid in both modes and prints the CNOT counts.

#include <iostream>

#include "zxsynth/zxsynth.hpp"

int main() {
  using namespace zxsynth;
  auto const arch = build_architecture("grid:2x3");
  auto const poly = random_poly(6, 40, 4, 7);
  auto const simplified = simplify(poly);
  auto const naive = cnot_count(naive_circuit(poly, arch));
  std::cout << "gadgets: " << poly.size() << " -> " << simplified.size() << " after simplify\n";
  std::cout << "naive cx: " << naive << "\n";
  for (auto mode : {Mode::Fast, Mode::Gauss}) {
    auto const circuit = lower_regions(synthesize(simplified, arch, mode), arch);
    auto const ok = equal_up_to_global_phase(poly_unitary(poly), circuit_unitary(circuit), 1e-9);
    std::cout << (mode == Mode::Fast ? "fast " : "gauss") << " cx: " << cnot_count(circuit) << " ("
              << reduction(naive, cnot_count(circuit)) << "% fewer), equivalent: " << (ok ? "yes" : "no") << "\n";
  }
}
