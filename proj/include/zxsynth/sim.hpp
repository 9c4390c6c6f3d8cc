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
  \file sim.hpp
  \brief Dense-unitary oracle for small registers.

  Basis states are indexed little-endian: bit j of the index is qubit j.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "parity.hpp"
#include "poly.hpp"
#include "region.hpp"

namespace zxsynth {

/// Memory guard for dense matrices.
inline constexpr std::size_t max_sim_qubits = 12;

using cplx = std::complex<double>;

class Unitary {
public:
  explicit Unitary(std::size_t num_qubits) : q_(num_qubits) {
    if (num_qubits > max_sim_qubits) {
      throw std::invalid_argument("dense simulation limited to " + std::to_string(max_sim_qubits) + " qubits");
    }
    dim_ = std::size_t{1} << q_;
    data_.assign(dim_ * dim_, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) {
      at(i, i) = 1.0;
    }
  }

  std::size_t num_qubits() const { return q_; }
  std::size_t dim() const { return dim_; }

  cplx& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  cplx const& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::vector<cplx> const& data() const { return data_; }

  /// Row pointer, for in-place left multiplication.
  cplx* row(std::size_t r) { return data_.data() + r * dim_; }

  Unitary operator*(Unitary const& o) const {
    if (o.q_ != q_) {
      throw std::invalid_argument("unitary dimension mismatch");
    }
    Unitary out(q_);
    std::fill(out.data_.begin(), out.data_.end(), cplx{});
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        auto const a = at(i, k);
        if (a == cplx{}) {
          continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
          out.at(i, j) += a * o.at(k, j);
        }
      }
    }
    return out;
  }

  Unitary adjoint() const {
    Unitary out(q_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) = std::conj(at(j, i));
      }
    }
    return out;
  }

private:
  std::size_t q_;
  std::size_t dim_;
  std::vector<cplx> data_;
};

inline double frobenius_distance(Unitary const& a, Unitary const& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("unitary dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    s += std::norm(a.data()[i] - b.data()[i]);
  }
  return std::sqrt(s);
}

/// ||a - e^{i phi} b||_F with phi fixed by the largest entry of a.
inline double global_phase_residual(Unitary const& a, Unitary const& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("unitary dimension mismatch");
  }
  auto const& ad = a.data();
  auto const& bd = b.data();
  std::size_t k = 0;
  for (std::size_t i = 1; i < ad.size(); ++i) {
    if (std::abs(ad[i]) > std::abs(ad[k])) {
      k = i;
    }
  }
  cplx phase{1.0, 0.0};
  if (std::abs(bd[k]) > 0.0) {
    phase = ad[k] / bd[k];
    phase /= std::abs(phase);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < ad.size(); ++i) {
    s += std::norm(ad[i] - phase * bd[i]);
  }
  return std::sqrt(s);
}

inline bool equal_up_to_global_phase(Unitary const& a, Unitary const& b, double tol) {
  return global_phase_residual(a, b) < tol;
}

// ---------------------------------------------------- left multiplication

inline void apply_cnot(Unitary& u, qubit_t control, qubit_t target) {
  auto const cm = std::size_t{1} << control;
  auto const tm = std::size_t{1} << target;
  for (std::size_t x = 0; x < u.dim(); ++x) {
    if ((x & cm) && !(x & tm)) {
      std::swap_ranges(u.row(x), u.row(x) + u.dim(), u.row(x | tm));
    }
  }
}

inline void apply_rz(Unitary& u, Phase const& phase, qubit_t q) {
  auto const half = phase.radians() / 2.0;
  auto const lo = std::polar(1.0, -half);
  auto const hi = std::polar(1.0, half);
  for (std::size_t x = 0; x < u.dim(); ++x) {
    auto const f = ((x >> q) & 1u) ? hi : lo;
    std::for_each(u.row(x), u.row(x) + u.dim(), [f](cplx& v) { v *= f; });
  }
}

/// exp(-i a/2 X_S) = cos(a/2) I - i sin(a/2) X_S, where X_S flips the bits in S.
inline void apply_x_string(Unitary& u, Phase const& phase, std::uint64_t legs) {
  auto const half = phase.radians() / 2.0;
  cplx const c{std::cos(half), 0.0};
  cplx const s{0.0, -std::sin(half)};
  auto const low = std::uint64_t{1} << std::countr_zero(legs);
  for (std::size_t x = 0; x < u.dim(); ++x) {
    if (x & low) {
      continue;
    }
    auto const y = x ^ legs;
    auto* rx = u.row(x);
    auto* ry = u.row(y);
    for (std::size_t j = 0; j < u.dim(); ++j) {
      auto const a = rx[j];
      auto const b = ry[j];
      rx[j] = c * a + s * b;
      ry[j] = s * a + c * b;
    }
  }
}

inline void apply_rx(Unitary& u, Phase const& phase, qubit_t q) { apply_x_string(u, phase, std::uint64_t{1} << q); }

inline void apply_z_string(Unitary& u, Phase const& phase, std::uint64_t legs) {
  auto const half = phase.radians() / 2.0;
  auto const even = std::polar(1.0, -half);
  auto const odd = std::polar(1.0, half);
  for (std::size_t x = 0; x < u.dim(); ++x) {
    auto const f = (std::popcount(x & legs) & 1) ? odd : even;
    std::for_each(u.row(x), u.row(x) + u.dim(), [f](cplx& v) { v *= f; });
  }
}

inline void apply_gadget(Unitary& u, PhaseGadget const& g) {
  if (g.legs.empty()) {
    throw std::invalid_argument("gadget without legs");
  }
  if (g.basis == Basis::Z) {
    apply_z_string(u, g.phase, g.legs.bits());
  } else {
    apply_x_string(u, g.phase, g.legs.bits());
  }
}

inline void apply_gate(Unitary& u, Gate const& g) {
  switch (g.kind) {
  case GateKind::CX:
    apply_cnot(u, g.qubit, g.target);
    break;
  case GateKind::RZ:
    apply_rz(u, g.phase, g.qubit);
    break;
  case GateKind::RX:
    apply_rx(u, g.phase, g.qubit);
    break;
  }
}

// ------------------------------------------------------------ builders

/// Built from the definition: the Z form is diagonal, the X form is the Z
/// form conjugated by Hadamards on the legs.
inline Unitary gadget_unitary(PhaseGadget const& g, std::size_t num_qubits) {
  Unitary d(num_qubits);
  auto const half = g.phase.radians() / 2.0;
  for (std::size_t x = 0; x < d.dim(); ++x) {
    auto const parity = std::popcount(x & g.legs.bits()) & 1;
    d.at(x, x) = std::polar(1.0, parity ? half : -half);
  }
  if (g.basis == Basis::Z) {
    return d;
  }
  Unitary h(num_qubits);
  auto const norm = std::pow(2.0, -0.5 * static_cast<double>(g.legs.size()));
  for (std::size_t x = 0; x < h.dim(); ++x) {
    for (std::size_t y = 0; y < h.dim(); ++y) {
      if (((x ^ y) & ~g.legs.bits()) != 0) {
        h.at(x, y) = 0.0;
        continue;
      }
      auto const sign = (std::popcount(x & y & g.legs.bits()) & 1) ? -1.0 : 1.0;
      h.at(x, y) = sign * norm;
    }
  }
  return h * d * h;
}

inline Unitary poly_unitary(ZXPolynomial const& p) {
  Unitary u(p.num_qubits);
  for (auto const& g : p.gadgets) {
    apply_gadget(u, g);
  }
  return u;
}

inline Unitary circuit_unitary(Circuit const& c) {
  Unitary u(c.num_qubits);
  for (auto const& g : c.gates) {
    apply_gate(u, g);
  }
  return u;
}

/// Permutation |x> -> |Mx> over GF(2).
inline Unitary parity_unitary(ParityMap const& m) {
  Unitary u(m.size());
  for (std::size_t x = 0; x < u.dim(); ++x) {
    u.at(x, x) = 0.0;
  }
  for (std::size_t x = 0; x < u.dim(); ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      y |= static_cast<std::size_t>(std::popcount(m.row(i) & x) & 1) << i;
    }
    u.at(y, x) = 1.0;
  }
  return u;
}

/// Product of a region list in temporal order.
inline Unitary regions_unitary(std::vector<Region> const& regions) {
  if (regions.empty()) {
    throw std::invalid_argument("empty region list");
  }
  Unitary u(region_qubits(regions.front()));
  for (auto const& r : regions) {
    if (auto const* m = std::get_if<ParityMap>(&r)) {
      u = parity_unitary(*m) * u;
    } else {
      for (auto const& g : std::get<ZXPolynomial>(r).gadgets) {
        apply_gadget(u, g);
      }
    }
  }
  return u;
}

} // namespace zxsynth
