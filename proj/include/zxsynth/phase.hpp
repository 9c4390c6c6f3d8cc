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
  \file phase.hpp
  \brief Exact rotation angles stored as rational multiples of pi.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zxsynth {

/// An angle (num/den)*pi, kept in lowest terms with num/den in [0, 2).
class Phase {
public:
  constexpr Phase() = default;

  Phase(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw std::invalid_argument("phase denominator must be non-zero");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto const g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    // reduce into [0, 2*den)
    auto const period = 2 * den;
    num %= period;
    if (num < 0) {
      num += period;
    }
    num_ = num;
    den_ = den;
  }

  static Phase zero() { return {}; }
  static Phase pi() { return {1, 1}; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == 1 && den_ == 1; }

  /// Angle in radians.
  double radians() const { return static_cast<double>(num_) / static_cast<double>(den_) * std::numbers::pi; }

  Phase operator+(Phase const& other) const {
    auto const l = std::lcm(den_, other.den_);
    return {num_ * (l / den_) + other.num_ * (l / other.den_), l};
  }

  Phase operator-() const { return {-num_, den_}; }
  Phase operator-(Phase const& other) const { return *this + (-other); }

  Phase& operator+=(Phase const& other) { return *this = *this + other; }

  bool operator==(Phase const&) const = default;

  /// "num/den" in pi units, e.g. "1/2" for pi/2.
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Parses "num/den" or a bare integer "k" (meaning k*pi).
  static Phase parse(std::string_view text) {
    auto const slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return {std::stoll(std::string(text)), 1};
      }
      return {std::stoll(std::string(text.substr(0, slash))), std::stoll(std::string(text.substr(slash + 1)))};
    } catch (std::logic_error const&) {
      throw std::invalid_argument("malformed phase '" + std::string(text) + "'");
    }
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Phase identity_phase() { return Phase::zero(); }
inline Phase add(Phase const& a, Phase const& b) { return a + b; }
inline Phase negate(Phase const& a) { return -a; }
inline bool is_zero(Phase const& a) { return a.is_zero(); }
inline bool is_pi(Phase const& a) { return a.is_pi(); }

inline std::ostream& operator<<(std::ostream& os, Phase const& p) { return os << p.to_string() << "pi"; }

} // namespace zxsynth
