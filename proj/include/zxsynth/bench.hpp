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
  \file bench.hpp
  \brief Benchmark sweeps: generate, simplify, synthesize, lower, compare
         against the naive circuit.
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arch.hpp"
#include "circuit.hpp"
#include "generators.hpp"
#include "sim.hpp"
#include "simplify.hpp"
#include "synth.hpp"

namespace zxsynth {

struct MaxcutSpec {
  std::size_t vertices = 4;
  double p_edge = 0.5;
  std::size_t layers = 1;
};

/// One grid point. Random polynomials unless `maxcut` is set.
struct BenchPoint {
  std::size_t qubits = 4;
  std::size_t n_pgs = 10;
  std::size_t max_legs = 4;
  std::string architecture = "line:4";
  std::optional<MaxcutSpec> maxcut;
};

struct BenchConfig {
  std::vector<BenchPoint> points;
  std::vector<std::string> algorithms{"divide_fast", "divide_gauss", "naive"};
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  /// Oracle check for q <= verify_max_qubits.
  std::size_t verify_max_qubits = 8;
  unsigned jobs = 1;
};

struct BenchRecord {
  std::size_t n_qubits = 0;
  std::size_t n_pgs = 0;
  std::size_t max_legs = 0;
  std::string architecture;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t cx_naive = 0;
  std::size_t cx_out = 0;
  double reduction_pct = 0.0;
  double time_s = 0.0;
  bool verified = false;  ///< an oracle check ran
  std::string error;      ///< empty on success
};

inline constexpr char const* bench_csv_header =
    "n_qubits,n_pgs,max_legs,architecture,algorithm,seed,cx_naive,cx_out,reduction_pct,time_s";

inline void write_csv(std::ostream& os, std::vector<BenchRecord> const& records) {
  os << bench_csv_header << '\n';
  for (auto const& r : records) {
    std::ostringstream red;
    red.precision(6);
    red << std::fixed << r.reduction_pct;
    std::ostringstream t;
    t.precision(6);
    t << std::fixed << r.time_s;
    os << r.n_qubits << ',' << r.n_pgs << ',' << r.max_legs << ',' << r.architecture << ',' << r.algorithm << ','
       << r.seed << ',' << r.cx_naive << ',' << r.cx_out << ',' << red.str() << ',' << t.str() << '\n';
  }
}

/// Circuit for one algorithm name: "divide_fast", "divide_gauss" or "naive".
inline Circuit run_algorithm(std::string const& algorithm, ZXPolynomial const& simplified, ZXPolynomial const& raw,
                             Architecture const& arch) {
  if (algorithm == "naive") {
    return naive_circuit(raw, arch);
  }
  return lower_regions(synthesize(simplified, arch, parse_mode(algorithm)), arch);
}

/// Runs every algorithm on one instance.
inline std::vector<BenchRecord> bench_instance(BenchPoint const& point, std::vector<std::string> const& algorithms,
                                               std::uint64_t seed, std::size_t verify_max_qubits) {
  auto const arch = build_architecture(point.architecture);
  auto const raw = point.maxcut ? maxcut_qaoa(point.maxcut->vertices, point.maxcut->p_edge, point.maxcut->layers, seed)
                                : random_poly(point.qubits, point.n_pgs, point.max_legs, seed);
  BenchRecord base;
  base.n_qubits = raw.num_qubits;
  base.n_pgs = raw.size();
  base.max_legs = point.maxcut ? 2 : point.max_legs;
  base.architecture = point.architecture;
  base.seed = seed;
  if (raw.num_qubits != arch.num_qubits()) {
    base.error = "architecture size does not match the instance";
  }
  std::vector<BenchRecord> out;
  std::optional<Unitary> expected;
  if (base.error.empty()) {
    base.cx_naive = cnot_count(naive_circuit(raw, arch));
    if (raw.num_qubits <= verify_max_qubits) {
      expected = poly_unitary(raw);
    }
  }
  auto const simplified = base.error.empty() ? simplify(raw) : raw;
  for (auto const& algorithm : algorithms) {
    auto rec = base;
    rec.algorithm = algorithm;
    if (!rec.error.empty()) {
      out.push_back(rec);
      continue;
    }
    try {
      auto const t0 = std::chrono::steady_clock::now();
      auto const circuit = run_algorithm(algorithm, simplified, raw, arch);
      rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rec.cx_out = cnot_count(circuit);
      rec.reduction_pct = rec.cx_naive == 0 ? 0.0 : reduction(rec.cx_naive, rec.cx_out);
      if (expected) {
        rec.verified = true;
        if (!respects_architecture(circuit, arch) ||
            !equal_up_to_global_phase(*expected, circuit_unitary(circuit), 1e-9)) {
          rec.error = "verification failed";
        }
      }
    } catch (std::exception const& e) {
      rec.error = e.what();
    }
    out.push_back(rec);
  }
  return out;
}

/// Records in grid order: point, then repetition, then algorithm.
/// Repetition r uses seed + r.
inline std::vector<BenchRecord> run_bench(BenchConfig const& config) {
  auto const n_tasks = config.points.size() * config.reps;
  std::vector<std::vector<BenchRecord>> results(n_tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < n_tasks; i = next++) {
      auto const& point = config.points[i / config.reps];
      auto const seed = config.seed + i % config.reps;
      try {
        results[i] = bench_instance(point, config.algorithms, seed, config.verify_max_qubits);
      } catch (std::exception const& e) {
        for (auto const& algorithm : config.algorithms) {
          BenchRecord rec;
          rec.n_qubits = point.qubits;
          rec.n_pgs = point.n_pgs;
          rec.max_legs = point.max_legs;
          rec.architecture = point.architecture;
          rec.algorithm = algorithm;
          rec.seed = seed;
          rec.error = e.what();
          results[i].push_back(rec);
        }
      }
    }
  };
  auto const jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(n_tasks, 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  std::vector<BenchRecord> records;
  for (auto& r : results) {
    records.insert(records.end(), r.begin(), r.end());
  }
  return records;
}

} // namespace zxsynth
