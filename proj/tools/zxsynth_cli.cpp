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

// Command-line front end: generate, simplify, synth, verify, bench.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zxsynth/json_io.hpp"
#include "zxsynth/zxsynth.hpp"

using namespace zxsynth;

namespace {

std::string read_text(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(std::string const& path, std::string const& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

bool looks_like_json(std::string const& text) {
  auto const pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

Architecture load_arch(std::string const& spec) {
  if (spec.find(':') != std::string::npos && spec.find('.') == std::string::npos) {
    return build_architecture(spec);
  }
  return arch_from_json(json::parse(read_text(spec)));
}

Circuit load_circuit(std::string const& path) {
  auto const text = read_text(path);
  return looks_like_json(text) ? circuit_from_json(json::parse(text)) : from_qasm(text);
}

template <class T>
std::vector<T> as_list(json const& j, char const* key, std::vector<T> fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  auto const& v = j.at(key);
  return v.is_array() ? v.get<std::vector<T>>() : std::vector<T>{v.get<T>()};
}

/// Grid file: lists of qubits, gadgets, max_legs and architectures (a kind
/// such as "line" is sized per point, a full descriptor such as "grid:3x3"
/// only pairs with its own size), plus an optional "maxcut" block.
BenchConfig load_grid(std::string const& path) {
  auto const j = json::parse(read_text(path));
  BenchConfig cfg;
  cfg.algorithms = as_list<std::string>(j, "algorithms", cfg.algorithms);
  cfg.reps = j.value("reps", cfg.reps);
  cfg.seed = j.value("seed", cfg.seed);
  auto const archs = as_list<std::string>(j, "architectures", {"line"});
  auto const sized = [](std::string const& kind, std::size_t q) {
    return kind.find(':') == std::string::npos ? kind + ":" + std::to_string(q) : kind;
  };
  auto const fits = [](std::string const& desc, std::size_t q) {
    try {
      return build_architecture(desc).num_qubits() == q;
    } catch (std::invalid_argument const&) {
      return false;
    }
  };
  if (j.contains("qubits")) {
    for (auto q : as_list<std::size_t>(j, "qubits", {})) {
      for (auto n : as_list<std::size_t>(j, "gadgets", {10})) {
        for (auto legs : as_list<std::size_t>(j, "max_legs", {4})) {
          for (auto const& kind : archs) {
            auto const desc = sized(kind, q);
            if (fits(desc, q)) {
              cfg.points.push_back({q, n, std::min(legs, q), desc, std::nullopt});
            }
          }
        }
      }
    }
  }
  if (j.contains("maxcut")) {
    auto const& m = j.at("maxcut");
    for (auto v : as_list<std::size_t>(m, "vertices", {})) {
      for (auto p : as_list<double>(m, "p_edge", {0.5})) {
        for (auto layers : as_list<std::size_t>(m, "layers", {1})) {
          for (auto const& kind : archs) {
            auto const desc = sized(kind, v);
            if (fits(desc, v)) {
              cfg.points.push_back({v, 0, 2, desc, MaxcutSpec{v, p, layers}});
            }
          }
        }
      }
    }
  }
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Architecture-aware synthesis of ZX polynomials"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write a random or QAOA MaxCut polynomial as JSON");
  std::size_t qubits = 4, gadgets = 10, max_legs = 4, vertices = 4, layers = 1;
  std::uint64_t seed = 0;
  double p_edge = 0.5;
  bool maxcut = false;
  std::string gen_out = "-";
  gen->add_option("--qubits", qubits);
  gen->add_option("--gadgets", gadgets);
  gen->add_option("--max-legs", max_legs);
  gen->add_option("--seed", seed);
  gen->add_flag("--maxcut", maxcut, "QAOA MaxCut ansatz on an Erdos-Renyi graph");
  gen->add_option("--vertices", vertices);
  gen->add_option("--p-edge", p_edge);
  gen->add_option("--layers", layers);
  gen->add_option("--out", gen_out);

  auto* simp = app.add_subcommand("simplify", "Peephole-simplify a polynomial");
  std::string simp_in = "-", simp_out = "-";
  simp->add_option("--in", simp_in);
  simp->add_option("--out", simp_out);

  auto* syn = app.add_subcommand("synth", "Synthesize a polynomial for an architecture");
  std::string syn_in = "-", syn_arch, syn_mode = "fast", syn_out = "-", syn_format = "qasm";
  syn->add_option("--in", syn_in);
  syn->add_option("--arch", syn_arch, "descriptor (line:4, grid:3x3) or JSON file")->required();
  syn->add_option("--mode", syn_mode)->check(CLI::IsMember({"fast", "gauss"}));
  syn->add_option("--out", syn_out);
  syn->add_option("--format", syn_format)->check(CLI::IsMember({"qasm", "json"}));

  auto* ver = app.add_subcommand("verify", "Compare a circuit against a polynomial");
  std::string ver_poly, ver_circuit;
  double tol = 1e-9;
  ver->add_option("--poly", ver_poly)->required();
  ver->add_option("--circuit", ver_circuit, "QASM or gate-list JSON")->required();
  ver->add_option("--tol", tol);

  auto* bench = app.add_subcommand("bench", "Run a benchmark grid and write CSV");
  std::string grid_path, bench_out = "-";
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> bench_seed;
  unsigned jobs = 1;
  bench->add_option("--grid", grid_path)->required();
  bench->add_option("--reps", reps);
  bench->add_option("--seed", bench_seed);
  bench->add_option("--out", bench_out);
  bench->add_option("--jobs", jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto const p = maxcut ? maxcut_qaoa(vertices, p_edge, layers, seed) : random_poly(qubits, gadgets, max_legs, seed);
      write_text(gen_out, to_json(p).dump(2) + "\n");
    } else if (*simp) {
      auto const p = poly_from_json(json::parse(read_text(simp_in)));
      write_text(simp_out, to_json(simplify(p)).dump(2) + "\n");
    } else if (*syn) {
      auto const p = poly_from_json(json::parse(read_text(syn_in)));
      auto const arch = load_arch(syn_arch);
      auto const c = lower_regions(synthesize(simplify(p), arch, parse_mode(syn_mode)), arch);
      write_text(syn_out, syn_format == "qasm" ? to_qasm(c) : to_json(c).dump(2) + "\n");
      std::cerr << "cx_naive=" << cnot_count(naive_circuit(p, arch)) << " cx_out=" << cnot_count(c) << "\n";
    } else if (*ver) {
      auto const p = poly_from_json(json::parse(read_text(ver_poly)));
      auto const c = load_circuit(ver_circuit);
      if (c.num_qubits != p.num_qubits) {
        std::cout << "fail qubit count " << c.num_qubits << " != " << p.num_qubits << "\n";
        return 1;
      }
      auto const residual = global_phase_residual(poly_unitary(p), circuit_unitary(c));
      auto const ok = residual < tol;
      std::cout << (ok ? "pass" : "fail") << " residual=" << residual << "\n";
      return ok ? 0 : 1;
    } else if (*bench) {
      auto cfg = load_grid(grid_path);
      if (reps) {
        cfg.reps = *reps;
      }
      if (bench_seed) {
        cfg.seed = *bench_seed;
      }
      cfg.jobs = jobs;
      auto const records = run_bench(cfg);
      std::ostringstream csv;
      write_csv(csv, records);
      write_text(bench_out, csv.str());
      int failures = 0;
      for (auto const& r : records) {
        if (!r.error.empty()) {
          ++failures;
          std::cerr << r.algorithm << " q=" << r.n_qubits << " n=" << r.n_pgs << " " << r.architecture
                    << " seed=" << r.seed << ": " << r.error << "\n";
        }
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
