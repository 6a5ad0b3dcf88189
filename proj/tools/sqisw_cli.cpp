// Copyright 2026 The sqisw-synth Authors
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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"
#include "sqisw/numopt.hpp"
#include "sqisw/prune.hpp"
#include "sqisw/qsd.hpp"
#include "sqisw/synth2q.hpp"
#include "sqisw/toffoli.hpp"
#include "sqisw/weyl.hpp"

namespace {

using sqisw::Circuit;
using sqisw::Matrix;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;

/// Accepts a named built-in (cnot, cz, swap, iswap, sqisw, toffoli,
/// haar:<n>:<seed>) or a matrix file path.
Matrix load_matrix(const std::string& arg) {
  if (arg == "cnot") return sqisw::gates::CNOT();
  if (arg == "cz") return sqisw::gates::CZ();
  if (arg == "swap") return sqisw::gates::SWAP();
  if (arg == "iswap") return sqisw::gates::ISWAP();
  if (arg == "sqisw") return sqisw::gates::SQISW();
  if (arg == "toffoli") return sqisw::gates::TOFFOLI();
  if (arg.rfind("haar:", 0) == 0) {
    const size_t colon = arg.find(':', 5);
    if (colon == std::string::npos)
      throw std::invalid_argument("expected haar:<n>:<seed>");
    const int n = std::stoi(arg.substr(5, colon - 5));
    const uint64_t seed = std::stoull(arg.substr(colon + 1));
    if (n < 1 || n > 10) throw std::invalid_argument("haar: n out of range");
    return sqisw::haar_random_unitary(1 << n, seed).matrix();
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + arg);
  return sqisw::read_matrix_json(in);
}

void emit_circuit(const Circuit& c, const std::string& path) {
  if (path.empty()) {
    sqisw::write_circuit_json(std::cout, c);
    std::cout << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    sqisw::write_circuit_json(out, c);
    out << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"SQiSW-based quantum circuit synthesis toolkit"};
  app.require_subcommand(1);

  std::string matrix_arg, out_path, emit = "json";
  double tol = 1e-9, theta = sqisw::toffoli_theta1();
  uint64_t seed = 1;
  int restarts = 10, threads = 1, max_gates = 8, min_gates = 5, samples = 100;
  int max_n = 4;
  bool verify = false, compare_formula = false;
  bool no_cz = false, no_diag = false;

  auto* weyl = app.add_subcommand("weyl", "Interaction coefficients and cost");
  weyl->add_option("matrix", matrix_arg)->required();

  auto* synth2 = app.add_subcommand("synth2", "Exact 2-qubit synthesis");
  synth2->add_option("matrix", matrix_arg)->required();
  synth2->add_option("-o,--out", out_path, "Circuit JSON output path");
  synth2->add_option("--tol", tol);
  synth2->add_option("--seed", seed);

  auto* synth = app.add_subcommand("synth", "n-qubit synthesis via recursion");
  synth->add_option("matrix", matrix_arg)->required();
  synth->add_option("-o,--out", out_path);
  synth->add_flag("--no-cz-absorb", no_cz);
  synth->add_flag("--no-diag-absorb", no_diag);
  synth->add_option("--seed", seed);

  auto* toff = app.add_subcommand("toffoli", "8-SQiSW Toffoli scheme");
  toff->add_option("--emit", emit)->check(CLI::IsMember({"qasm", "json"}));
  toff->add_flag("--verify", verify);
  toff->add_option("--theta", theta);
  toff->add_option("-o,--out", out_path);

  auto* st = app.add_subcommand("search-toffoli", "Structure search (Toffoli)");
  st->add_option("--max-gates", max_gates)->required();
  st->add_option("--min-gates", min_gates);
  st->add_option("--restarts", restarts);
  st->add_option("--seed", seed);
  st->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* s3 = app.add_subcommand("search-3q", "Structure search (average error)");
  s3->add_option("--samples", samples)->required();
  s3->add_option("--max-gates", max_gates);
  s3->add_option("--min-gates", min_gates);
  s3->add_option("--restarts", restarts);
  s3->add_option("--seed", seed);
  s3->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Structure closure census");
  census->add_option("--max-N", max_n)->required();
  census->add_flag("--compare-formula", compare_formula);

  double search_eps = 1e-6;
  st->add_option("--eps", search_eps);
  s3->add_option("--eps", search_eps);

  CLI11_PARSE(app, argc, argv);

  if (weyl->parsed()) {
    const Matrix m = load_matrix(matrix_arg);
    const sqisw::InteractionCoefficients k =
        sqisw::interaction_coefficients(m);
    std::cout.precision(12);
    std::cout << k.x << " " << k.y << " " << k.z << "\n";
    std::cout << "w_prime " << (sqisw::in_w_prime(k) ? "true" : "false")
              << "\n";
    std::cout << "cost " << sqisw::sqisw_cost(k) << "\n";
    return kExitOk;
  }

  if (synth2->parsed()) {
    const Matrix m = load_matrix(matrix_arg);
    const sqisw::TwoQubitSynthesis s = sqisw::synthesize_two_qubit(m, seed);
    emit_circuit(s.circuit, out_path);
    std::cerr << "sqisw_count " << s.sqisw_count << "\n"
              << "residual " << s.residual_error << "\n"
              << "seed " << seed << "\n";
    return s.residual_error <= tol ? kExitOk : kExitVerifyFail;
  }

  if (synth->parsed()) {
    const Matrix m = load_matrix(matrix_arg);
    sqisw::QsdOptions opts;
    opts.cz_absorption = !no_cz;
    opts.diagonal_absorption = !no_diag;
    opts.seed = seed;
    const sqisw::QsdResult r = sqisw::qsd_synthesize(m, opts);
    emit_circuit(r.circuit, out_path);
    std::cerr << "sqisw_used " << r.ledger.sqisw_used << "\n"
              << "cnot_equivalent_saved " << r.ledger.cnot_equivalent_saved
              << "\n"
              << "bound " << r.ledger.bound << "\n"
              << "residual " << r.residual_error << "\n"
              << "seed " << seed << "\n";
    return r.ledger.sqisw_used <= r.ledger.bound ? kExitOk : kExitVerifyFail;
  }

  if (toff->parsed()) {
    const sqisw::ToffoliScheme s = sqisw::build_toffoli_scheme(theta);
    if (verify) {
      double phase = 0.0;
      const double dist = sqisw::phase_aligned_distance(
          sqisw::gates::TOFFOLI(), sqisw::evaluate(s.circuit), &phase);
      const sqisw::EntryFormulaReport rep =
          sqisw::verify_entry_formulas(s.theta1);
      std::cout << "phase_aligned_distance " << dist << "\n"
                << "entry_formula_residual " << rep.max_formula_residual
                << "\n";
      if (dist > 1e-12) return kExitVerifyFail;
    }
    if (emit == "qasm") {
      if (out_path.empty()) {
        std::cout << sqisw::to_qasm3(s.circuit);
      } else {
        std::ofstream out(out_path);
        out << sqisw::to_qasm3(s.circuit);
      }
    } else {
      emit_circuit(s.circuit, out_path);
    }
    return kExitOk;
  }

  if (st->parsed() || s3->parsed()) {
    sqisw::OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.epsilon = search_eps;
    cfg.haar_samples = samples;
    std::cerr << "seed " << seed << "\n";
    const sqisw::SearchResult res =
        st->parsed() ? sqisw::toffoli_search(min_gates, max_gates, cfg)
                     : sqisw::average_error_search(min_gates, max_gates, cfg);
    for (const sqisw::StructureRecord& rec : res.report.records) {
      nlohmann::json j;
      j["n_gates"] = rec.n_gates;
      auto& pos = j["structure"] = nlohmann::json::array();
      for (const sqisw::QubitPair& p : rec.structure)
        pos.push_back({p.a, p.b});
      j["best_error"] = rec.best_error;
      j["restarts_used"] = rec.restarts_used;
      std::cout << j.dump() << "\n";
    }
    std::cerr << "N log10_best_E\n";
    for (int N = min_gates; N <= max_gates; ++N) {
      const double b = res.report.best_for(N);
      if (b < 1.0)
        std::cerr << N << " " << std::log10(std::max(b, 1e-300)) << "\n";
    }
    if (!res.found) return kExitNotFound;
    std::cerr << "found n_gates " << res.n_gates << " error " << res.error
              << "\n";
    if (st->parsed() && !out_path.empty()) emit_circuit(res.circuit, out_path);
    return kExitOk;
  }

  if (census->parsed()) {
    std::cout << "N total pruned";
    if (compare_formula) std::cout << " statement proof match_statement match_proof";
    std::cout << "\n";
    for (int N = 1; N <= max_n; ++N) {
      const sqisw::ClosureCensus c = sqisw::closure_census(N);
      std::cout << N << " " << sqisw::ipow(3, N) << " " << c.closure_count();
      if (compare_formula) {
        const sqisw::Rational st_v =
            sqisw::theorem3_prediction(N, sqisw::Theorem3Variant::STATEMENT);
        const sqisw::Rational pf =
            sqisw::theorem3_prediction(N, sqisw::Theorem3Variant::PROOF);
        std::cout << " " << st_v.to_string() << " " << pf.to_string() << " "
                  << (st_v == sqisw::Rational(c.closure_count()) ? "yes" : "no")
                  << " "
                  << (pf == sqisw::Rational(c.closure_count()) ? "yes" : "no");
      }
      std::cout << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
