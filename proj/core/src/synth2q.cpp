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

#include "sqisw/synth2q.hpp"

#include <cmath>
#include <stdexcept>

#include "sqisw/optim.hpp"
#include "sqisw/weyl.hpp"

namespace sqisw {

namespace {

using optim::CircuitTemplate;
using optim::FitOptions;
using optim::FitResult;

CircuitTemplate two_qubit_template(int sqisw_count, bool trailing_diagonal) {
  CircuitTemplate t;
  t.n_qubits = 2;
  t.add_slot(0);
  t.add_slot(1);
  for (int i = 0; i < sqisw_count; ++i) {
    t.add_sqisw(0, 1);
    t.add_slot(0);
    t.add_slot(1);
  }
  if (trailing_diagonal) t.add_diagonal({0, 1});
  return t;
}

/// Fits and phase-aligns; throws when the budget is exhausted, which on a
/// feasible template means the cost classification is wrong.
Circuit fit_exact(const CircuitTemplate& t, const Matrix& target,
                  uint64_t seed, double* error_out) {
  FitOptions opts;
  opts.restarts = kSynth2qRestarts;
  opts.max_iterations = kSynth2qIterations;
  opts.tolerance = kSynth2qTol;
  opts.seed = seed;
  FitResult res = optim::fit(t, target, opts);
  if (res.error > kSynth2qTol)
    throw std::runtime_error(
        "synth2q: convergence failure (residual " + std::to_string(res.error) +
        " after restart budget); cost classification suspect");
  Circuit c = t.instantiate(res.params);
  double phase = 0.0;
  phase_aligned_distance(target, evaluate(c), &phase);
  c.global_phase += phase;
  if (error_out) *error_out = res.error;
  return c;
}

}  // namespace

Matrix DiagonalRemainderSynthesis::reconstruct() const {
  return delta * evaluate(circuit);
}

TwoQubitSynthesis synthesize_two_qubit(const UnitaryMatrix& u, uint64_t seed) {
  return synthesize_two_qubit(u.matrix(), seed);
}

TwoQubitSynthesis synthesize_two_qubit(const Matrix& u, uint64_t seed) {
  if (u.rows() != 4 || u.cols() != 4)
    throw std::invalid_argument("synthesize_two_qubit: expected 4x4");
  TwoQubitSynthesis out;
  out.sqisw_count = sqisw_cost(u);
  const CircuitTemplate t = two_qubit_template(out.sqisw_count, false);
  out.circuit = fit_exact(t, u, seed, &out.residual_error);
  return out;
}

DiagonalRemainderSynthesis synthesize_with_diagonal(const UnitaryMatrix& u,
                                                    uint64_t seed) {
  return synthesize_with_diagonal(u.matrix(), seed);
}

DiagonalRemainderSynthesis synthesize_with_diagonal(const Matrix& u,
                                                    uint64_t seed) {
  if (u.rows() != 4 || u.cols() != 4)
    throw std::invalid_argument("synthesize_with_diagonal: expected 4x4");
  // Template: 2 SQiSW with slots, then a free diagonal. Fitting recovers the
  // 2-CNOT-with-Ry core whose interaction coefficients sit on an axis.
  const CircuitTemplate t = two_qubit_template(2, true);
  DiagonalRemainderSynthesis out;
  double err = 0.0;
  Circuit full = fit_exact(t, u, seed, &err);
  out.residual_error = err;
  // The last gate is the instantiated diagonal; split it off, folding the
  // alignment phase into it so u ~ delta * evaluate(circuit) exactly.
  GatePlacement diag = full.gates.back();
  full.gates.pop_back();
  out.delta =
      std::exp(Complex(0.0, full.global_phase)) * embed_operator(
          diag.fixed, diag.targets, 2);
  full.global_phase = 0.0;
  out.circuit = std::move(full);
  return out;
}

Circuit synthesize_diagonal(const Matrix& delta, uint64_t seed) {
  if (delta.rows() != 4 || delta.cols() != 4)
    throw std::invalid_argument("synthesize_diagonal: expected 4x4");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && std::abs(delta(i, j)) > 1e-10)
        throw std::invalid_argument("synthesize_diagonal: input not diagonal");
  TwoQubitSynthesis s = synthesize_two_qubit(delta, seed);
  if (s.sqisw_count > 2)
    throw std::runtime_error(
        "synthesize_diagonal: diagonal classified outside W'");
  return s.circuit;
}

}  // namespace sqisw
