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

#ifndef SQISW_OPTIM_HPP
#define SQISW_OPTIM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"

namespace sqisw::optim {

/// Parameterized circuit template: fixed gates interleaved with
/// single-qubit ZYZ slots (3 params each) and optional diagonal slots
/// (2^arity phase params each).
struct TemplateGate {
  enum Kind { kFixed, kSlot, kDiagonal };
  Kind kind = kFixed;
  std::vector<int> targets;
  Matrix fixed;          // kFixed
  int param_offset = 0;  // kSlot / kDiagonal
};

struct CircuitTemplate {
  int n_qubits = 0;
  std::vector<TemplateGate> gates;
  int param_count = 0;

  void add_fixed(Matrix m, std::vector<int> targets);
  void add_sqisw(int i, int j);
  void add_slot(int qubit);
  void add_diagonal(std::vector<int> targets);

  Matrix evaluate(const std::vector<double>& params) const;
  /// Lowers to the circuit IR (diagonal slots become fixed gates).
  Circuit instantiate(const std::vector<double>& params) const;

  /// Template matching a structure's slot layout (initial slots plus a slot
  /// pair after every SQiSW).
  static CircuitTemplate for_structure(const CircuitStructure& s, int n_qubits);
};

/// E(target, template(params)) and its analytic gradient.
double objective_value(const CircuitTemplate& t, const Matrix& target,
                       const std::vector<double>& params);
double objective_value_and_grad(const CircuitTemplate& t, const Matrix& target,
                                const std::vector<double>& params,
                                std::vector<double>& grad);

struct MinimizeOptions {
  int max_iterations = 2000;
  double target_value = 0.0;   // stop early when reached
  double grad_tol = 1e-13;
  int history = 10;
};

struct MinimizeResult {
  double value = 0.0;
  std::vector<double> params;
  int iterations = 0;
};

/// L-BFGS with backtracking line search; monotone (never returns a value
/// above the starting one).
MinimizeResult minimize(const CircuitTemplate& t, const Matrix& target,
                        std::vector<double> x0, const MinimizeOptions& opts);

struct FitOptions {
  int restarts = 32;
  int max_iterations = 2000;
  double tolerance = 1e-9;
  uint64_t seed = 1;
};

struct FitResult {
  double error = 1.0;
  std::vector<double> params;
  int restarts_used = 0;
};

/// Seeded multi-start fit; deterministic per (seed, template, target).
/// Stops at the first restart reaching the tolerance.
FitResult fit(const CircuitTemplate& t, const Matrix& target,
              const FitOptions& opts);

}  // namespace sqisw::optim

#endif  // SQISW_OPTIM_HPP
