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
#include <numbers>

#include <doctest.h>

#include "sqisw/rng.hpp"
#include "sqisw/toffoli.hpp"

namespace sqisw {
namespace {

constexpr double kPi = std::numbers::pi;

TEST_CASE("theta relations and the closed-form angle") {
  const double x = toffoli_theta1();
  CHECK(x == doctest::Approx(std::asin(1.0 - std::sqrt(2.0))).epsilon(1e-15));
  CHECK(x > -kPi / 2);
  CHECK(x < 0);
  const ToffoliScheme s = build_toffoli_scheme(x);
  CHECK(s.theta2 == doctest::Approx(s.theta1 + kPi / 2).epsilon(1e-15));
  CHECK(s.theta3 == doctest::Approx(s.theta1 + kPi).epsilon(1e-15));
}

TEST_CASE("scheme structure: eight sqisw on the fixed pair pattern") {
  const ToffoliScheme s = build_toffoli_scheme(0.3);
  CHECK(s.circuit.n_qubits == 3);
  const CircuitStructure got = structure_of(s.circuit);
  const CircuitStructure expect = {QubitPair(1, 2), QubitPair(0, 2),
                                   QubitPair(0, 2), QubitPair(0, 1),
                                   QubitPair(1, 2), QubitPair(1, 2),
                                   QubitPair(0, 2), QubitPair(0, 2)};
  CHECK(got == expect);
}

TEST_CASE("scheme is exactly toffoli at the solution angle") {
  const ToffoliScheme s = build_toffoli_scheme(toffoli_theta1());
  const Matrix u = evaluate(s.circuit);
  CHECK(phase_aligned_distance(u, toffoli_matrix().matrix()) < 1e-12);
}

TEST_CASE("scheme is far from toffoli away from the solution") {
  const ToffoliScheme zero = build_toffoli_scheme(0.0);
  CHECK(error_metric(evaluate(zero.circuit), toffoli_matrix().matrix()) >
        0.01);
  // Sensitivity: a 1e-3 perturbation is visible in the error metric.
  const ToffoliScheme near = build_toffoli_scheme(toffoli_theta1() + 1e-3);
  CHECK(error_metric(evaluate(near.circuit), toffoli_matrix().matrix()) >
        1e-8);
}

TEST_CASE("entry formulas match the circuit over the parameter range") {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = rng.uniform(-kPi / 2 + 1e-3, -1e-3);
    const EntryFormulaReport r = verify_entry_formulas(x);
    CHECK(r.max_formula_residual < 1e-10);
    // Off-pattern entries scale with the common factor.
    if (std::abs(r.common_factor) > 1e-6)
      CHECK(r.max_offpattern_abs <=
            r.max_offpattern_ratio * std::abs(r.common_factor) + 1e-12);
  }
}

TEST_CASE("common factor and off-pattern entries vanish at the solution") {
  const EntryFormulaReport r = verify_entry_formulas(toffoli_theta1());
  CHECK(std::abs(r.common_factor) < 1e-12);
  CHECK(r.max_offpattern_abs < 1e-10);
  CHECK(r.max_formula_residual < 1e-10);
}

TEST_CASE("toffoli matrix basics") {
  const Matrix t = toffoli_matrix().matrix();
  CHECK(std::abs(t.trace() - Complex(6.0, 0.0)) < 1e-15);
  CHECK((t * t - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(t(6, 7) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(t(7, 6) - Complex(1.0, 0.0)) < 1e-15);
}

}  // namespace
}  // namespace sqisw
