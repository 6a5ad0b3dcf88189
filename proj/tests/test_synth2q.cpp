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
#include "sqisw/synth2q.hpp"
#include "sqisw/weyl.hpp"

namespace sqisw {
namespace {

constexpr double kPi = std::numbers::pi;

Matrix kron(const Matrix& a, const Matrix& b) {
  return tensor(UnitaryMatrix::unchecked(a), UnitaryMatrix::unchecked(b))
      .matrix();
}

int count_sqisw(const Circuit& c) {
  int n = 0;
  for (const GatePlacement& g : c.gates)
    if (g.kind == GateKind::Sqisw) ++n;
  return n;
}

void check_exact(const Matrix& u, int expected_count, uint64_t seed = 7) {
  const TwoQubitSynthesis s = synthesize_two_qubit(u, seed);
  CHECK(s.sqisw_count == expected_count);
  CHECK(count_sqisw(s.circuit) == expected_count);
  CHECK(s.residual_error <= kSynth2qTol);
  CHECK((evaluate(s.circuit) - u).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("named gates synthesize at their exact cost") {
  check_exact(gates::SQISW(), 1);
  check_exact(gates::CNOT(), 2);
  check_exact(gates::CZ(), 2);
  check_exact(gates::ISWAP(), 2);
  check_exact(gates::SWAP(), 3);
  check_exact(kron(gates::H(), gates::S()), 0);
}

TEST_CASE("random two-qubit gates synthesize at sqisw_cost") {
  for (uint64_t s = 0; s < 20; ++s) {
    const Matrix u = haar_random_unitary(4, 2000 + s).matrix();
    const int cost = sqisw_cost(u);
    CHECK(cost <= 3);
    check_exact(u, cost, 100 + s);
  }
}

TEST_CASE("local sandwiches do not change the count") {
  const Matrix u = haar_random_unitary(4, 3000).matrix();
  const int cost = sqisw_cost(u);
  const Matrix a = haar_random_unitary(2, 3001).matrix();
  const Matrix b = haar_random_unitary(2, 3002).matrix();
  const Matrix sandwiched = kron(a, b) * u * kron(b, a);
  check_exact(sandwiched, cost, 9);
}

TEST_CASE("random diagonal gates sit on the x axis and cost at most 2") {
  // A 2-qubit diagonal is rzz conjugated by local Rz up to phase, so its
  // coefficients are (x, 0, 0): always inside W'.
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix delta = Matrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j)
      delta(j, j) = std::exp(Complex(0.0, rng.uniform(-kPi, kPi)));
    const InteractionCoefficients k = interaction_coefficients(delta);
    CHECK(std::abs(k.y) < 1e-8);
    CHECK(std::abs(k.z) < 1e-8);
    CHECK(sqisw_cost(delta) <= 2);
  }
}

TEST_CASE("diagonal-remainder synthesis of named and random gates") {
  std::vector<Matrix> targets = {gates::CNOT(), gates::CZ(),
                                 gates::rzz(0.9)};
  for (uint64_t s = 0; s < 10; ++s)
    targets.push_back(haar_random_unitary(4, 4000 + s).matrix());
  for (const Matrix& u : targets) {
    const DiagonalRemainderSynthesis d = synthesize_with_diagonal(u, 5);
    CHECK(d.residual_error <= kSynth2qTol);
    CHECK(count_sqisw(d.circuit) == 2);
    // delta is diagonal and unitary.
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(std::abs(d.delta(i, j)) < 1e-10);
    CHECK(unitarity_defect(d.delta) < 1e-8);
    CHECK((d.reconstruct() - u).cwiseAbs().maxCoeff() < 1e-4);
    // delta applies last: reconstruct = delta * evaluate(circuit).
    CHECK((d.delta * evaluate(d.circuit) - d.reconstruct())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("diagonal synthesis uses at most two sqisw") {
  const Circuit id_circ = synthesize_diagonal(Matrix::Identity(4, 4));
  CHECK(count_sqisw(id_circ) == 0);
  CHECK((evaluate(id_circ) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-4);

  // Rzz(pi/2) has coefficients (pi/4, 0, 0): inside W', cost 2.
  const Matrix r = gates::rzz(kPi / 2);
  const InteractionCoefficients k = interaction_coefficients(r);
  CHECK(std::abs(k.x - kPi / 4) < 1e-9);
  CHECK(std::abs(k.y) < 1e-9);
  CHECK(std::abs(k.z) < 1e-9);
  const Circuit c = synthesize_diagonal(r);
  CHECK(count_sqisw(c) <= 2);
  CHECK((evaluate(c) - r).cwiseAbs().maxCoeff() < 1e-4);

  CHECK_THROWS_AS(synthesize_diagonal(gates::CNOT()), std::invalid_argument);
}

}  // namespace
}  // namespace sqisw
