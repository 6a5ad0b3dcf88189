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
#include <sstream>

#include <doctest.h>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {
namespace {

double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return tensor(UnitaryMatrix::unchecked(a), UnitaryMatrix::unchecked(b))
      .matrix();
}

/// Independent oracle: permutation operator exchanging qubits p and q of an
/// n-qubit register, built by plain index arithmetic.
Matrix swap_qubits_permutation(int p, int q, int n) {
  const int dim = 1 << n;
  Matrix perm = Matrix::Zero(dim, dim);
  for (int idx = 0; idx < dim; ++idx) {
    const int bp = (idx >> (n - 1 - p)) & 1;
    const int bq = (idx >> (n - 1 - q)) & 1;
    int out = idx & ~(1 << (n - 1 - p)) & ~(1 << (n - 1 - q));
    out |= bq << (n - 1 - p);
    out |= bp << (n - 1 - q);
    perm(out, idx) = 1.0;
  }
  return perm;
}

TEST_CASE("embed adjacent pairs reduce to tensor products") {
  CHECK(max_diff(embed_two_qubit(gates::SQISW(), 0, 1, 3),
                 kron(gates::SQISW(), gates::I2())) < 1e-15);
  CHECK(max_diff(embed_two_qubit(gates::SQISW(), 1, 2, 3),
                 kron(gates::I2(), gates::SQISW())) < 1e-15);
}

TEST_CASE("embed (0,2) matches the permutation-conjugation oracle") {
  const Matrix p = swap_qubits_permutation(1, 2, 3);
  const Matrix expected = p * kron(gates::SQISW(), gates::I2()) * p;
  CHECK(max_diff(embed_two_qubit(gates::SQISW(), 0, 2, 3), expected) < 1e-15);
  const Matrix g = haar_random_unitary(4, 77).matrix();
  const Matrix expected_g = p * kron(g, gates::I2()) * p;
  CHECK(max_diff(embed_two_qubit(g, 0, 2, 3), expected_g) < 1e-14);
}

TEST_CASE("embed respects composition and symmetry") {
  const Matrix g1 = haar_random_unitary(4, 1).matrix();
  const Matrix g2 = haar_random_unitary(4, 2).matrix();
  CHECK(max_diff(embed_two_qubit(g1, 0, 2, 3) * embed_two_qubit(g2, 0, 2, 3),
                 embed_two_qubit(g1 * g2, 0, 2, 3)) < 1e-12);
  // Qubit symmetry of SQiSW: SWAP * SQISW * SWAP = SQISW.
  CHECK(max_diff(gates::SWAP() * gates::SQISW() * gates::SWAP(),
                 gates::SQISW()) < 1e-15);
  CHECK(max_diff(embed_operator(gates::SQISW(), {1, 0}, 2),
                 embed_operator(gates::SQISW(), {0, 1}, 2)) < 1e-15);
}

TEST_CASE("evaluate basics") {
  Circuit empty;
  empty.n_qubits = 3;
  CHECK(max_diff(evaluate(empty), Matrix::Identity(8, 8)) == 0.0);

  Circuit one;
  one.n_qubits = 2;
  one.gates.push_back(GatePlacement::sqisw(0, 1));
  CHECK(max_diff(evaluate(one), gates::SQISW()) < 1e-15);

  one.global_phase = 0.5;
  CHECK(max_diff(evaluate(one),
                 (std::exp(Complex(0.0, 0.5)) * gates::SQISW()).eval()) <
        1e-15);
}

TEST_CASE("evaluate applies later gates on the left") {
  Circuit c;
  c.n_qubits = 1;
  c.gates.push_back(GatePlacement::fixed_gate(gates::X(), {0}));
  c.gates.push_back(GatePlacement::fixed_gate(gates::S(), {0}));
  CHECK(max_diff(evaluate(c), gates::S() * gates::X()) < 1e-15);
}

TEST_CASE("zyz angle recovery on random SU(2)") {
  for (uint64_t s = 0; s < 20; ++s) {
    const Matrix u = haar_random_unitary(2, 100 + s).matrix();
    double th, ph, la, gp;
    zyz_angles(u, th, ph, la, gp);
    const Matrix rebuilt =
        std::exp(Complex(0.0, gp)) * single_qubit_u(th, ph, la);
    CHECK(max_diff(u, rebuilt) < 1e-12);
  }
}

TEST_CASE("instantiate and structure_of round trip") {
  const CircuitStructure s = {QubitPair(0, 1), QubitPair(1, 2),
                              QubitPair(0, 2)};
  const SlotLayout layout = SlotLayout::for_structure(s, 3);
  CHECK(layout.slot_count() == 3 + 2 * 3);
  CHECK(layout.param_count() == 3 * (3 + 2 * 3));
  std::vector<double> params(layout.param_count(), 0.0);
  const Circuit c = instantiate(s, params, layout);
  CHECK(structure_of(c) == s);
  CHECK(unitarity_defect(evaluate(c)) < 1e-12);

  // Zero rotations leave only the SQiSW placements.
  const Matrix expected = embed_two_qubit(gates::SQISW(), 0, 2, 3) *
                          embed_two_qubit(gates::SQISW(), 1, 2, 3) *
                          embed_two_qubit(gates::SQISW(), 0, 1, 3);
  CHECK(max_diff(evaluate(c), expected) < 1e-12);
}

TEST_CASE("instantiate with random parameters stays unitary") {
  Rng rng(5);
  const CircuitStructure s = {QubitPair(0, 2), QubitPair(0, 1)};
  const SlotLayout layout = SlotLayout::for_structure(s, 3);
  std::vector<double> params(layout.param_count());
  for (double& v : params)
    v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  const Circuit c = instantiate(s, params, layout);
  CHECK(structure_of(c) == s);
  CHECK(unitarity_defect(evaluate(c)) < 1e-12);
}

TEST_CASE("circuit json round trip") {
  Rng rng(6);
  const CircuitStructure s = {QubitPair(0, 1), QubitPair(1, 2)};
  const SlotLayout layout = SlotLayout::for_structure(s, 3);
  std::vector<double> params(layout.param_count());
  for (double& v : params)
    v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  Circuit c = instantiate(s, params, layout);
  c.global_phase = 0.25;

  std::stringstream ss;
  write_circuit_json(ss, c);
  const Circuit back = read_circuit_json(ss.str());
  CHECK(back.n_qubits == c.n_qubits);
  CHECK(max_diff(evaluate(back), evaluate(c)) < 1e-12);
}

TEST_CASE("qasm3 export mentions the declared gates") {
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(GatePlacement::single(0, 0.1, 0.2, 0.3));
  c.gates.push_back(GatePlacement::sqisw(0, 1));
  const std::string text = to_qasm3(c);
  CHECK(text.find("OPENQASM 3") != std::string::npos);
  CHECK(text.find("gate sqisw") != std::string::npos);
  CHECK(text.find("U(") != std::string::npos);
}

TEST_CASE("qubit pair normalization") {
  CHECK(QubitPair(2, 0) == QubitPair(0, 2));
  CHECK_THROWS_AS(QubitPair(1, 1), std::invalid_argument);
  CHECK(QubitPair(0, 1) < QubitPair(0, 2));
  CHECK(QubitPair(0, 2) < QubitPair(1, 2));
}

}  // namespace
}  // namespace sqisw
