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

#include "sqisw/qsd.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {
namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return tensor(UnitaryMatrix::unchecked(a), UnitaryMatrix::unchecked(b))
      .matrix();
}

Matrix ry(double t) { return single_qubit_u(t, 0, 0); }

Matrix csd_reconstruct(const CsdResult& r) {
  return r.l.matrix() * r.ry.matrix() * r.r.matrix();
}

TEST_CASE("cosine sine decomposition on structured inputs") {
  // Block-repeated unitary: all angles 0 mod pi.
  const Matrix a = haar_random_unitary(4, 10).matrix();
  Matrix u(8, 8);
  u.setZero();
  u.topLeftCorner(4, 4) = a;
  u.bottomRightCorner(4, 4) = a;
  const CsdResult r = cosine_sine_decompose(u);
  CHECK(max_diff(csd_reconstruct(r), u) < 1e-10);
  for (double t : r.ry.angles) CHECK(std::abs(std::sin(t)) < 1e-9);

  // Ry on the top qubit: all angles equal to the rotation angle.
  const Matrix v = kron(ry(0.7), Matrix::Identity(4, 4));
  const CsdResult rv = cosine_sine_decompose(v);
  CHECK(max_diff(csd_reconstruct(rv), v) < 1e-10);
  for (double t : rv.ry.angles)
    CHECK(std::abs(std::cos(t) - std::cos(0.7)) < 1e-9);
}

TEST_CASE("cosine sine decomposition on random unitaries") {
  for (uint64_t s = 0; s < 10; ++s) {
    const Matrix u = haar_random_unitary(8, 5000 + s).matrix();
    const CsdResult r = cosine_sine_decompose(u);
    CHECK(max_diff(csd_reconstruct(r), u) < 1e-8);
    CHECK(r.l.blocks.size() == 2);
    CHECK(r.r.blocks.size() == 2);
    CHECK(unitarity_defect(r.l.blocks[0]) < 1e-10);
    CHECK(unitarity_defect(r.r.blocks[1]) < 1e-10);
  }
}

TEST_CASE("demultiplex splits a two-block multiplexor") {
  // Equal blocks: the rz angles are all congruent mod 2 pi.
  const Matrix a = haar_random_unitary(4, 20).matrix();
  const DemuxResult same = demultiplex(a, a);
  for (double t : same.rz.angles)
    CHECK(std::abs(std::sin((t - same.rz.angles[0]) / 2)) < 1e-9);

  for (uint64_t s = 0; s < 10; ++s) {
    const Matrix u1 = haar_random_unitary(4, 6000 + s).matrix();
    const Matrix u2 = haar_random_unitary(4, 7000 + s).matrix();
    const DemuxResult d = demultiplex(u1, u2);
    Multiplexor m;
    m.controls = 1;
    m.data_qubits = 2;
    m.blocks = {u1, u2};
    const Matrix rebuilt = kron(gates::I2(), d.v) * d.rz.matrix() *
                           kron(gates::I2(), d.w);
    CHECK(max_diff(rebuilt, m.matrix()) < 1e-9);
  }
}

TEST_CASE("multiplexed rotation matrix and gray-code lowering") {
  Rng rng(3);
  for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
    for (Entangler e : {Entangler::CNOT, Entangler::CZ}) {
      for (int controls : {1, 2, 3}) {
        MultiplexedRotation m;
        m.axis = axis;
        m.angles.resize(size_t{1} << controls);
        for (double& t : m.angles) t = rng.uniform(-kPi, kPi);
        const Circuit c = synthesize_multiplexed_rotation(m, e);
        CHECK(max_diff(evaluate(c), m.matrix()) < 1e-9);
        int entanglers = 0;
        for (const GatePlacement& g : c.gates)
          if (g.kind == GateKind::Fixed) ++entanglers;
        CHECK(entanglers == (1 << controls));
      }
    }
  }
}

TEST_CASE("two-angle multiplexor selects per control value") {
  // Target is qubit 0 (most significant); the control picks the angle, so
  // the matrix is sum_c kron(R(angle_c), |c><c|).
  for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
    MultiplexedRotation m;
    m.axis = axis;
    m.angles = {0.9, -0.3};
    Matrix expect = Matrix::Zero(4, 4);
    for (int c = 0; c < 2; ++c) {
      MultiplexedRotation single;
      single.axis = axis;
      single.angles = {m.angles[static_cast<size_t>(c)]};
      const Matrix r = single.matrix();
      for (int t2 = 0; t2 < 2; ++t2)
        for (int t1 = 0; t1 < 2; ++t1)
          expect(2 * t2 + c, 2 * t1 + c) = r(t2, t1);
    }
    CHECK(max_diff(m.matrix(), expect) < 1e-12);
  }
}

TEST_CASE("cz equals ry-conjugated cnot") {
  const Matrix lhs = gates::CZ();
  const Matrix rhs = kron(gates::I2(), ry(-kPi / 2)) * gates::CNOT() *
                     kron(gates::I2(), ry(kPi / 2));
  CHECK(max_diff(lhs, rhs) < 1e-15);
}

TEST_CASE("qsd synthesizes two-qubit unitaries") {
  const QsdResult r = qsd_synthesize(haar_random_unitary(4, 31));
  CHECK(r.residual_error < 1e-7);
  CHECK(r.ledger.sqisw_used <= 3);
}

TEST_CASE("qsd synthesizes three-qubit unitaries within the bound") {
  for (uint64_t s = 0; s < 3; ++s) {
    const UnitaryMatrix u = haar_random_unitary(8, 8000 + s);
    QsdOptions opts;
    const QsdResult r = qsd_synthesize(u, opts);
    CHECK(r.residual_error < 1e-7);
    CHECK(max_diff(evaluate(r.circuit), u.matrix()) < 1e-3);
    CHECK(r.ledger.sqisw_used <= implemented_bound(3, opts));
    CHECK(r.ledger.bound == implemented_bound(3, opts));

    QsdOptions plain;
    plain.cz_absorption = false;
    plain.diagonal_absorption = false;
    const QsdResult rp = qsd_synthesize(u, plain);
    CHECK(rp.residual_error < 1e-7);
    CHECK(rp.ledger.sqisw_used <= implemented_bound(3, plain));
    // Absorptions strictly reduce the count.
    CHECK(r.ledger.sqisw_used < rp.ledger.sqisw_used);

    QsdOptions cz_only;
    cz_only.diagonal_absorption = false;
    const QsdResult rc = qsd_synthesize(u, cz_only);
    CHECK(rc.ledger.sqisw_used < rp.ledger.sqisw_used);
  }
}

TEST_CASE("bound arithmetic") {
  CHECK(paper_bound(3) == Rational(24));
  CHECK(paper_bound(4) == Rational(139));
  CHECK(paper_bound(5) == Rational(647));
  // 139/192 * 4^n - 3 * 2^n + 5/3 evaluated symbolically.
  for (int n = 3; n <= 10; ++n) {
    const Rational direct = Rational(139, 192) * Rational(ipow(4, n)) -
                            Rational(3) * Rational(ipow(2, n)) +
                            Rational(5, 3);
    CHECK(paper_bound(n) == direct);
  }

  QsdOptions all;
  QsdOptions none;
  none.cz_absorption = false;
  none.diagonal_absorption = false;
  CHECK(implemented_bound(2, none) == 3);
  CHECK(implemented_bound(3, none) == 36);
  CHECK(implemented_bound(4, none) == 192);
  CHECK(implemented_bound(3, all) == 31);
  CHECK(implemented_bound(4, all) == 167);
  for (int n = 3; n <= 8; ++n)
    CHECK(implemented_bound(n, all) < implemented_bound(n, none));
}

}  // namespace
}  // namespace sqisw
