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
#include <limits>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "sqisw/matcore.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {
namespace {

double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

TEST_CASE("gate constants and products") {
  CHECK(max_diff(gates::SQISW() * gates::SQISW(), gates::ISWAP()) < 1e-14);
  CHECK(max_diff(gates::CNOT() * gates::CNOT(), Matrix::Identity(4, 4)) <
        1e-14);
  const Matrix u = haar_random_unitary(4, 3).matrix();
  CHECK(max_diff(u * Matrix::Identity(4, 4), u) == 0.0);
  CHECK(max_diff(gates::SQISW().adjoint() * gates::SQISW(),
                 Matrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("tensor and commutation with Z(x)Z") {
  const UnitaryMatrix i2 = UnitaryMatrix::unchecked(gates::I2());
  CHECK(max_diff(tensor(i2, i2).matrix(), Matrix::Identity(4, 4)) == 0.0);
  const Matrix zz =
      tensor(UnitaryMatrix::unchecked(gates::Z()), UnitaryMatrix::unchecked(gates::Z()))
          .matrix();
  CHECK(max_diff(zz * gates::SQISW(), gates::SQISW() * zz) < 1e-14);
}

TEST_CASE("mixed product law on random 2x2 blocks") {
  for (uint64_t s = 0; s < 5; ++s) {
    const Matrix a = haar_random_unitary(2, 10 + s).matrix();
    const Matrix b = haar_random_unitary(2, 20 + s).matrix();
    const Matrix c = haar_random_unitary(2, 30 + s).matrix();
    const Matrix d = haar_random_unitary(2, 40 + s).matrix();
    auto kron = [](const Matrix& x, const Matrix& y) {
      return tensor(UnitaryMatrix::unchecked(x), UnitaryMatrix::unchecked(y))
          .matrix();
    };
    const Matrix lhs = kron(a, b) * kron(c, d);
    const Matrix rhs = kron(a * c, b * d);
    CHECK(max_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("error metric") {
  const Matrix u = haar_random_unitary(4, 5).matrix();
  CHECK(error_metric(u, u) == doctest::Approx(0.0).epsilon(1e-12));
  const Complex phase = std::exp(Complex(0.0, 1.234));
  CHECK(error_metric(u, (phase * u).eval()) < 1e-12);
  // |tr CNOT| = 2 at dimension 4.
  CHECK(error_metric(Matrix::Identity(4, 4), gates::CNOT()) ==
        doctest::Approx(0.5));
  const Matrix v = haar_random_unitary(4, 6).matrix();
  CHECK(error_metric(u, v) == doctest::Approx(error_metric(v, u)));
}

TEST_CASE("checked unitarity constructor") {
  CHECK_THROWS_AS(UnitaryMatrix{(Matrix::Identity(4, 4) * 2.0).eval()},
                  std::invalid_argument);
  CHECK_NOTHROW(UnitaryMatrix{gates::CNOT()});
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(UnitaryMatrix{bad}, std::invalid_argument);
}

TEST_CASE("haar sampling: unitary, reproducible, special") {
  const Matrix u1 = haar_random_unitary(8, 42).matrix();
  const Matrix u2 = haar_random_unitary(8, 42).matrix();
  CHECK(max_diff(u1, u2) == 0.0);
  CHECK(unitarity_defect(u1) < 1e-12);
  CHECK(std::abs(u1.determinant() - Complex(1.0, 0.0)) < 1e-10);
  const Matrix u3 = haar_random_unitary(8, 43).matrix();
  CHECK(error_metric(u1, u3) > 1e-6);
}

TEST_CASE("haar moment |U_00|^2 has mean 1/dim") {
  // |U_00|^2 ~ Beta(1, dim-1): mean 1/4, variance 3/80 at dim 4.
  const int samples = 10000;
  double sum = 0.0;
  for (int s = 0; s < samples; ++s)
    sum += std::norm(haar_random_unitary(4, 1000 + s).matrix()(0, 0));
  const double mean = sum / samples;
  const double sigma = std::sqrt((3.0 / 80.0) / samples);
  CHECK(std::abs(mean - 0.25) < 3.0 * sigma);
}

TEST_CASE("rzz is the displayed diagonal") {
  const double t = 0.773;
  const Matrix r = gates::rzz(t);
  const Complex lo = std::exp(Complex(0.0, -t / 2.0));
  const Complex hi = std::exp(Complex(0.0, t / 2.0));
  CHECK(std::abs(r(0, 0) - lo) < 1e-15);
  CHECK(std::abs(r(1, 1) - hi) < 1e-15);
  CHECK(std::abs(r(2, 2) - hi) < 1e-15);
  CHECK(std::abs(r(3, 3) - lo) < 1e-15);
  CHECK(r.cwiseAbs().sum() == doctest::Approx(4.0));
}

TEST_CASE("matrix json round trip and unitarity gate") {
  const Matrix u = haar_random_unitary(4, 9).matrix();
  std::stringstream ss;
  write_matrix_json(ss, u);
  const Matrix back = read_matrix_json(ss.str());
  CHECK(max_diff(u, back) < 1e-15);

  std::stringstream bad;
  write_matrix_json(bad, (2.0 * u).eval());
  CHECK_THROWS_AS(read_matrix_json(bad.str()), std::invalid_argument);
  CHECK_NOTHROW(read_matrix_json(bad.str(), true));
}

TEST_CASE("phase aligned distance") {
  const Matrix u = haar_random_unitary(4, 12).matrix();
  const Complex g = std::exp(Complex(0.0, 0.37));
  double phase = 0.0;
  CHECK(phase_aligned_distance(u, (g * u).eval(), &phase) < 1e-12);
  CHECK(std::abs(std::exp(Complex(0.0, phase)) * g - Complex(1.0, 0.0)) <
        1e-9);
}

}  // namespace
}  // namespace sqisw
