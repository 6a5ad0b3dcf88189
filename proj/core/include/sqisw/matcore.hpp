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

#ifndef SQISW_MATCORE_HPP
#define SQISW_MATCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace sqisw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for the checked-unitarity constructor.
inline constexpr double kUnitarityTol = 1e-10;

/// max-norm of U^dagger U - I.
double unitarity_defect(const Matrix& m);

/// Dense complex square matrix with a unitarity invariant checked at
/// construction. Raw (unchecked) matrices are plain Eigen matrices.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kUnitarityTol);

  /// Wraps without the unitarity check (trusted callers only).
  static UnitaryMatrix unchecked(Matrix m);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  UnitaryMatrix() = default;
  Matrix m_;
};

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b);
UnitaryMatrix dagger(const UnitaryMatrix& a);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// E(U, V) = 1 - |tr(U^dagger V)| / dim. Symmetric and invariant under a
/// global phase on either argument.
double error_metric(const Matrix& u, const Matrix& v);
double error_metric(const UnitaryMatrix& u, const UnitaryMatrix& v);

/// Smallest max-norm distance between u and e^{i phi} v over the phase phi,
/// together with the aligning phase. Used by exactness checks.
double phase_aligned_distance(const Matrix& u, const Matrix& v,
                              double* phase = nullptr);

/// Haar-random special unitary of the given dimension. Deterministic per
/// seed: complex Ginibre sample, QR with R-diagonal phase correction, then
/// determinant normalized to 1 by the principal dim-th root.
UnitaryMatrix haar_random_unitary(int dim, uint64_t seed);

namespace gates {

const Matrix& I2();
const Matrix& X();
const Matrix& Y();
const Matrix& Z();
const Matrix& H();
const Matrix& S();
const Matrix& CNOT();
const Matrix& CZ();
const Matrix& SWAP();
const Matrix& ISWAP();
const Matrix& SQISW();
const Matrix& TOFFOLI();

Matrix rx(double theta);
Matrix ry(double theta);
Matrix rz(double theta);
/// diag(e^{-i t/2}, e^{i t/2}, e^{i t/2}, e^{-i t/2})
Matrix rzz(double theta);

}  // namespace gates

/// Matrix file format: {"dim": d, "re": [[...]], "im": [[...]]}.
/// Rejects non-unitary input at kUnitarityTol unless raw is set.
Matrix read_matrix_json(std::istream& in, bool raw = false);
Matrix read_matrix_json(const std::string& text, bool raw = false);
void write_matrix_json(std::ostream& out, const Matrix& m);

}  // namespace sqisw

#endif  // SQISW_MATCORE_HPP
