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

#include "sqisw/matcore.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {

using std::numbers::pi;
namespace {
constexpr Complex kI{0.0, 1.0};
}

double unitarity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return 1.0;
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("UnitaryMatrix: matrix must be square");
  }
  if (!m_.allFinite()) {
    throw std::invalid_argument("UnitaryMatrix: non-finite entries");
  }
  const double defect = unitarity_defect(m_);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "UnitaryMatrix: unitarity defect " << defect << " exceeds " << tol;
    throw std::invalid_argument(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::unchecked(Matrix m) {
  UnitaryMatrix u;
  u.m_ = std::move(m);
  return u;
}

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  return UnitaryMatrix::unchecked(a.matrix() * b.matrix());
}

UnitaryMatrix dagger(const UnitaryMatrix& a) {
  return UnitaryMatrix::unchecked(a.matrix().adjoint());
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const auto da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return UnitaryMatrix::unchecked(std::move(out));
}

double error_metric(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("error_metric: dimension mismatch");
  }
  const Complex t = (u.adjoint() * v).trace();
  double e = 1.0 - std::abs(t) / static_cast<double>(u.rows());
  return e < 0.0 ? 0.0 : e;
}

double error_metric(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  return error_metric(u.matrix(), v.matrix());
}

double phase_aligned_distance(const Matrix& u, const Matrix& v,
                              double* phase) {
  const Complex t = (v.adjoint() * u).trace();
  const double phi = std::abs(t) > 0 ? std::arg(t) : 0.0;
  if (phase != nullptr) *phase = phi;
  return (u - std::exp(kI * phi) * v).cwiseAbs().maxCoeff();
}

UnitaryMatrix haar_random_unitary(int dim, uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("haar_random_unitary: dim < 1");
  Rng rng(seed);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: make R's diagonal real positive so Q is Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  // Normalize to SU(dim) with the principal root of the determinant.
  const Complex det = q.determinant();
  q *= std::exp(-kI * (std::arg(det) / dim));
  return UnitaryMatrix(std::move(q), 1e-12);
}

namespace gates {

namespace {
Matrix make2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

const Matrix& I2() {
  static const Matrix m = Matrix::Identity(2, 2);
  return m;
}
const Matrix& X() {
  static const Matrix m = make2(0, 1, 1, 0);
  return m;
}
const Matrix& Y() {
  static const Matrix m = make2(0, -kI, kI, 0);
  return m;
}
const Matrix& Z() {
  static const Matrix m = make2(1, 0, 0, -1);
  return m;
}
const Matrix& H() {
  static const Matrix m = make2(1, 1, 1, -1) / std::sqrt(2.0);
  return m;
}
const Matrix& S() {
  static const Matrix m = make2(1, 0, 0, kI);
  return m;
}
const Matrix& CNOT() {
  static const Matrix m = [] {
    Matrix c = Matrix::Identity(4, 4);
    c(2, 2) = c(3, 3) = 0;
    c(2, 3) = c(3, 2) = 1;
    return c;
  }();
  return m;
}
const Matrix& CZ() {
  static const Matrix m = [] {
    Matrix c = Matrix::Identity(4, 4);
    c(3, 3) = -1;
    return c;
  }();
  return m;
}
const Matrix& SWAP() {
  static const Matrix m = [] {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = c(3, 3) = 1;
    c(1, 2) = c(2, 1) = 1;
    return c;
  }();
  return m;
}
const Matrix& ISWAP() {
  static const Matrix m = [] {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = c(3, 3) = 1;
    c(1, 2) = c(2, 1) = kI;
    return c;
  }();
  return m;
}
const Matrix& SQISW() {
  static const Matrix m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = c(3, 3) = 1;
    c(1, 1) = c(2, 2) = s;
    c(1, 2) = c(2, 1) = kI * s;
    return c;
  }();
  return m;
}
const Matrix& TOFFOLI() {
  static const Matrix m = [] {
    Matrix c = Matrix::Identity(8, 8);
    c(6, 6) = c(7, 7) = 0;
    c(6, 7) = c(7, 6) = 1;
    return c;
  }();
  return m;
}

Matrix rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return make2(c, -kI * s, -kI * s, c);
}
Matrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return make2(c, -s, s, c);
}
Matrix rz(double theta) {
  return make2(std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2)));
}
Matrix rzz(double theta) {
  Matrix m = Matrix::Zero(4, 4);
  const Complex lo = std::exp(-kI * (theta / 2));
  const Complex hi = std::exp(kI * (theta / 2));
  m(0, 0) = m(3, 3) = lo;
  m(1, 1) = m(2, 2) = hi;
  return m;
}

}  // namespace gates

Matrix read_matrix_json(std::istream& in, bool raw) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix json: parse error: ") +
                                e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::invalid_argument("matrix json: missing integer field 'dim'");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > (1 << 12)) {
    throw std::invalid_argument("matrix json: 'dim' out of range");
  }
  for (const char* key : {"re", "im"}) {
    if (!j.contains(key) || !j[key].is_array() ||
        static_cast<int>(j[key].size()) != dim) {
      throw std::invalid_argument(
          std::string("matrix json: field '") + key + "' must be a " +
          std::to_string(dim) + "-row array");
    }
  }
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& re_row = j["re"][i];
    const auto& im_row = j["im"][i];
    if (static_cast<int>(re_row.size()) != dim ||
        static_cast<int>(im_row.size()) != dim) {
      throw std::invalid_argument("matrix json: ragged row in 're'/'im'");
    }
    for (int k = 0; k < dim; ++k) {
      m(i, k) = Complex(re_row[k].get<double>(), im_row[k].get<double>());
    }
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix json: non-finite entry");
  }
  if (!raw) {
    const double defect = unitarity_defect(m);
    if (defect > kUnitarityTol) {
      std::ostringstream msg;
      msg << "matrix json: input is not unitary (defect " << defect
          << "); pass --raw to accept";
      throw std::invalid_argument(msg.str());
    }
  }
  return m;
}

Matrix read_matrix_json(const std::string& text, bool raw) {
  std::istringstream in(text);
  return read_matrix_json(in, raw);
}

void write_matrix_json(std::ostream& out, const Matrix& m) {
  nlohmann::json j;
  j["dim"] = m.rows();
  auto re = nlohmann::json::array();
  auto im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto re_row = nlohmann::json::array();
    auto im_row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  out << j.dump(2) << "\n";
}

}  // namespace sqisw
