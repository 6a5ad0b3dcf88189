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

#include "sqisw/weyl.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "sqisw/circuit.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {

using std::numbers::pi;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kQuarterPi = pi / 4.0;
constexpr double kHalfPi = pi / 2.0;

/// Magic (Bell-like) basis in which local gates become real orthogonal and
/// the canonical interaction becomes diagonal.
const Matrix& magic_basis() {
  static const Matrix q = [] {
    Matrix m(4, 4);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, 0, 0, kI * s,
         0, kI * s, s, 0,
         0, kI * s, -s, 0,
         s, 0, 0, -kI * s;
    return m;
  }();
  return q;
}

const Matrix& sigma(int axis) {
  static const Matrix xx = [] {
    return Matrix(tensor(UnitaryMatrix::unchecked(gates::X()),
                         UnitaryMatrix::unchecked(gates::X()))
                      .matrix());
  }();
  static const Matrix yy = [] {
    return Matrix(tensor(UnitaryMatrix::unchecked(gates::Y()),
                         UnitaryMatrix::unchecked(gates::Y()))
                      .matrix());
  }();
  static const Matrix zz = [] {
    return Matrix(tensor(UnitaryMatrix::unchecked(gates::Z()),
                         UnitaryMatrix::unchecked(gates::Z()))
                      .matrix());
  }();
  switch (axis) {
    case 0: return xx;
    case 1: return yy;
    default: return zz;
  }
}

/// Diagonal signs of Q^dagger sigma_axis Q; columns index the magic basis.
const std::array<std::array<double, 4>, 3>& sign_table() {
  static const std::array<std::array<double, 4>, 3> table = [] {
    std::array<std::array<double, 4>, 3> t{};
    const Matrix& q = magic_basis();
    for (int axis = 0; axis < 3; ++axis) {
      Matrix d = q.adjoint() * sigma(axis) * q;
      for (int l = 0; l < 4; ++l) {
        t[axis][l] = d(l, l).real();
      }
    }
    return t;
  }();
  return table;
}

struct WeylOp {
  enum Kind { kShift, kSwap, kNegatePair };
  Kind kind;
  int i = 0;
  int j = 0;
  int amount = 0;  // kShift: number of pi/2 steps subtracted from k_i
};

/// Local basis change C with C sigma_i C^dagger = sigma_j (other axis fixed
/// up to cancelling signs).
const Matrix& swap_conjugator(int i, int j) {
  auto pair_of = [](const Matrix& v) {
    return Matrix(tensor(UnitaryMatrix::unchecked(v), UnitaryMatrix::unchecked(v))
                      .matrix());
  };
  static const Matrix cxy = pair_of(gates::S());
  static const Matrix cyz = pair_of(gates::rx(kHalfPi));
  static const Matrix cxz = pair_of(gates::H());
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0 && hi == 1) return cxy;
  if (lo == 1 && hi == 2) return cyz;
  return cxz;
}

/// P_l (x) I where l is the axis not in {i, j}; conjugation negates
/// sigma_i and sigma_j.
Matrix negate_conjugator(int i, int j) {
  const int l = 3 - i - j;
  const Matrix& p = l == 0 ? gates::X() : (l == 1 ? gates::Y() : gates::Z());
  return tensor(UnitaryMatrix::unchecked(p), UnitaryMatrix::unchecked(gates::I2()))
      .matrix();
}

/// Canonicalizes in place and records the transformation sequence.
void canonicalize_tracked(std::array<double, 3>& k, std::vector<WeylOp>* ops) {
  auto shift = [&](int i, int m) {
    if (m == 0) return;
    k[i] -= m * kHalfPi;
    if (ops) ops->push_back({WeylOp::kShift, i, 0, m});
  };
  auto swap = [&](int i, int j) {
    std::swap(k[i], k[j]);
    if (ops) ops->push_back({WeylOp::kSwap, i, j, 0});
  };
  auto negate = [&](int i, int j) {
    k[i] = -k[i];
    k[j] = -k[j];
    if (ops) ops->push_back({WeylOp::kNegatePair, i, j, 0});
  };

  // Bring each coefficient into (-pi/4, pi/4].
  for (int i = 0; i < 3; ++i) {
    int m = static_cast<int>(std::lround(k[i] / kHalfPi));
    if (k[i] - m * kHalfPi <= -kQuarterPi + 1e-12) m -= 1;
    shift(i, m);
  }
  // Sort by descending magnitude.
  for (int pass = 0; pass < 3; ++pass) {
    for (int i = 0; i < 2; ++i) {
      if (std::abs(k[i]) < std::abs(k[i + 1]) - 1e-15) swap(i, i + 1);
    }
  }
  // Make x and y nonnegative; z keeps the leftover sign.
  if (k[0] < 0) negate(0, 2);
  if (k[1] < 0) negate(1, 2);
  // Boundary plane: (pi/4, y, z) ~ (pi/4, y, -z).
  if (std::abs(k[0] - kQuarterPi) <= kWeylTol && k[2] < -kWeylTol) {
    shift(0, 1);      // x -> -pi/4
    negate(0, 2);     // x -> pi/4, z -> -z
  }
  for (double& v : k) v += 0.0;  // normalize -0.0
}

Matrix matrix_power_i_sigma(int axis, int m) {
  // (i sigma)^m with sigma^2 = I: period 4.
  int r = ((m % 4) + 4) % 4;
  const Matrix& s = sigma(axis);
  switch (r) {
    case 0: return Matrix::Identity(4, 4);
    case 1: return kI * s;
    case 2: return -Matrix::Identity(4, 4);
    default: return -kI * s;
  }
}

/// M4 = c * (a (x) b) with a, b in SU(2). Throws if M4 is not a Kronecker
/// product to tolerance.
void kron_factor(const Matrix& m4, Complex& c, Matrix& a, Matrix& b) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double nrm = m4.block(2 * i, 2 * j, 2, 2).norm();
      if (nrm > best) {
        best = nrm;
        bi = i;
        bj = j;
      }
    }
  }
  Matrix b_raw = m4.block(2 * bi, 2 * bj, 2, 2);
  const double denom = b_raw.squaredNorm();
  Matrix a_raw(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a_raw(i, j) =
          (b_raw.adjoint() * m4.block(2 * i, 2 * j, 2, 2)).trace() / denom;
    }
  }
  const Complex da = a_raw.determinant();
  const Complex db = b_raw.determinant();
  if (std::abs(da) < 1e-12 || std::abs(db) < 1e-12) {
    throw std::runtime_error("kron_factor: singular factor");
  }
  a = a_raw / std::sqrt(da);
  b = b_raw / std::sqrt(db);
  c = std::sqrt(da) * std::sqrt(db);
  Matrix rebuilt = c * tensor(UnitaryMatrix::unchecked(a),
                              UnitaryMatrix::unchecked(b))
                           .matrix();
  if ((rebuilt - m4).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::runtime_error("kron_factor: input is not a tensor product");
  }
}

}  // namespace

Matrix canonical_interaction(double x, double y, double z) {
  Matrix out = Matrix::Identity(4, 4);
  const double v[3] = {x, y, z};
  for (int axis = 0; axis < 3; ++axis) {
    out = (std::cos(v[axis]) * Matrix::Identity(4, 4) +
           kI * std::sin(v[axis]) * sigma(axis)) *
          out;
  }
  return out;
}

InteractionCoefficients canonicalize(double x, double y, double z) {
  std::array<double, 3> k{x, y, z};
  canonicalize_tracked(k, nullptr);
  return {k[0], k[1], k[2]};
}

InteractionCoefficients canonicalize(const InteractionCoefficients& k) {
  return canonicalize(k.x, k.y, k.z);
}

Matrix KAKDecomposition::reconstruct() const {
  Matrix local_a =
      tensor(UnitaryMatrix::unchecked(a0), UnitaryMatrix::unchecked(a1))
          .matrix();
  Matrix local_b =
      tensor(UnitaryMatrix::unchecked(b0), UnitaryMatrix::unchecked(b1))
          .matrix();
  return std::exp(kI * phase) * g * local_a *
         canonical_interaction(k.x, k.y, k.z) * local_b;
}

KAKDecomposition kak_decompose(const Matrix& u4) {
  if (u4.rows() != 4 || u4.cols() != 4) {
    throw std::invalid_argument("kak_decompose: need a 4x4 matrix");
  }
  if (unitarity_defect(u4) > 1e-8) {
    throw std::invalid_argument("kak_decompose: input is not unitary");
  }

  const Complex det = u4.determinant();
  const double input_phase = std::arg(det) / 4.0;
  Matrix usu = u4 * std::exp(-kI * input_phase);

  const Matrix& q = magic_basis();
  const Matrix m = q.adjoint() * usu * q;
  const Matrix m2 = m.transpose() * m;
  const Eigen::Matrix4d m2r = m2.real();
  const Eigen::Matrix4d m2i = m2.imag();

  // m2 is complex symmetric unitary; its real and imaginary parts are
  // commuting real symmetric matrices, so a generic real combination has the
  // shared eigenbasis. Retry angles cover unlucky degeneracies.
  static const double kAngles[] = {0.0,     0.7853981633974483, 0.25,
                                   1.1,     0.421828,           0.9273,
                                   1.39156, 0.1428571428571428};
  Eigen::Matrix4d p;
  bool found = false;
  for (double t : kAngles) {
    Eigen::Matrix4d f = std::cos(t) * m2r + std::sin(t) * m2i;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(f);
    p = es.eigenvectors();
    Matrix d = p.transpose().cast<Complex>() * m2 * p.cast<Complex>();
    double offdiag = 0.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (r != c) offdiag = std::max(offdiag, std::abs(d(r, c)));
      }
    }
    if (offdiag < 1e-9) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::runtime_error(
        "kak_decompose: eigenvector pairing failed (degenerate spectrum "
        "handling bug)");
  }
  if (p.determinant() < 0) p.col(0) *= -1.0;

  Matrix d4 = p.transpose().cast<Complex>() * m2 * p.cast<Complex>();
  std::array<double, 4> theta{};
  for (int l = 0; l < 4; ++l) theta[l] = 0.5 * std::arg(d4(l, l));

  Matrix expneg = Matrix::Zero(4, 4);
  for (int l = 0; l < 4; ++l) expneg(l, l) = std::exp(-kI * theta[l]);
  Matrix k1 = m * p.cast<Complex>() * expneg;
  if (k1.determinant().real() < 0) {
    theta[0] += pi;
    k1.col(0) *= -1.0;
  }
  if (k1.imag().cwiseAbs().maxCoeff() > 1e-7) {
    throw std::runtime_error("kak_decompose: left factor not real orthogonal");
  }

  // theta = S^T k + (sum/4) * ones; the residual is a global phase in
  // {1, i, -1, -i}.
  const auto& signs = sign_table();
  std::array<double, 3> kvec{};
  double theta_sum = 0.0;
  for (int l = 0; l < 4; ++l) theta_sum += theta[l];
  for (int axis = 0; axis < 3; ++axis) {
    double acc = 0.0;
    for (int l = 0; l < 4; ++l) acc += signs[axis][l] * theta[l];
    kvec[axis] = acc / 4.0;
  }
  double phase_acc = theta_sum / 4.0 + input_phase;

  Matrix local_a = q * k1.real().cast<Complex>() * q.adjoint();
  Matrix local_b = q * p.transpose().cast<Complex>() * q.adjoint();

  std::vector<WeylOp> ops;
  canonicalize_tracked(kvec, &ops);
  for (const WeylOp& op : ops) {
    switch (op.kind) {
      case WeylOp::kShift:
        local_a = local_a * matrix_power_i_sigma(op.i, op.amount);
        break;
      case WeylOp::kSwap: {
        const Matrix& c = swap_conjugator(op.i, op.j);
        local_a = local_a * c.adjoint();
        local_b = c * local_b;
        break;
      }
      case WeylOp::kNegatePair: {
        Matrix c = negate_conjugator(op.i, op.j);
        local_a = local_a * c;
        local_b = c * local_b;
        break;
      }
    }
  }

  KAKDecomposition out;
  out.k = {kvec[0], kvec[1], kvec[2]};
  Complex ca, cb;
  kron_factor(local_a, ca, out.a0, out.a1);
  kron_factor(local_b, cb, out.b0, out.b1);
  phase_acc += std::arg(ca) + std::arg(cb);

  // Fold the accumulated phase into g in {1, i} plus a residual.
  const int quads =
      static_cast<int>(std::lround(phase_acc / kHalfPi));
  out.phase = phase_acc - quads * kHalfPi;
  switch (((quads % 4) + 4) % 4) {
    case 0: out.g = Complex(1, 0); break;
    case 1: out.g = kI; break;
    case 2: out.g = Complex(1, 0); out.a0 *= -1.0; break;
    default: out.g = kI; out.a0 *= -1.0; break;
  }

  if ((out.reconstruct() - u4).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::runtime_error("kak_decompose: reconstruction check failed");
  }
  return out;
}

KAKDecomposition kak_decompose(const UnitaryMatrix& u4) {
  return kak_decompose(u4.matrix());
}

InteractionCoefficients interaction_coefficients(const Matrix& u4) {
  return kak_decompose(u4).k;
}

InteractionCoefficients interaction_coefficients(const UnitaryMatrix& u4) {
  return interaction_coefficients(u4.matrix());
}

bool in_w_prime(const InteractionCoefficients& k) {
  return k.x >= k.y + std::abs(k.z) - kWeylTol;
}

int sqisw_cost(const InteractionCoefficients& k) {
  const double tol = kWeylTol;
  if (std::abs(k.x) <= tol && std::abs(k.y) <= tol && std::abs(k.z) <= tol) {
    return 0;
  }
  if (std::abs(k.x - pi / 8) <= tol && std::abs(k.y - pi / 8) <= tol &&
      std::abs(k.z) <= tol) {
    return 1;
  }
  return in_w_prime(k) ? 2 : 3;
}

int sqisw_cost(const Matrix& u4) {
  return sqisw_cost(interaction_coefficients(u4));
}

double haar_w_prime_fraction(int samples, uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("haar_w_prime_fraction: samples < 1");
  }
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const UnitaryMatrix u = haar_random_unitary(4, Rng::derive(seed, i));
    if (sqisw_cost(u.matrix()) <= 2) ++hits;
  }
  return static_cast<double>(hits) / samples;
}

}  // namespace sqisw
