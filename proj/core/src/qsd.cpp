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

#include "sqisw/qsd.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sqisw/synth2q.hpp"

namespace sqisw {

namespace {

int log2_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim)
    throw std::invalid_argument("qsd: dimension is not a power of two");
  return n;
}

Matrix axis_rotation(RotationAxis axis, double angle) {
  return axis == RotationAxis::Y ? gates::ry(angle) : gates::rz(angle);
}

/// Planner item: mux gates stay atomic until the diagonal-absorption pass so
/// that leaf diagonals commute through them exactly.
struct Item {
  enum Kind { kSingle, kEntangler, kLeaf };
  Kind kind = kSingle;
  GatePlacement gate;  // kSingle
  Entangler ent = Entangler::CNOT;
  int control = 0, target = 0;  // kEntangler
  Matrix leaf;                  // kLeaf, 4x4 on the last two qubits
};

void push_single(std::vector<Item>& items, double& phase_acc, const Matrix& m,
                 int qubit) {
  double th, ph, la, gp;
  zyz_angles(m, th, ph, la, gp);
  Item it;
  it.kind = Item::kSingle;
  it.gate = GatePlacement::single(qubit, th, ph, la);
  phase_acc += gp;
  items.push_back(std::move(it));
}

/// Gray-code mux circuit in temporal order. Controls are listed big-endian
/// with respect to the angle index. Returns the control qubit of the dropped
/// boundary entangler through *dropped (only meaningful when drop_boundary).
void mux_items(const MultiplexedRotation& m, Entangler ent, int target,
               const std::vector<int>& controls, bool drop_boundary,
               std::vector<Item>& items, double& phase_acc, int* dropped) {
  const int cnt = static_cast<int>(m.angles.size());
  const int s = log2_dim(cnt);
  if (static_cast<int>(controls.size()) != s)
    throw std::invalid_argument("mux_items: control count mismatch");
  if (s == 0) {
    push_single(items, phase_acc, axis_rotation(m.axis, m.angles[0]), target);
    return;
  }
  // CZ cannot flip a diagonal rotation; the Z-axis CZ variant conjugates by
  // H so the interleaved rotations become Rx.
  const bool conjugate_h = (m.axis == RotationAxis::Z && ent == Entangler::CZ);

  // Entangler i (1-based, after rotation i) acts on the bit where the Gray
  // code changes; the closing entangler uses the high bit. Bit b of the
  // angle index corresponds to controls[s - 1 - b].
  std::vector<int> masks(cnt);
  for (int i = 1; i <= cnt; ++i) {
    const int g_prev = (i - 1) ^ ((i - 1) >> 1);
    const int g_cur = (i == cnt) ? 0 : i ^ (i >> 1);
    masks[i - 1] = g_prev ^ g_cur;
  }
  // Block j applies the rotations with signs (-1)^{popcount(j & suffix_i)};
  // solve the resulting linear system for the circuit angles.
  Eigen::MatrixXd sign(cnt, cnt);
  for (int i = cnt - 1, suffix = 0; i >= 0; --i) {
    suffix ^= masks[i];
    for (int j = 0; j < cnt; ++j)
      sign(j, i) = (std::popcount(unsigned(j & suffix)) & 1) ? -1.0 : 1.0;
  }
  Eigen::VectorXd theta(cnt);
  for (int j = 0; j < cnt; ++j) theta[j] = m.angles[j];
  const Eigen::VectorXd phi = sign.partialPivLu().solve(theta);

  if (conjugate_h) push_single(items, phase_acc, gates::H(), target);
  for (int i = 0; i < cnt; ++i) {
    push_single(items, phase_acc,
                conjugate_h ? gates::rx(phi[i])
                            : axis_rotation(m.axis, phi[i]),
                target);
    const int bit = log2_dim(masks[i]);
    const int cq = controls[s - 1 - bit];
    if (i == cnt - 1 && drop_boundary) {
      if (conjugate_h)
        throw std::logic_error("mux_items: cannot absorb through H");
      if (dropped) *dropped = cq;
      continue;
    }
    Item it;
    it.kind = Item::kEntangler;
    it.ent = ent;
    it.control = cq;
    it.target = target;
    items.push_back(std::move(it));
  }
  if (conjugate_h) push_single(items, phase_acc, gates::H(), target);
}

/// Cached SQiSW lowerings of the entanglers, on qubits (0 = control,
/// 1 = target).
const Circuit& lowered_entangler(Entangler e) {
  static const Circuit cnot = synthesize_two_qubit(gates::CNOT(), 11).circuit;
  static const Circuit cz = synthesize_two_qubit(gates::CZ(), 11).circuit;
  return e == Entangler::CNOT ? cnot : cz;
}

void append_remapped(Circuit& out, const Circuit& frag, int q0, int q1) {
  for (GatePlacement g : frag.gates) {
    for (int& t : g.targets) t = (t == 0) ? q0 : q1;
    out.gates.push_back(std::move(g));
  }
  out.global_phase += frag.global_phase;
}

void qsd_rec(const Matrix& u, int q0, int n, const QsdOptions& opts,
             std::vector<Item>& items, double& phase_acc, int& absorbed) {
  const int k = n - q0;
  if (k == 2) {
    Item it;
    it.kind = Item::kLeaf;
    it.leaf = u;
    items.push_back(std::move(it));
    return;
  }
  CsdResult csd = cosine_sine_decompose(u);
  std::vector<int> controls(k - 1);
  for (int i = 0; i < k - 1; ++i) controls[i] = q0 + 1 + i;

  Matrix l0 = csd.l.blocks[0], l1 = csd.l.blocks[1];
  std::vector<Item> ry_part;
  if (opts.cz_absorption) {
    int dropped = -1;
    mux_items(csd.ry, Entangler::CZ, q0, controls, true, ry_part, phase_acc,
              &dropped);
    // The boundary CZ is diag(I, Z_c) over qubit q0; fold Z_c into L1.
    l1 = l1 * embed_operator(gates::Z(), {dropped - (q0 + 1)}, k - 1);
    ++absorbed;
  } else {
    mux_items(csd.ry, Entangler::CNOT, q0, controls, false, ry_part, phase_acc,
              nullptr);
  }

  DemuxResult dl = demultiplex(l0, l1);
  DemuxResult dr = demultiplex(csd.r.blocks[0], csd.r.blocks[1]);

  qsd_rec(dr.w, q0 + 1, n, opts, items, phase_acc, absorbed);
  mux_items(dr.rz, Entangler::CNOT, q0, controls, false, items, phase_acc,
            nullptr);
  qsd_rec(dr.v, q0 + 1, n, opts, items, phase_acc, absorbed);
  for (Item& it : ry_part) items.push_back(std::move(it));
  qsd_rec(dl.w, q0 + 1, n, opts, items, phase_acc, absorbed);
  mux_items(dl.rz, Entangler::CNOT, q0, controls, false, items, phase_acc,
            nullptr);
  qsd_rec(dl.v, q0 + 1, n, opts, items, phase_acc, absorbed);
}

}  // namespace

Matrix Multiplexor::matrix() const {
  const Eigen::Index bd = Eigen::Index{1} << data_qubits;
  const Eigen::Index dim = bd << controls;
  Matrix out = Matrix::Zero(dim, dim);
  for (size_t b = 0; b < blocks.size(); ++b)
    out.block(b * bd, b * bd, bd, bd) = blocks[b];
  return out;
}

Matrix MultiplexedRotation::matrix() const {
  const int cnt = static_cast<int>(angles.size());
  const int s = log2_dim(cnt);
  const Eigen::Index dim = Eigen::Index{1} << (s + 1);
  Matrix out = Matrix::Zero(dim, dim);
  for (int j = 0; j < cnt; ++j) {
    const Matrix r = axis_rotation(axis, angles[j]);
    out(j, j) = r(0, 0);
    out(j, j + cnt) = r(0, 1);
    out(j + cnt, j) = r(1, 0);
    out(j + cnt, j + cnt) = r(1, 1);
  }
  return out;
}

CsdResult cosine_sine_decompose(const Matrix& u) {
  const int n = log2_dim(u.rows());
  if (n < 2 || u.rows() != u.cols())
    throw std::invalid_argument("cosine_sine_decompose: need square, n >= 2");
  const Eigen::Index h = u.rows() / 2;
  const Matrix u00 = u.topLeftCorner(h, h), u01 = u.topRightCorner(h, h);
  const Matrix u10 = u.bottomLeftCorner(h, h), u11 = u.bottomRightCorner(h, h);

  Eigen::JacobiSVD<Matrix> svd(u00,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix l0 = svd.matrixU();
  const Matrix r0 = svd.matrixV();
  Eigen::VectorXd c = svd.singularValues();

  // U10 R0 has orthogonal columns of norms s_i for any SVD choice, because
  // U10^dag U10 = I - R0 C^2 R0^dag.
  const Matrix w = u10 * r0;
  Eigen::VectorXd s(h);
  Matrix l1 = Matrix::Zero(h, h);
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < h; ++i) {
    s[i] = w.col(i).norm();
    const double nrm = std::hypot(c[i], s[i]);
    c[i] /= nrm;
    s[i] /= nrm;
    if (s[i] > 1e-8) {
      l1.col(i) = w.col(i).normalized();
    } else {
      kernel.push_back(i);
    }
  }
  if (!kernel.empty()) {
    // Complete L1 with an orthonormal basis of the complement; any
    // completion is consistent since U10 = L1 S R0^dag already holds.
    Matrix known(h, h - static_cast<Eigen::Index>(kernel.size()));
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < h; ++i)
      if (s[i] > 1e-8) known.col(col++) = l1.col(i);
    if (col == 0) {
      for (Eigen::Index idx = 0; idx < h; ++idx)
        l1(idx, kernel[static_cast<size_t>(idx)]) = 1.0;
    } else {
      Eigen::HouseholderQR<Matrix> qr(known);
      const Matrix q = qr.householderQ();
      for (size_t j = 0; j < kernel.size(); ++j)
        l1.col(kernel[j]) = q.col(col + static_cast<Eigen::Index>(j));
    }
  }

  // Row i of R1^dag from whichever of L1^dag U11 (scale c_i) or
  // -L0^dag U01 (scale s_i) is better conditioned.
  const Matrix x = l1.adjoint() * u11;
  const Matrix y = l0.adjoint() * u01;
  Matrix r1d(h, h);
  for (Eigen::Index i = 0; i < h; ++i) {
    if (c[i] >= s[i]) {
      r1d.row(i) = x.row(i) / c[i];
    } else {
      r1d.row(i) = -y.row(i) / s[i];
    }
  }

  CsdResult out;
  out.l.controls = 1;
  out.l.data_qubits = n - 1;
  out.l.blocks = {l0, l1};
  out.r.controls = 1;
  out.r.data_qubits = n - 1;
  out.r.blocks = {r0.adjoint(), r1d};
  out.ry.axis = RotationAxis::Y;
  out.ry.angles.resize(h);
  for (Eigen::Index i = 0; i < h; ++i)
    out.ry.angles[i] = 2.0 * std::atan2(s[i], c[i]);

  const Matrix recon =
      out.l.matrix() * out.ry.matrix() * out.r.matrix();
  if ((recon - u).cwiseAbs().maxCoeff() > 1e-8)
    throw std::runtime_error("cosine_sine_decompose: reconstruction failed");
  return out;
}

DemuxResult demultiplex(const Matrix& u1, const Matrix& u2) {
  if (u1.rows() != u2.rows() || u1.cols() != u2.cols() ||
      u1.rows() != u1.cols())
    throw std::invalid_argument("demultiplex: dimension mismatch");
  const Eigen::Index h = u1.rows();
  const Matrix prod = u1 * u2.adjoint();
  // prod is unitary, hence normal: its Schur form is diagonal and the Schur
  // basis is an orthonormal eigenbasis, degenerate eigenvalues included.
  Eigen::ComplexSchur<Matrix> schur(prod, true);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("demultiplex: Schur decomposition failed");
  DemuxResult out;
  out.v = schur.matrixU();
  out.rz.axis = RotationAxis::Z;
  out.rz.angles.resize(h);
  Matrix d = Matrix::Zero(h, h);
  for (Eigen::Index i = 0; i < h; ++i) {
    const double half = std::arg(schur.matrixT()(i, i)) / 2.0;
    d(i, i) = std::exp(Complex(0.0, half));
    out.rz.angles[i] = -2.0 * half;
  }
  out.w = d * out.v.adjoint() * u2;
  return out;
}

Circuit synthesize_multiplexed_rotation(const MultiplexedRotation& m,
                                        Entangler e) {
  const int s = log2_dim(m.angles.size());
  std::vector<int> controls(s);
  for (int i = 0; i < s; ++i) controls[i] = i + 1;
  std::vector<Item> items;
  double phase = 0.0;
  mux_items(m, e, 0, controls, false, items, phase, nullptr);

  Circuit c;
  c.n_qubits = s + 1;
  c.global_phase = phase;
  for (const Item& it : items) {
    if (it.kind == Item::kSingle) {
      c.gates.push_back(it.gate);
    } else {
      const Matrix& g =
          it.ent == Entangler::CNOT ? gates::CNOT() : gates::CZ();
      c.gates.push_back(GatePlacement::fixed_gate(g, {it.control, it.target}));
    }
  }
  return c;
}

QsdResult qsd_synthesize(const UnitaryMatrix& u, const QsdOptions& opts) {
  return qsd_synthesize(u.matrix(), opts);
}

QsdResult qsd_synthesize(const Matrix& u, const QsdOptions& opts) {
  const int n = log2_dim(u.rows());
  if (n < 2 || u.rows() != u.cols())
    throw std::invalid_argument("qsd_synthesize: need square, n >= 2");

  std::vector<Item> items;
  double phase_acc = 0.0;
  int absorbed = 0;
  qsd_rec(u, 0, n, opts, items, phase_acc, absorbed);

  size_t last_leaf = 0;
  for (size_t i = 0; i < items.size(); ++i)
    if (items[i].kind == Item::kLeaf) last_leaf = i;

  Circuit out;
  out.n_qubits = n;
  out.global_phase = phase_acc;
  // Leaf diagonals commute through every remaining mux gate (rotations act
  // above the last two qubits; entanglers touch them only diagonally), so a
  // pending diagonal from one leaf multiplies into the next leaf's target.
  Matrix pending = Matrix::Identity(4, 4);
  for (size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    switch (it.kind) {
      case Item::kSingle:
        out.gates.push_back(it.gate);
        break;
      case Item::kEntangler:
        append_remapped(out, lowered_entangler(it.ent), it.control, it.target);
        break;
      case Item::kLeaf: {
        const Matrix target = it.leaf * pending;
        if (opts.diagonal_absorption && i != last_leaf) {
          DiagonalRemainderSynthesis drs =
              synthesize_with_diagonal(target, opts.seed);
          pending = drs.delta;
          append_remapped(out, drs.circuit, n - 2, n - 1);
        } else {
          pending = Matrix::Identity(4, 4);
          append_remapped(out, synthesize_two_qubit(target, opts.seed).circuit,
                          n - 2, n - 1);
        }
        break;
      }
    }
  }

  QsdResult res;
  res.circuit = std::move(out);
  res.ledger.cnot_equivalent_saved = absorbed;
  res.ledger.bound = implemented_bound(n, opts);
  for (const GatePlacement& g : res.circuit.gates)
    if (g.kind == GateKind::Sqisw) ++res.ledger.sqisw_used;
  res.residual_error = error_metric(evaluate(res.circuit), u);
  return res;
}

Rational paper_bound(int n) {
  if (n < 3) throw std::invalid_argument("paper_bound: n >= 3");
  return Rational(139, 192) * Rational(ipow(4, n)) -
         Rational(3) * Rational(ipow(2, n)) + Rational(5, 3);
}

int64_t implemented_bound(int n, const QsdOptions& opts) {
  if (n < 2) throw std::invalid_argument("implemented_bound: n >= 2");
  int64_t c = 3;
  for (int k = 3; k <= n; ++k) c = 4 * c + 3 * (int64_t{1} << k);
  if (opts.cz_absorption) c -= 2 * (ipow(4, n - 2) - 1) / 3;
  if (opts.diagonal_absorption) c -= ipow(4, n - 2) - 1;
  return c;
}

}  // namespace sqisw
