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

#include "sqisw/optim.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "sqisw/rng.hpp"

namespace sqisw::optim {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix slot_matrix(const double* p) {
  return single_qubit_u(p[0], p[1], p[2]);
}

/// Partial derivatives of Rz(phi) Ry(theta) Rz(lambda) in each angle.
void slot_matrix_grads(const double* p, Matrix out[3]) {
  const double th = p[0], ph = p[1], la = p[2];
  const Complex ep = std::exp(kI * (ph / 2.0)), em = std::exp(-kI * (ph / 2.0));
  const Complex lp = std::exp(kI * (la / 2.0)), lm = std::exp(-kI * (la / 2.0));
  const double c = std::cos(th / 2.0), s = std::sin(th / 2.0);
  Matrix u(2, 2);
  u << em * lm * c, -em * lp * s, ep * lm * s, ep * lp * c;
  // d/d theta
  out[0].resize(2, 2);
  out[0] << em * lm * (-s / 2.0), -em * lp * (c / 2.0), ep * lm * (c / 2.0),
      ep * lp * (-s / 2.0);
  // d/d phi: row-wise factor -i/2 (row 0), +i/2 (row 1).
  out[1].resize(2, 2);
  out[1].row(0) = (-kI / 2.0) * u.row(0);
  out[1].row(1) = (kI / 2.0) * u.row(1);
  // d/d lambda: column-wise factor.
  out[2].resize(2, 2);
  out[2].col(0) = (-kI / 2.0) * u.col(0);
  out[2].col(1) = (kI / 2.0) * u.col(1);
}

Matrix diagonal_matrix(const double* p, int dim) {
  Matrix d = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) d(i, i) = std::exp(kI * p[i]);
  return d;
}

Matrix gate_matrix(const TemplateGate& g, const std::vector<double>& params) {
  switch (g.kind) {
    case TemplateGate::kFixed:
      return g.fixed;
    case TemplateGate::kSlot:
      return slot_matrix(params.data() + g.param_offset);
    case TemplateGate::kDiagonal:
      return diagonal_matrix(params.data() + g.param_offset,
                             1 << g.targets.size());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

void CircuitTemplate::add_fixed(Matrix m, std::vector<int> targets) {
  TemplateGate g;
  g.kind = TemplateGate::kFixed;
  g.fixed = std::move(m);
  g.targets = std::move(targets);
  gates.push_back(std::move(g));
}

void CircuitTemplate::add_sqisw(int i, int j) {
  add_fixed(gates::SQISW(), {i, j});
}

void CircuitTemplate::add_slot(int qubit) {
  TemplateGate g;
  g.kind = TemplateGate::kSlot;
  g.targets = {qubit};
  g.param_offset = param_count;
  param_count += 3;
  gates.push_back(std::move(g));
}

void CircuitTemplate::add_diagonal(std::vector<int> targets) {
  TemplateGate g;
  g.kind = TemplateGate::kDiagonal;
  g.param_offset = param_count;
  param_count += 1 << targets.size();
  g.targets = std::move(targets);
  gates.push_back(std::move(g));
}

Matrix CircuitTemplate::evaluate(const std::vector<double>& params) const {
  if (static_cast<int>(params.size()) != param_count)
    throw std::invalid_argument("CircuitTemplate: parameter count mismatch");
  const int dim = 1 << n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const TemplateGate& g : gates)
    u = embed_operator(gate_matrix(g, params), g.targets, n_qubits) * u;
  return u;
}

Circuit CircuitTemplate::instantiate(const std::vector<double>& params) const {
  if (static_cast<int>(params.size()) != param_count)
    throw std::invalid_argument("CircuitTemplate: parameter count mismatch");
  Circuit c;
  c.n_qubits = n_qubits;
  for (const TemplateGate& g : gates) {
    switch (g.kind) {
      case TemplateGate::kFixed:
        if (g.targets.size() == 2 &&
            g.fixed.isApprox(gates::SQISW(), 1e-14)) {
          c.gates.push_back(GatePlacement::sqisw(g.targets[0], g.targets[1]));
        } else {
          c.gates.push_back(GatePlacement::fixed_gate(g.fixed, g.targets));
        }
        break;
      case TemplateGate::kSlot:
        c.gates.push_back(GatePlacement::single(
            g.targets[0], params[g.param_offset], params[g.param_offset + 1],
            params[g.param_offset + 2]));
        break;
      case TemplateGate::kDiagonal:
        c.gates.push_back(GatePlacement::fixed_gate(
            diagonal_matrix(params.data() + g.param_offset,
                            1 << g.targets.size()),
            g.targets));
        break;
    }
  }
  return c;
}

CircuitTemplate CircuitTemplate::for_structure(const CircuitStructure& s,
                                               int n_qubits) {
  CircuitTemplate t;
  t.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) t.add_slot(q);
  for (const QubitPair& p : s) {
    if (p.b >= n_qubits)
      throw std::invalid_argument("for_structure: qubit out of range");
    t.add_sqisw(p.a, p.b);
    t.add_slot(p.a);
    t.add_slot(p.b);
  }
  return t;
}

double objective_value(const CircuitTemplate& t, const Matrix& target,
                       const std::vector<double>& params) {
  const int dim = 1 << t.n_qubits;
  const Complex tr = (target.adjoint() * t.evaluate(params)).trace();
  return 1.0 - std::abs(tr) / dim;
}

double objective_value_and_grad(const CircuitTemplate& t, const Matrix& target,
                                const std::vector<double>& params,
                                std::vector<double>& grad) {
  const int n = t.n_qubits;
  const int dim = 1 << n;
  const int m = static_cast<int>(t.gates.size());
  grad.assign(params.size(), 0.0);

  // prefix[g] = product of embedded gates [0, g); suffix computed on the fly
  // right to left.
  std::vector<Matrix> embedded(m);
  for (int g = 0; g < m; ++g)
    embedded[g] = embed_operator(gate_matrix(t.gates[g], params),
                                 t.gates[g].targets, n);
  std::vector<Matrix> prefix(m + 1);
  prefix[0] = Matrix::Identity(dim, dim);
  for (int g = 0; g < m; ++g) prefix[g + 1] = embedded[g] * prefix[g];

  const Complex tr = (target.adjoint() * prefix[m]).trace();
  const double value = 1.0 - std::abs(tr) / dim;
  const double atr = std::abs(tr);
  if (atr < 1e-300) return value;  // gradient of |tr| undefined at 0
  const Complex tbar = std::conj(tr) / atr;

  Matrix suffix = Matrix::Identity(dim, dim);
  for (int g = m - 1; g >= 0; --g) {
    const TemplateGate& tg = t.gates[g];
    if (tg.kind != TemplateGate::kFixed) {
      // tr(T^dag * suffix * embed(dG) * prefix[g]) = tr(env^T * embed(dG))
      // with env = suffix * prefix[g] * T^dag, so only the embedded entries
      // of env matter. Reduce env to the gate's local dim.
      const Matrix env = prefix[g] * target.adjoint() * suffix;
      if (tg.kind == TemplateGate::kSlot) {
        Matrix dg[3];
        slot_matrix_grads(params.data() + tg.param_offset, dg);
        for (int a = 0; a < 3; ++a) {
          const Complex dtr =
              (env * embed_operator(dg[a], tg.targets, n)).trace();
          grad[tg.param_offset + a] = -std::real(tbar * dtr) / dim;
        }
      } else {
        const int ldim = 1 << tg.targets.size();
        const Matrix d = diagonal_matrix(params.data() + tg.param_offset, ldim);
        for (int a = 0; a < ldim; ++a) {
          Matrix dg = Matrix::Zero(ldim, ldim);
          dg(a, a) = kI * d(a, a);
          const Complex dtr =
              (env * embed_operator(dg, tg.targets, n)).trace();
          grad[tg.param_offset + a] = -std::real(tbar * dtr) / dim;
        }
      }
    }
    suffix = suffix * embedded[g];
  }
  return value;
}

MinimizeResult minimize(const CircuitTemplate& t, const Matrix& target,
                        std::vector<double> x0, const MinimizeOptions& opts) {
  const int n = static_cast<int>(x0.size());
  std::vector<double> x = std::move(x0), g(n), xn(n), gn(n);
  double f = objective_value_and_grad(t, target, x, g);

  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  MinimizeResult best{f, x, 0};
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if (f <= opts.target_value) break;
    double gnorm = 0.0;
    for (double v : g) gnorm += v * v;
    if (std::sqrt(gnorm) < opts.grad_tol) break;

    // Two-loop recursion for the L-BFGS direction.
    std::vector<double> q = g;
    const int h = static_cast<int>(s_hist.size());
    std::vector<double> alpha(h);
    for (int i = h - 1; i >= 0; --i) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j) dot += s_hist[i][j] * q[j];
      alpha[i] = rho_hist[i] * dot;
      for (int j = 0; j < n; ++j) q[j] -= alpha[i] * y_hist[i][j];
    }
    if (h > 0) {
      double sy = 0.0, yy = 0.0;
      for (int j = 0; j < n; ++j) {
        sy += s_hist[h - 1][j] * y_hist[h - 1][j];
        yy += y_hist[h - 1][j] * y_hist[h - 1][j];
      }
      if (yy > 0) {
        const double gamma = sy / yy;
        for (double& v : q) v *= gamma;
      }
    }
    for (int i = 0; i < h; ++i) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j) dot += y_hist[i][j] * q[j];
      const double beta = rho_hist[i] * dot;
      for (int j = 0; j < n; ++j) q[j] += s_hist[i][j] * (alpha[i] - beta);
    }
    // q is the ascent step; descend along -q if that is a descent direction,
    // otherwise fall back to steepest descent.
    double gq = 0.0;
    for (int j = 0; j < n; ++j) gq += g[j] * q[j];
    if (gq <= 0) {
      q = g;
      gq = 0.0;
      for (double v : g) gq += v * v;
    }

    // Backtracking Armijo line search.
    double step = 1.0;
    double fn = f;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (int j = 0; j < n; ++j) xn[j] = x[j] - step * q[j];
      fn = objective_value_and_grad(t, target, xn, gn);
      if (fn <= f - 1e-4 * step * gq) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> s(n), y(n);
    double sy = 0.0;
    for (int j = 0; j < n; ++j) {
      s[j] = xn[j] - x[j];
      y[j] = gn[j] - g[j];
      sy += s[j] * y[j];
    }
    if (sy > 1e-14) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(xn);
    g.swap(gn);
    f = fn;
    best.iterations = iter + 1;
    if (f < best.value) {
      best.value = f;
      best.params = x;
    }
  }
  return best;
}

FitResult fit(const CircuitTemplate& t, const Matrix& target,
              const FitOptions& opts) {
  FitResult best;
  MinimizeOptions mo;
  mo.max_iterations = opts.max_iterations;
  mo.target_value = opts.tolerance / 4.0;
  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(Rng::derive(opts.seed, 0x0f17, static_cast<uint64_t>(r), 0));
    std::vector<double> x0(t.param_count);
    for (double& v : x0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    MinimizeResult res = minimize(t, target, std::move(x0), mo);
    best.restarts_used = r + 1;
    if (res.value < best.error) {
      best.error = res.value;
      best.params = std::move(res.params);
    }
    if (best.error <= opts.tolerance) break;
  }
  return best;
}

}  // namespace sqisw::optim
