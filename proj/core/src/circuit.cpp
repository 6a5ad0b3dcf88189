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

#include "sqisw/circuit.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace sqisw {

namespace {
constexpr Complex kI{0.0, 1.0};

void check_targets(const std::vector<int>& targets, int n) {
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n) {
      throw std::invalid_argument("gate target out of range");
    }
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("duplicate gate target");
      }
    }
  }
}
}  // namespace

GatePlacement GatePlacement::sqisw(int i, int j) {
  if (i == j) throw std::invalid_argument("sqisw: equal targets");
  GatePlacement g;
  g.kind = GateKind::Sqisw;
  // SQiSW is qubit symmetric, so normalize to i < j.
  g.targets = {std::min(i, j), std::max(i, j)};
  return g;
}

GatePlacement GatePlacement::single(int q, double theta, double phi,
                                    double lambda) {
  GatePlacement g;
  g.kind = GateKind::SingleQubit;
  g.targets = {q};
  g.params = {theta, phi, lambda};
  return g;
}

GatePlacement GatePlacement::fixed_gate(Matrix m, std::vector<int> targets) {
  const auto dim = Eigen::Index(1) << targets.size();
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("fixed_gate: matrix dim does not match arity");
  }
  GatePlacement g;
  g.kind = GateKind::Fixed;
  g.targets = std::move(targets);
  g.fixed = std::move(m);
  return g;
}

Matrix single_qubit_u(double theta, double phi, double lambda) {
  return gates::rz(phi) * gates::ry(theta) * gates::rz(lambda);
}

void zyz_angles(const Matrix& m, double& theta, double& phi, double& lambda,
                double& phase) {
  // Strip the phase making det = 1, then read angles off the SU(2) form
  // [[cos(t/2) e^{-i(phi+lambda)/2}, -sin(t/2) e^{-i(phi-lambda)/2}],
  //  [sin(t/2) e^{ i(phi-lambda)/2},  cos(t/2) e^{ i(phi+lambda)/2}]].
  const Complex det = m.determinant();
  phase = 0.5 * std::arg(det);
  Matrix su = m * std::exp(-kI * phase);
  theta = 2.0 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
  const double sum = 2.0 * std::arg(su(1, 1));   // phi + lambda
  const double diff = 2.0 * std::arg(su(1, 0));  // phi - lambda
  phi = 0.5 * (sum + diff);
  lambda = 0.5 * (sum - diff);
}

Matrix embed_operator(const Matrix& g, const std::vector<int>& targets,
                      int n) {
  const int k = static_cast<int>(targets.size());
  check_targets(targets, n);
  const Eigen::Index gd = Eigen::Index(1) << k;
  if (g.rows() != gd || g.cols() != gd) {
    throw std::invalid_argument("embed_operator: matrix dim/arity mismatch");
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix out = Matrix::Zero(dim, dim);
  // Qubit q owns state-index bit (n-1-q); gate qubit t owns bit (k-1-t).
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index gcol = 0;
    for (int t = 0; t < k; ++t) {
      gcol |= ((col >> (n - 1 - targets[t])) & 1) << (k - 1 - t);
    }
    const Eigen::Index base = [&] {
      Eigen::Index b = col;
      for (int t = 0; t < k; ++t) b &= ~(Eigen::Index(1) << (n - 1 - targets[t]));
      return b;
    }();
    for (Eigen::Index grow = 0; grow < gd; ++grow) {
      const Complex v = g(grow, gcol);
      if (v == Complex(0.0, 0.0)) continue;
      Eigen::Index row = base;
      for (int t = 0; t < k; ++t) {
        row |= ((grow >> (k - 1 - t)) & 1) << (n - 1 - targets[t]);
      }
      out(row, col) += v;
    }
  }
  return out;
}

Matrix embed_two_qubit(const Matrix& g, int i, int j, int n) {
  if (!(0 <= i && i < j && j < n)) {
    throw std::invalid_argument("embed_two_qubit: need 0 <= i < j < n");
  }
  return embed_operator(g, {i, j}, n);
}

Matrix evaluate(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
  Matrix acc = Matrix::Identity(dim, dim);
  for (const GatePlacement& g : c.gates) {
    check_targets(g.targets, c.n_qubits);
    switch (g.kind) {
      case GateKind::Sqisw:
        acc = embed_operator(gates::SQISW(), g.targets, c.n_qubits) * acc;
        break;
      case GateKind::SingleQubit:
        acc = embed_operator(
                  single_qubit_u(g.params[0], g.params[1], g.params[2]),
                  g.targets, c.n_qubits) *
              acc;
        break;
      case GateKind::Fixed:
        acc = embed_operator(g.fixed, g.targets, c.n_qubits) * acc;
        break;
    }
  }
  return std::exp(kI * c.global_phase) * acc;
}

SlotLayout SlotLayout::for_structure(const CircuitStructure& s, int n_qubits) {
  SlotLayout layout;
  layout.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) layout.slot_qubits.push_back(q);
  for (const QubitPair& p : s) {
    if (p.b >= n_qubits) {
      throw std::invalid_argument("SlotLayout: structure qubit out of range");
    }
    layout.slot_qubits.push_back(p.a);
    layout.slot_qubits.push_back(p.b);
  }
  return layout;
}

Circuit instantiate(const CircuitStructure& s, const std::vector<double>& params,
                    const SlotLayout& layout) {
  if (static_cast<int>(params.size()) != layout.param_count()) {
    throw std::invalid_argument("instantiate: parameter count mismatch");
  }
  Circuit c;
  c.n_qubits = layout.n_qubits;
  int slot = 0;
  auto emit_slot = [&](int q) {
    c.gates.push_back(GatePlacement::single(q, params[3 * slot],
                                            params[3 * slot + 1],
                                            params[3 * slot + 2]));
    ++slot;
  };
  for (int q = 0; q < layout.n_qubits; ++q) emit_slot(q);
  for (const QubitPair& p : s) {
    c.gates.push_back(GatePlacement::sqisw(p.a, p.b));
    emit_slot(p.a);
    emit_slot(p.b);
  }
  return c;
}

CircuitStructure structure_of(const Circuit& c) {
  CircuitStructure s;
  for (const GatePlacement& g : c.gates) {
    if (g.targets.size() == 2) {
      s.emplace_back(g.targets[0], g.targets[1]);
    } else if (g.targets.size() > 2) {
      throw std::invalid_argument("structure_of: gates beyond 2 qubits");
    }
  }
  return s;
}

void write_circuit_json(std::ostream& out, const Circuit& c) {
  nlohmann::json j;
  j["qubits"] = c.n_qubits;
  j["global_phase"] = c.global_phase;
  auto arr = nlohmann::json::array();
  for (const GatePlacement& g : c.gates) {
    nlohmann::json e;
    switch (g.kind) {
      case GateKind::Sqisw:
        e["kind"] = "sqisw";
        e["targets"] = g.targets;
        break;
      case GateKind::SingleQubit:
        e["kind"] = "u1";
        e["target"] = g.targets[0];
        e["params"] = g.params;
        break;
      case GateKind::Fixed: {
        e["kind"] = "fixed";
        e["targets"] = g.targets;
        auto re = nlohmann::json::array();
        auto im = nlohmann::json::array();
        for (Eigen::Index r = 0; r < g.fixed.rows(); ++r) {
          auto re_row = nlohmann::json::array();
          auto im_row = nlohmann::json::array();
          for (Eigen::Index k = 0; k < g.fixed.cols(); ++k) {
            re_row.push_back(g.fixed(r, k).real());
            im_row.push_back(g.fixed(r, k).imag());
          }
          re.push_back(std::move(re_row));
          im.push_back(std::move(im_row));
        }
        e["re"] = std::move(re);
        e["im"] = std::move(im);
        break;
      }
    }
    arr.push_back(std::move(e));
  }
  j["gates"] = std::move(arr);
  out << j.dump(2) << "\n";
}

Circuit read_circuit_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit json: parse error: ") +
                                e.what());
  }
  if (!j.contains("qubits") || !j["qubits"].is_number_integer()) {
    throw std::invalid_argument("circuit json: missing integer field 'qubits'");
  }
  Circuit c;
  c.n_qubits = j["qubits"].get<int>();
  if (c.n_qubits < 1 || c.n_qubits > 12) {
    throw std::invalid_argument("circuit json: 'qubits' out of range");
  }
  c.global_phase = j.value("global_phase", 0.0);
  if (!j.contains("gates") || !j["gates"].is_array()) {
    throw std::invalid_argument("circuit json: missing array field 'gates'");
  }
  for (const auto& e : j["gates"]) {
    const std::string kind = e.value("kind", "");
    if (kind == "sqisw") {
      auto t = e.at("targets").get<std::vector<int>>();
      if (t.size() != 2) {
        throw std::invalid_argument("circuit json: sqisw needs 2 targets");
      }
      c.gates.push_back(GatePlacement::sqisw(t[0], t[1]));
    } else if (kind == "u1") {
      auto p = e.at("params").get<std::vector<double>>();
      if (p.size() != 3) {
        throw std::invalid_argument("circuit json: u1 needs 3 params");
      }
      c.gates.push_back(
          GatePlacement::single(e.at("target").get<int>(), p[0], p[1], p[2]));
    } else if (kind == "fixed") {
      auto t = e.at("targets").get<std::vector<int>>();
      const auto dim = Eigen::Index(1) << t.size();
      Matrix m(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index k = 0; k < dim; ++k) {
          m(r, k) = Complex(e.at("re")[r][k].get<double>(),
                            e.at("im")[r][k].get<double>());
        }
      }
      c.gates.push_back(GatePlacement::fixed_gate(std::move(m), std::move(t)));
    } else {
      throw std::invalid_argument("circuit json: unknown gate kind '" + kind +
                                  "'");
    }
  }
  return c;
}

Circuit read_circuit_json(const std::string& text) {
  std::istringstream in(text);
  return read_circuit_json(in);
}

std::string to_qasm3(const Circuit& c) {
  std::ostringstream out;
  out.precision(17);
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n\n";
  // sqisw = exp(i pi/8 (XX + YY)); both factors via the CX + rz identity.
  out << "gate sqisw a, b {\n"
         "  h a; h b; cx a, b; rz(-pi/4) b; cx a, b; h a; h b;\n"
         "  rx(pi/2) a; rx(pi/2) b; cx a, b; rz(-pi/4) b; cx a, b; "
         "rx(-pi/2) a; rx(-pi/2) b;\n"
         "}\n\n";
  out << "qubit[" << c.n_qubits << "] q;\n";
  if (c.global_phase != 0.0) {
    out << "gphase(" << c.global_phase << ");\n";
  }
  for (const GatePlacement& g : c.gates) {
    switch (g.kind) {
      case GateKind::Sqisw:
        out << "sqisw q[" << g.targets[0] << "], q[" << g.targets[1] << "];\n";
        break;
      case GateKind::SingleQubit:
        // U(theta, phi, lambda) agrees with Rz(phi)Ry(theta)Rz(lambda) up to
        // a phase of (phi+lambda)/2, compensated with gphase.
        out << "gphase(" << -0.5 * (g.params[1] + g.params[2]) << ");\n";
        out << "U(" << g.params[0] << ", " << g.params[1] << ", "
            << g.params[2] << ") q[" << g.targets[0] << "];\n";
        break;
      case GateKind::Fixed:
        throw std::invalid_argument(
            "to_qasm3: fixed-matrix gates are not exportable; lower them "
            "first");
    }
  }
  return out.str();
}

}  // namespace sqisw
