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

#include "sqisw/toffoli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace sqisw {

namespace {

constexpr double kPi = std::numbers::pi;

GatePlacement ry_on(int q, double theta) {
  return GatePlacement::single(q, theta, 0.0, 0.0);
}

GatePlacement rz_on(int q, double theta) {
  return GatePlacement::single(q, 0.0, theta, 0.0);
}

}  // namespace

double toffoli_theta1() { return std::asin(1.0 - std::sqrt(2.0)); }

ToffoliScheme build_toffoli_scheme(double theta1) {
  ToffoliScheme s;
  s.theta1 = theta1;
  s.theta2 = theta1 + kPi / 2.0;
  s.theta3 = theta1 + kPi;

  Circuit& c = s.circuit;
  c.n_qubits = 3;
  c.gates = {
      ry_on(1, kPi / 2.0),
      rz_on(2, kPi / 2.0),
      rz_on(1, -kPi / 2.0),
      GatePlacement::sqisw(1, 2),
      ry_on(2, kPi / 2.0),
      rz_on(2, kPi / 2.0),
      GatePlacement::sqisw(0, 2),
      GatePlacement::sqisw(0, 2),
      ry_on(0, kPi / 2.0),
      ry_on(2, s.theta1),
      GatePlacement::sqisw(0, 1),
      ry_on(0, kPi / 4.0),
      ry_on(1, -3.0 * kPi / 4.0),
      rz_on(0, kPi / 2.0),
      rz_on(1, kPi / 2.0),
      GatePlacement::sqisw(1, 2),
      rz_on(1, -kPi),
      ry_on(2, s.theta2),
      GatePlacement::sqisw(1, 2),
      ry_on(1, kPi / 2.0),
      ry_on(2, s.theta3),
      rz_on(2, -kPi),
      GatePlacement::sqisw(0, 2),
      GatePlacement::sqisw(0, 2),
      ry_on(0, kPi),
      ry_on(2, -kPi / 4.0),
      rz_on(0, -kPi / 4.0),
      rz_on(2, kPi / 2.0),
  };
  return s;
}

EntryFormulaReport verify_entry_formulas(double x) {
  const Matrix u = evaluate(build_toffoli_scheme(x).circuit);

  const double r2 = std::sqrt(2.0);
  const double cs = std::cos(x / 2.0) + std::sin(x / 2.0);
  const double sx = std::sin(x);
  const Complex i(0.0, 1.0);
  auto root = [&](double p) { return std::exp(i * (kPi * p)); };  // (-1)^p

  // The rotation gates here are special-unitary, which leaves the circuit a
  // constant e^{i pi/8} ahead of the convention the closed forms assume.
  const Complex align = root(1.0 / 8.0);
  const Complex f11 = align * (Complex(-0.25, 0.25)) * root(3.0 / 8.0) * cs *
                      (-2.0 + i * r2 + (2.0 + r2) * sx);
  const Complex f33 =
      align * 0.5 * root(7.0 / 8.0) * cs * (-i - r2 + (1.0 + r2) * sx);
  const Complex f55 = align * -root(1.0 / 8.0) * cs *
                      (Complex(5.0, -1.0) - Complex(4.0, -1.0) * r2 +
                       (Complex(-1.0, -1.0) + r2) * sx) /
                      (2.0 * std::pow(-1.0 + root(0.25), 3.0));
  const Complex f87 =
      align * -0.5 * root(1.0 / 8.0) * cs * (i - r2 + (1.0 + r2) * sx);

  EntryFormulaReport rep;
  const std::pair<std::pair<int, int>, Complex> patterned[] = {
      {{0, 0}, f11}, {{1, 1}, f11}, {{2, 2}, f33}, {{3, 3}, f33},
      {{4, 4}, f55}, {{5, 5}, f55}, {{7, 6}, f87}, {{6, 7}, f87},
  };
  bool in_pattern[8][8] = {};
  for (const auto& [idx, val] : patterned) {
    in_pattern[idx.first][idx.second] = true;
    rep.max_formula_residual =
        std::max(rep.max_formula_residual, std::abs(u(idx.first, idx.second) - val));
  }

  rep.common_factor =
      (std::cos(x / 2.0) - std::sin(x / 2.0)) * (1.0 + (1.0 + r2) * sx);
  for (int r = 0; r < 8; ++r) {
    for (int col = 0; col < 8; ++col) {
      if (in_pattern[r][col]) continue;
      const double a = std::abs(u(r, col));
      rep.max_offpattern_abs = std::max(rep.max_offpattern_abs, a);
      if (a > 1e-12 && std::abs(rep.common_factor) > 1e-12)
        rep.max_offpattern_ratio =
            std::max(rep.max_offpattern_ratio, a / std::abs(rep.common_factor));
    }
  }
  return rep;
}

UnitaryMatrix toffoli_matrix() {
  return UnitaryMatrix::unchecked(gates::TOFFOLI());
}

}  // namespace sqisw
