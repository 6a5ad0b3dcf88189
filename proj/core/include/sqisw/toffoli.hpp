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

#ifndef SQISW_TOFFOLI_HPP
#define SQISW_TOFFOLI_HPP

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"

namespace sqisw {

/// Fixed 8-SQiSW Toffoli scheme with one free parameter;
/// theta3 = theta2 + pi/2 = theta1 + pi.
struct ToffoliScheme {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  Circuit circuit;  // n = 3, exactly 8 SQiSW
};

/// The value of theta1 making the scheme exactly Toffoli:
/// arcsin(1 - sqrt(2)), in (-pi/2, 0).
double toffoli_theta1();

ToffoliScheme build_toffoli_scheme(double theta1);

struct EntryFormulaReport {
  /// Max |circuit entry - closed form| over the eight patterned entries.
  double max_formula_residual = 0.0;
  /// (cos(x/2) - sin(x/2)) (1 + (1 + sqrt(2)) sin x); off-pattern entries
  /// are multiples of this factor.
  double common_factor = 0.0;
  /// Max |entry| / |common_factor| over nonzero off-pattern entries.
  double max_offpattern_ratio = 0.0;
  /// Max |off-pattern entry|; vanishes when the common factor does.
  double max_offpattern_abs = 0.0;
};

/// Evaluates the closed-form expressions for the patterned entries of the
/// scheme matrix at theta1 = x and compares against the evaluated circuit.
EntryFormulaReport verify_entry_formulas(double x);

UnitaryMatrix toffoli_matrix();

}  // namespace sqisw

#endif  // SQISW_TOFFOLI_HPP
