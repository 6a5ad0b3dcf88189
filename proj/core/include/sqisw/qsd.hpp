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

#ifndef SQISW_QSD_HPP
#define SQISW_QSD_HPP

#include <cstdint>
#include <vector>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"
#include "sqisw/rational.hpp"

namespace sqisw {

/// Block-diagonal unitary: 2^controls blocks of dimension 2^data_qubits,
/// selected by the control register.
struct Multiplexor {
  int controls = 0;
  int data_qubits = 0;
  std::vector<Matrix> blocks;

  Matrix matrix() const;
};

enum class RotationAxis { Y, Z };

/// Rotation of the top qubit multiplexed over the remaining qubits; one
/// angle per control basis state (big-endian).
struct MultiplexedRotation {
  RotationAxis axis = RotationAxis::Y;
  std::vector<double> angles;

  /// Operator on 1 + log2(angles.size()) qubits, target on qubit 0.
  Matrix matrix() const;
};

enum class Entangler { CNOT, CZ };

struct CountLedger {
  int sqisw_used = 0;
  /// Entanglers absorbed into neighboring multiplexor blocks, in CNOT units
  /// (2 SQiSW each).
  int cnot_equivalent_saved = 0;
  int64_t bound = 0;
};

struct QsdOptions {
  bool cz_absorption = true;
  bool diagonal_absorption = true;
  uint64_t seed = 7;
};

struct QsdResult {
  Circuit circuit;
  CountLedger ledger;
  double residual_error = 0.0;
};

struct CsdResult {
  Multiplexor l;          // blocks {L0, L1}
  MultiplexedRotation ry; // target qubit 0
  Multiplexor r;          // blocks {R0^dag, R1^dag}
};

/// U = L * ry * R with the split on the top qubit. Blockwise SVD; validated
/// by reconstruction (throws std::runtime_error on failure).
CsdResult cosine_sine_decompose(const Matrix& u);

struct DemuxResult {
  Matrix v;
  MultiplexedRotation rz;
  Matrix w;
};

/// diag(u1, u2) = (I (x) v) * rz * (I (x) w), via the eigensystem of
/// u1 * u2^dag.
DemuxResult demultiplex(const Matrix& u1, const Matrix& u2);

/// Gray-code circuit with exactly 2^controls entanglers, target qubit 0.
/// With Entangler::CZ and axis Y, the temporally last gate is an entangler
/// at the circuit boundary.
Circuit synthesize_multiplexed_rotation(const MultiplexedRotation& m,
                                        Entangler e);

QsdResult qsd_synthesize(const UnitaryMatrix& u, const QsdOptions& opts = {});
QsdResult qsd_synthesize(const Matrix& u, const QsdOptions& opts = {});

/// 139/192 * 4^n - 3 * 2^n + 5/3, exact. Reference arithmetic only; the
/// implemented recursion has a different (larger) bound.
Rational paper_bound(int n);

/// SQiSW bound for the implemented recursion: c_2 = 3,
/// c_k = 4 c_{k-1} + 3 * 2^k, minus the absorption credits enabled in opts.
int64_t implemented_bound(int n, const QsdOptions& opts = {});

}  // namespace sqisw

#endif  // SQISW_QSD_HPP
