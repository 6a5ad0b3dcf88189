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

#ifndef SQISW_CIRCUIT_HPP
#define SQISW_CIRCUIT_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqisw/matcore.hpp"

namespace sqisw {

/// Unordered qubit pair, stored with a < b.
struct QubitPair {
  int a = 0;
  int b = 1;

  QubitPair() = default;
  QubitPair(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {
    if (i == j) throw std::invalid_argument("QubitPair: equal qubits");
  }
  friend auto operator<=>(const QubitPair&, const QubitPair&) = default;
};

/// Ordered sequence of 2-qubit gate positions; single-qubit gates ignored.
using CircuitStructure = std::vector<QubitPair>;

enum class GateKind { Sqisw, SingleQubit, Fixed };

struct GatePlacement {
  GateKind kind = GateKind::SingleQubit;
  std::vector<int> targets;
  /// ZYZ Euler angles (theta, phi, lambda) for SingleQubit:
  /// Rz(phi) Ry(theta) Rz(lambda).
  std::array<double, 3> params{};
  Matrix fixed;  // Fixed only, dim 2^arity; targets in big-endian gate order

  static GatePlacement sqisw(int i, int j);
  static GatePlacement single(int q, double theta, double phi, double lambda);
  static GatePlacement fixed_gate(Matrix m, std::vector<int> targets);
};

/// Gate sequence in temporal order (gates[0] applied first).
struct Circuit {
  int n_qubits = 0;
  std::vector<GatePlacement> gates;
  double global_phase = 0.0;
};

/// 2x2 matrix Rz(phi) Ry(theta) Rz(lambda).
Matrix single_qubit_u(double theta, double phi, double lambda);

/// Recovers ZYZ angles and a phase such that
/// m = e^{i phase} Rz(phi) Ry(theta) Rz(lambda).
void zyz_angles(const Matrix& m, double& theta, double& phi, double& lambda,
                double& phase);

/// Embeds a gate of arity k (dim 2^k) acting on the given target qubits into
/// an n-qubit operator. Qubit 0 is the most significant state-index bit; the
/// gate's own qubit 0 maps to targets[0].
Matrix embed_operator(const Matrix& g, const std::vector<int>& targets, int n);

/// Embedding of a 4x4 gate on the ordered pair (i, j), i < j.
Matrix embed_two_qubit(const Matrix& g, int i, int j, int n);

/// Product of embedded gates in temporal order (later gates on the left),
/// times e^{i global_phase}.
Matrix evaluate(const Circuit& c);

/// Single-qubit slot layout for a structure template: one slot per qubit at
/// the start, then one slot on each of the two qubits after every 2-qubit
/// gate. 3 parameters (ZYZ) per slot.
struct SlotLayout {
  int n_qubits = 0;
  /// Qubit carrying each slot, in temporal order.
  std::vector<int> slot_qubits;

  static SlotLayout for_structure(const CircuitStructure& s, int n_qubits);
  int slot_count() const { return static_cast<int>(slot_qubits.size()); }
  int param_count() const { return 3 * slot_count(); }
};

/// Builds the circuit for a structure with the given slot parameters
/// (3 per slot, in slot order).
Circuit instantiate(const CircuitStructure& s, const std::vector<double>& params,
                    const SlotLayout& layout);

CircuitStructure structure_of(const Circuit& c);

/// Circuit file format:
/// {"qubits": n, "gates": [{"kind":"sqisw","targets":[i,j]} |
///  {"kind":"u1","target":q,"params":[theta,phi,lambda]}], "global_phase": p}
/// Fixed gates are serialized as {"kind":"fixed","targets":[...],"re":...,"im":...}.
void write_circuit_json(std::ostream& out, const Circuit& c);
Circuit read_circuit_json(std::istream& in);
Circuit read_circuit_json(const std::string& text);

/// OpenQASM-3 text with sqisw defined from stdgates primitives.
std::string to_qasm3(const Circuit& c);

}  // namespace sqisw

#endif  // SQISW_CIRCUIT_HPP
