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

#ifndef SQISW_SYNTH2Q_HPP
#define SQISW_SYNTH2Q_HPP

#include <cstdint>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"

namespace sqisw {

/// Reconstruction tolerance for exact 2-qubit synthesis.
inline constexpr double kSynth2qTol = 1e-9;

/// Restart and iteration budget for the parameter solver. Exceeding it on a
/// feasible template signals a cost-classification bug and throws.
inline constexpr int kSynth2qRestarts = 32;
inline constexpr int kSynth2qIterations = 2000;

struct TwoQubitSynthesis {
  Circuit circuit;  // structure: slot pair, then (SQiSW, slot pair)^count
  int sqisw_count = 0;
  double residual_error = 0.0;
};

/// target ~ delta * evaluate(circuit): the diagonal is applied last.
struct DiagonalRemainderSynthesis {
  Circuit circuit;  // exactly 2 SQiSW
  Matrix delta;     // 4x4 diagonal unitary
  double residual_error = 0.0;

  Matrix reconstruct() const;
};

/// Synthesizes an arbitrary 2-qubit gate with exactly sqisw_cost(u) SQiSW
/// gates plus single-qubit gates, to kSynth2qTol. The returned circuit
/// carries a global phase so evaluate() matches u including phase.
/// Throws std::runtime_error on convergence failure.
TwoQubitSynthesis synthesize_two_qubit(const UnitaryMatrix& u,
                                       uint64_t seed = 7);
TwoQubitSynthesis synthesize_two_qubit(const Matrix& u, uint64_t seed = 7);

/// Synthesizes u as delta * (2-SQiSW circuit) with delta diagonal.
DiagonalRemainderSynthesis synthesize_with_diagonal(const UnitaryMatrix& u,
                                                    uint64_t seed = 7);
DiagonalRemainderSynthesis synthesize_with_diagonal(const Matrix& u,
                                                    uint64_t seed = 7);

/// Synthesizes a diagonal 2-qubit unitary with at most 2 SQiSW gates
/// (its interaction coefficients lie on an axis, inside W').
Circuit synthesize_diagonal(const Matrix& delta, uint64_t seed = 7);

}  // namespace sqisw

#endif  // SQISW_SYNTH2Q_HPP
