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

#ifndef SQISW_WEYL_HPP
#define SQISW_WEYL_HPP

#include <array>
#include <cstdint>

#include "sqisw/matcore.hpp"

namespace sqisw {

/// Tolerance for Weyl-chamber region comparisons.
inline constexpr double kWeylTol = 1e-9;

/// Canonical Weyl-chamber point: pi/4 >= x >= y >= |z|, and z >= 0 when
/// x = pi/4 (all within kWeylTol).
struct InteractionCoefficients {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// U = e^{i phase} * g * (A0 (x) A1) * exp(i (x XX + y YY + z ZZ)) *
///     (B0 (x) B1), with g in {1, i} and the single-qubit factors in SU(2).
/// phase is ~0 for determinant-1 input and carries the global phase
/// otherwise.
struct KAKDecomposition {
  Complex g{1.0, 0.0};
  double phase = 0.0;
  Matrix a0, a1, b0, b1;
  InteractionCoefficients k;

  Matrix reconstruct() const;
};

/// exp(i (x XX + y YY + z ZZ)).
Matrix canonical_interaction(double x, double y, double z);

/// Maps any triple into the canonical Weyl chamber using the three
/// coefficient transformations (pi/2 shifts, pairwise negation, exchange).
/// Idempotent.
InteractionCoefficients canonicalize(double x, double y, double z);
InteractionCoefficients canonicalize(const InteractionCoefficients& k);

InteractionCoefficients interaction_coefficients(const Matrix& u4);
InteractionCoefficients interaction_coefficients(const UnitaryMatrix& u4);

KAKDecomposition kak_decompose(const Matrix& u4);
KAKDecomposition kak_decompose(const UnitaryMatrix& u4);

/// x >= y + |z| (within kWeylTol); expects canonical input.
bool in_w_prime(const InteractionCoefficients& k);

/// Minimal SQiSW count for exact synthesis of a 2-qubit gate:
/// 0 for local gates, 1 exactly at (pi/8, pi/8, 0), 2 inside W', 3 otherwise.
int sqisw_cost(const InteractionCoefficients& k);
int sqisw_cost(const Matrix& u4);

/// Fraction of Haar-random 2-qubit gates with sqisw_cost <= 2.
double haar_w_prime_fraction(int samples, uint64_t seed);

}  // namespace sqisw

#endif  // SQISW_WEYL_HPP
