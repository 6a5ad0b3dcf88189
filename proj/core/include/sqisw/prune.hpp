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

#ifndef SQISW_PRUNE_HPP
#define SQISW_PRUNE_HPP

#include <cstdint>
#include <vector>

#include "sqisw/circuit.hpp"
#include "sqisw/rational.hpp"

namespace sqisw {

/// Orbit of a 3-qubit structure under the 6 qubit relabelings, re-normalized
/// to i < j, deduplicated and sorted.
std::vector<CircuitStructure> rearrangements(const CircuitStructure& c);

/// Gate order reversed.
CircuitStructure reverse_structure(const CircuitStructure& c);

/// Lexicographic minimum over the combined orbit (relabelings x optional
/// reversion, at most 12 elements). Idempotent; constant on each closure.
CircuitStructure canonical_representative(const CircuitStructure& c);

/// One representative per equivalence closure of the 3^N structures, in
/// lexicographic order. Throws std::length_error for N > 15.
std::vector<CircuitStructure> enumerate_pruned(int N);

struct ClosureCensus {
  int N = 0;
  int64_t count3 = 0;
  int64_t count6 = 0;
  int64_t count12 = 0;

  int64_t total_structures() const {
    return 3 * count3 + 6 * count6 + 12 * count12;
  }
  int64_t closure_count() const { return count3 + count6 + count12; }
};

/// Exhaustive orbit partition of all 3^N structures (N >= 1).
ClosureCensus closure_census(int N);

/// The closure-count formula appears in two inequivalent forms for odd N;
/// both are exposed and the discrepancy is reported, not hidden.
enum class Theorem3Variant { STATEMENT, PROOF };

/// STATEMENT: 1/12 * 3^N + 3^{floor((N-1)/2)} + 1/4.
/// PROOF (odd N): 1/12 * 3^N + 1/2 * 3^{floor(N/2)} + 1/4; even N agrees
/// with STATEMENT via the shared term 3^{N/2 - 1}.
Rational theorem3_prediction(int N, Theorem3Variant v);

}  // namespace sqisw

#endif  // SQISW_PRUNE_HPP
