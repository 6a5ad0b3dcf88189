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

#ifndef SQISW_NUMOPT_HPP
#define SQISW_NUMOPT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sqisw/circuit.hpp"
#include "sqisw/matcore.hpp"

namespace sqisw {

struct OptimizerConfig {
  int restarts = 10;
  int max_iterations = 2000;
  double epsilon = 1e-6;
  uint64_t seed = 1;
  int haar_samples = 100;
  int threads = 1;
};

/// One (N, structure) record. For the Toffoli search best_error is the best
/// over restarts; for the average-error search it is the mean over Haar
/// targets of each target's best-over-restarts error.
struct StructureRecord {
  int n_gates = 0;
  CircuitStructure structure;
  double best_error = 1.0;
  std::vector<double> best_params;
  int restarts_used = 0;
};

struct SearchReport {
  std::vector<StructureRecord> records;

  /// Min best_error over records with the given gate count.
  double best_for(int n_gates) const;
};

struct SearchResult {
  bool found = false;
  int n_gates = 0;
  CircuitStructure structure;
  Circuit circuit;  // instantiated winner (Toffoli search only)
  double error = 1.0;
  SearchReport report;
};

/// Single seeded restart of the slot-parameter fit for a structure.
/// Deterministic in (cfg.seed, restart_index); the returned error never
/// exceeds the error at the random initialization.
std::pair<std::vector<double>, double> fit_parameters(
    const CircuitStructure& s, const Matrix& target,
    const OptimizerConfig& cfg, int restart_index);

/// Ascending-N scan over pruned structures; returns the first circuit
/// reaching E <= cfg.epsilon against Toffoli, or found=false.
SearchResult toffoli_search(int n_min, int n_max, const OptimizerConfig& cfg);

/// As above but scoring each structure by its average best error over
/// cfg.haar_samples Haar-random 3-qubit targets.
SearchResult average_error_search(int n_min, int n_max,
                                  const OptimizerConfig& cfg);

}  // namespace sqisw

#endif  // SQISW_NUMOPT_HPP
