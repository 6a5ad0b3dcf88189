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

#include "sqisw/numopt.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "sqisw/optim.hpp"
#include "sqisw/prune.hpp"
#include "sqisw/rng.hpp"

namespace sqisw {

namespace {

int qubit_count_for(const Matrix& target) {
  int n = 0;
  while ((Eigen::Index{1} << n) < target.rows()) ++n;
  if ((Eigen::Index{1} << n) != target.rows() || target.rows() != target.cols())
    throw std::invalid_argument("numopt: target dimension not a power of two");
  return n;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results are
/// indexed, so the merge is independent of completion order.
template <typename Fn>
void parallel_for(int count, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

StructureRecord fit_structure_to_target(int n_gates,
                                        const CircuitStructure& s,
                                        const Matrix& target,
                                        const OptimizerConfig& cfg) {
  StructureRecord rec;
  rec.n_gates = n_gates;
  rec.structure = s;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto [params, err] = fit_parameters(s, target, cfg, r);
    rec.restarts_used = r + 1;
    if (err < rec.best_error) {
      rec.best_error = err;
      rec.best_params = std::move(params);
    }
    if (rec.best_error <= cfg.epsilon) break;
  }
  return rec;
}

}  // namespace

double SearchReport::best_for(int n_gates) const {
  double best = 1.0;
  for (const StructureRecord& r : records)
    if (r.n_gates == n_gates) best = std::min(best, r.best_error);
  return best;
}

std::pair<std::vector<double>, double> fit_parameters(
    const CircuitStructure& s, const Matrix& target,
    const OptimizerConfig& cfg, int restart_index) {
  const int n = qubit_count_for(target);
  const optim::CircuitTemplate t = optim::CircuitTemplate::for_structure(s, n);

  Rng rng(Rng::derive(cfg.seed, 0x5ea6c4, static_cast<uint64_t>(restart_index)));
  std::vector<double> x0(t.param_count);
  for (double& v : x0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);

  optim::MinimizeOptions mo;
  mo.max_iterations = cfg.max_iterations;
  mo.target_value = cfg.epsilon / 10.0;
  optim::MinimizeResult res = optim::minimize(t, target, std::move(x0), mo);
  return {std::move(res.params), res.value};
}

SearchResult toffoli_search(int n_min, int n_max, const OptimizerConfig& cfg) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("toffoli_search: bad gate range");
  const Matrix& target = gates::TOFFOLI();
  SearchResult out;
  for (int N = n_min; N <= n_max && !out.found; ++N) {
    const std::vector<CircuitStructure> structs = enumerate_pruned(N);
    std::vector<StructureRecord> recs(structs.size());
    parallel_for(static_cast<int>(structs.size()), cfg.threads, [&](int i) {
      OptimizerConfig job = cfg;
      job.seed = Rng::derive(cfg.seed, static_cast<uint64_t>(N),
                             static_cast<uint64_t>(i));
      recs[i] = fit_structure_to_target(N, structs[i], target, job);
    });
    for (StructureRecord& rec : recs) {
      if (!out.found && rec.best_error <= cfg.epsilon) {
        out.found = true;
        out.n_gates = N;
        out.structure = rec.structure;
        out.error = rec.best_error;
        const SlotLayout layout = SlotLayout::for_structure(rec.structure, 3);
        out.circuit = instantiate(rec.structure, rec.best_params, layout);
      }
      out.report.records.push_back(std::move(rec));
    }
  }
  return out;
}

SearchResult average_error_search(int n_min, int n_max,
                                  const OptimizerConfig& cfg) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("average_error_search: bad gate range");
  if (cfg.haar_samples < 1)
    throw std::invalid_argument("average_error_search: haar_samples >= 1");
  std::vector<Matrix> targets;
  targets.reserve(cfg.haar_samples);
  for (int t = 0; t < cfg.haar_samples; ++t)
    targets.push_back(
        haar_random_unitary(8, Rng::derive(cfg.seed, 0x7a23, t)).matrix());

  SearchResult out;
  for (int N = n_min; N <= n_max && !out.found; ++N) {
    const std::vector<CircuitStructure> structs = enumerate_pruned(N);
    std::vector<StructureRecord> recs(structs.size());
    parallel_for(static_cast<int>(structs.size()), cfg.threads, [&](int i) {
      StructureRecord rec;
      rec.n_gates = N;
      rec.structure = structs[i];
      double sum = 0.0;
      for (size_t t = 0; t < targets.size(); ++t) {
        OptimizerConfig job = cfg;
        job.seed = Rng::derive(cfg.seed, static_cast<uint64_t>(N),
                               static_cast<uint64_t>(i), t);
        const StructureRecord one =
            fit_structure_to_target(N, structs[i], targets[t], job);
        sum += one.best_error;
        rec.restarts_used += one.restarts_used;
      }
      rec.best_error = sum / static_cast<double>(targets.size());
      recs[i] = std::move(rec);
    });
    for (StructureRecord& rec : recs) {
      if (!out.found && rec.best_error <= cfg.epsilon) {
        out.found = true;
        out.n_gates = N;
        out.structure = rec.structure;
        out.error = rec.best_error;
      }
      out.report.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace sqisw
