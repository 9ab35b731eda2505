// Copyright 2026 The Multisecretary Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSL_SIMULATOR_HPP_
#define MSL_SIMULATOR_HPP_

// Seeded Monte Carlo check on the dynamic program: sample uniform
// valuation paths, run a threshold policy forward, score against the
// hindsight optimum. Per-replicate seeds derive from the master seed
// by a counter-based split, so results are independent of scheduling
// and bit-identical across reruns and thread counts.

#include <cstdint>
#include <string>
#include <vector>

#include "msl/dp_engine.hpp"

namespace msl {

// The generator is splitmix64 with draws mapped to [0,1) from the
// top 53 bits. Versioned so published numbers stay reproducible.
inline constexpr const char* kGeneratorVersion = "splitmix64/53bit-v1";

uint64_t splitmix64_next(uint64_t& state);
uint64_t derive_seed(uint64_t master_seed, uint64_t counter);

enum class SimPolicyKind { kOptimal, kMyopic, kFixedThreshold };

// Policy selector for a simulation run. Table policies hire when the
// valuation exceeds 1 - p[t][w]; a fixed threshold hires above theta.
// Boundaries override in all cases: w = t hires, w = 0 rejects.
struct SimPolicy {
  SimPolicyKind kind = SimPolicyKind::kOptimal;
  double theta = 0.0;                 // fixed-threshold only
  const DpTables* tables = nullptr;   // table policies only

  static SimPolicy from_tables(const DpTables& tables);
  static SimPolicy fixed(double theta);
  std::string name() const;
};

struct SimConfig {
  int n = 0;
  int k = 0;
  SimPolicy policy;
  long replicates = 1;
  uint64_t seed = 0;
  int threads = 1;
};

struct SimSummary {
  double mean_regret = 0.0;
  double std_error = 0.0;
  double mean_hires = 0.0;
  double mean_mistakes = 0.0;
  long replicates = 0;
};

struct PathResult {
  int hires = 0;
  double value = 0.0;
  int mistakes = 0;  // realized Type I + Type II events
};

// n independent uniform [0,1) draws, reproducible from the seed.
std::vector<double> sample_path(int n, uint64_t seed);

// Run the policy over the path with k positions; candidates are seen
// in path order with t = n, n-1, ..., 1 remaining. Always fills all
// k positions (w = t forces hires).
PathResult run_policy(const std::vector<double>& path,
                      const SimPolicy& policy, int k);

// Sum of the k largest valuations in the path.
double hindsight_value(const std::vector<double>& path, int k);

// Mean and standard error of (hindsight - policy value) over the
// configured replicates. Deterministic given (config, seed).
SimSummary estimate_regret(const SimConfig& config);

// {n, k, policy, replicates, seed, mean_regret, std_error,
//  mean_mistakes, generator_version} as one JSON object.
std::string summary_to_json(const SimConfig& config,
                            const SimSummary& summary);

}  // namespace msl

#endif  // MSL_SIMULATOR_HPP_
