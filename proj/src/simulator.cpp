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

#include "msl/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "msl/io.hpp"

namespace msl {

uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master_seed, uint64_t counter) {
  uint64_t state = master_seed ^ (0xD1B54A32D192ED03ULL * (counter + 1));
  return splitmix64_next(state);
}

SimPolicy SimPolicy::from_tables(const DpTables& tables) {
  SimPolicy policy;
  policy.kind = tables.kind == PolicyKind::kOptimal ? SimPolicyKind::kOptimal
                                                    : SimPolicyKind::kMyopic;
  policy.tables = &tables;
  return policy;
}

SimPolicy SimPolicy::fixed(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("SimPolicy: theta must lie in [0, 1]");
  }
  SimPolicy policy;
  policy.kind = SimPolicyKind::kFixedThreshold;
  policy.theta = theta;
  return policy;
}

std::string SimPolicy::name() const {
  switch (kind) {
    case SimPolicyKind::kOptimal:
      return "optimal";
    case SimPolicyKind::kMyopic:
      return "myopic";
    case SimPolicyKind::kFixedThreshold:
      return "fixed:" + format_double(theta);
  }
  return "unknown";
}

std::vector<double> sample_path(int n, uint64_t seed) {
  if (n < 1) throw std::domain_error("sample_path: n must be >= 1");
  std::vector<double> path(n);
  uint64_t state = seed;
  for (int i = 0; i < n; ++i) {
    path[i] = static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
  }
  return path;
}

namespace {

// Fenwick tree over value ranks; supports order-statistic queries for
// the hindsight benchmark among the not-yet-interviewed candidates.
class RankTree {
 public:
  explicit RankTree(int size) : tree_(size + 1, 0) {}

  void add(int rank, int delta) {
    for (int i = rank + 1; i < static_cast<int>(tree_.size()); i += i & -i) {
      tree_[i] += delta;
    }
  }

  // Rank of the q-th smallest present element (q >= 1).
  int kth_smallest(int q) const {
    int pos = 0;
    int mask = 1;
    while (2 * mask < static_cast<int>(tree_.size())) mask *= 2;
    for (; mask > 0; mask /= 2) {
      const int next = pos + mask;
      if (next < static_cast<int>(tree_.size()) && tree_[next] < q) {
        pos = next;
        q -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<int> tree_;
};

std::vector<int> value_ranks(const std::vector<double>& path) {
  const int n = static_cast<int>(path.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return path[a] < path[b]; });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  return rank;
}

double threshold_for(const SimPolicy& policy, int t, int w) {
  if (policy.kind == SimPolicyKind::kFixedThreshold) return policy.theta;
  return 1.0 - policy.tables->prob(t, w);
}

}  // namespace

PathResult run_policy(const std::vector<double>& path,
                      const SimPolicy& policy, int k) {
  const int n = static_cast<int>(path.size());
  if (k < 0 || k > n) {
    throw std::domain_error("run_policy: requires 0 <= k <= path length");
  }
  if (policy.kind != SimPolicyKind::kFixedThreshold) {
    if (policy.tables == nullptr || policy.tables->n_max < n) {
      throw std::domain_error("run_policy: tables do not cover the horizon");
    }
  }
  const std::vector<int> ranks = value_ranks(path);
  std::vector<double> value_by_rank(n);
  for (int i = 0; i < n; ++i) value_by_rank[ranks[i]] = path[i];
  RankTree future(n);
  for (int i = 1; i < n; ++i) future.add(ranks[i], 1);

  PathResult result;
  int w = k;
  for (int i = 0; i < n; ++i) {
    const int t = n - i;
    const double v = path[i];
    bool hired;
    if (w == t) {
      hired = true;
    } else if (w == 0) {
      hired = false;
    } else {
      hired = v > threshold_for(policy, t, w);
    }
    if (w >= 1 && w <= t - 1) {
      // Benchmark: w-th largest of the t-1 future candidates.
      const int rank = future.kth_smallest(t - 1 - w + 1);
      const bool should_hire = v > value_by_rank[rank];
      if (hired != should_hire) ++result.mistakes;
    }
    if (hired) {
      result.value += v;
      ++result.hires;
      --w;
    }
    if (i + 1 < n) future.add(ranks[i + 1], -1);
  }
  return result;
}

double hindsight_value(const std::vector<double>& path, int k) {
  const int n = static_cast<int>(path.size());
  if (k < 0 || k > n) {
    throw std::domain_error("hindsight_value: requires 0 <= k <= path length");
  }
  if (k == 0) return 0.0;
  std::vector<double> sorted(path);
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end(),
                   std::greater<double>());
  return std::accumulate(sorted.begin(), sorted.begin() + k, 0.0);
}

SimSummary estimate_regret(const SimConfig& config) {
  if (config.n < 1 || config.k < 1 || config.k > config.n) {
    throw std::domain_error("estimate_regret: requires 1 <= k <= n");
  }
  if (config.replicates < 1) {
    throw std::domain_error("estimate_regret: replicates must be >= 1");
  }
  const long reps = config.replicates;
  std::vector<double> regrets(reps);
  std::vector<int> hires(reps), mistakes(reps);

  auto run_range = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const std::vector<double> path =
          sample_path(config.n, derive_seed(config.seed, i));
      const PathResult result = run_policy(path, config.policy, config.k);
      regrets[i] = hindsight_value(path, config.k) - result.value;
      hires[i] = result.hires;
      mistakes[i] = result.mistakes;
    }
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1 || reps < 2 * threads) {
    run_range(0, reps);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (reps + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      const long begin = i * chunk;
      const long end = std::min(reps, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& worker : pool) worker.join();
  }

  // Reduction in replicate-index order, independent of scheduling.
  SimSummary summary;
  summary.replicates = reps;
  double sum = 0.0;
  for (long i = 0; i < reps; ++i) sum += regrets[i];
  summary.mean_regret = sum / reps;
  double sq = 0.0;
  for (long i = 0; i < reps; ++i) {
    const double d = regrets[i] - summary.mean_regret;
    sq += d * d;
  }
  summary.std_error =
      reps > 1 ? std::sqrt(sq / (reps - 1) / reps) : 0.0;
  summary.mean_hires =
      std::accumulate(hires.begin(), hires.end(), 0.0) / reps;
  summary.mean_mistakes =
      std::accumulate(mistakes.begin(), mistakes.end(), 0.0) / reps;
  return summary;
}

std::string summary_to_json(const SimConfig& config,
                            const SimSummary& summary) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = config.n;
  j["k"] = config.k;
  j["policy"] = config.policy.name();
  j["replicates"] = summary.replicates;
  j["seed"] = config.seed;
  j["mean_regret"] = summary.mean_regret;
  j["std_error"] = summary.std_error;
  j["mean_hires"] = summary.mean_hires;
  j["mean_mistakes"] = summary.mean_mistakes;
  j["generator_version"] = kGeneratorVersion;
  return j.dump(2) + "\n";
}

}  // namespace msl
