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

#ifndef MSL_WALK_ANALYSIS_HPP_
#define MSL_WALK_ANALYSIS_HPP_

// Exact forward propagation of the open-positions random walk w(t)
// under a policy table: probability vectors, not samples. Time runs
// t = n, n-1, ..., 0, where t counts candidates not yet interviewed
// (including the current one). Moments, step covariances, and the
// Type I / Type II mistake accounting are all computed from the
// exact mass.

#include <string>
#include <vector>

#include "msl/dp_engine.hpp"

namespace msl {

// Exact distribution of open positions w at each time t. The slice
// for time t is a vector indexed by w = 0..min(t, k); entries outside
// the reachable band max(0, k-(n-t)) <= w <= min(t, k) are zero.
struct WalkDistribution {
  int n = 0;
  int k = 0;
  std::vector<std::vector<double>> mass;  // mass[t][w], t = 0..n

  double at(int t, int w) const {
    if (w < 0 || w >= static_cast<int>(mass[t].size())) return 0.0;
    return mass[t][w];
  }
};

struct WalkMoments {
  std::vector<double> mean;      // E(w(t)), t = 0..n
  std::vector<double> variance;  // Var(w(t)), t = 0..n
};

// Expected Type I + Type II error probabilities per period, and
// their total over the horizon.
struct MistakeStats {
  std::vector<double> per_period;  // indexed by t = 0..n
  double total = 0.0;
};

// Propagate the point mass at (n, k) down to t = 0:
// mass(t-1, w-1) += mass(t, w) p[t][w];
// mass(t-1, w)   += mass(t, w) (1 - p[t][w]).
// Requires k <= n <= tables.n_max.
WalkDistribution forward_distribution(const DpTables& tables, int n, int k);

WalkMoments walk_moments(const WalkDistribution& dist);

// Variance of the fair-coin comparison walk: (n - t) / 4.
double reference_variance(int n, int t);

// E[(1/2 - p[t][w(t)]) (w(t) - t/2)], the covariance of the step
// against the state. Requires 1 <= t <= n and tables covering dist.
double step_covariance(const WalkDistribution& dist, const DpTables& tables,
                       int t);

// Probability of misclassifying the current candidate against the
// hindsight benchmark s_{t-1,w} when hiring above threshold 1 - p:
//   Pr(Type II) = int_0^{1-p} F_{t-1,w}(v) dv
//   Pr(Type I)  = int_{1-p}^1 (1 - F_{t-1,w}(v)) dv,
// both in closed form via incomplete-beta identities. Boundary
// states (w = 0 or w = t) return 0.
double mistake_probability(int t, int w, double p);

// per_period[t] = sum_w mass(t, w) mistake_probability(t, w, p[t][w]).
MistakeStats expected_mistakes(const WalkDistribution& dist,
                               const DpTables& tables);

// Walk dump: CSV with columns
// t, mean, variance, variance_bound, covariance, mistake_probability.
std::string walk_to_csv(const WalkDistribution& dist, const DpTables& tables);

}  // namespace msl

#endif  // MSL_WALK_ANALYSIS_HPP_
