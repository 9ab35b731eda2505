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

#include "msl/walk_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msl/core_math.hpp"
#include "msl/io.hpp"

namespace msl {

namespace {

// Mass below this carries no weight at the tolerances this module is
// checked against; skipping it keeps the mistake accounting O(n^1.5)
// beta evaluations instead of O(n^2).
constexpr double kNegligibleMass = 1e-18;

void check_pair(const WalkDistribution& dist, const DpTables& tables) {
  if (dist.n > tables.n_max) {
    throw std::domain_error("walk_analysis: tables do not cover the walk");
  }
}

}  // namespace

WalkDistribution forward_distribution(const DpTables& tables, int n, int k) {
  if (k < 0 || k > n) {
    throw std::domain_error("forward_distribution: requires 0 <= k <= n");
  }
  if (n > tables.n_max) {
    throw std::domain_error("forward_distribution: n exceeds tables.n_max");
  }
  WalkDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.mass.resize(n + 1);
  for (int t = 0; t <= n; ++t) {
    dist.mass[t].assign(std::min(t, k) + 1, 0.0);
  }
  dist.mass[n][k] = 1.0;
  for (int t = n; t >= 1; --t) {
    const int w_hi = std::min(t, k);
    for (int w = 0; w <= w_hi; ++w) {
      const double m = dist.mass[t][w];
      if (m == 0.0) continue;
      const double p = tables.prob(t, w);
      if (w >= 1) dist.mass[t - 1][w - 1] += m * p;
      if (w <= t - 1) dist.mass[t - 1][w] += m * (1.0 - p);
    }
  }
  return dist;
}

WalkMoments walk_moments(const WalkDistribution& dist) {
  WalkMoments moments;
  const int n = dist.n;
  moments.mean.resize(n + 1);
  moments.variance.resize(n + 1);
  for (int t = 0; t <= n; ++t) {
    double mean = 0.0;
    for (int w = 0; w < static_cast<int>(dist.mass[t].size()); ++w) {
      mean += dist.mass[t][w] * w;
    }
    double var = 0.0;
    for (int w = 0; w < static_cast<int>(dist.mass[t].size()); ++w) {
      const double d = w - mean;
      var += dist.mass[t][w] * d * d;
    }
    moments.mean[t] = mean;
    moments.variance[t] = var;
  }
  return moments;
}

double reference_variance(int n, int t) {
  if (t < 0 || t > n) {
    throw std::domain_error("reference_variance: requires 0 <= t <= n");
  }
  return static_cast<double>(n - t) / 4.0;
}

double step_covariance(const WalkDistribution& dist, const DpTables& tables,
                       int t) {
  check_pair(dist, tables);
  if (t < 1 || t > dist.n) {
    throw std::domain_error("step_covariance: requires 1 <= t <= n");
  }
  double cov = 0.0;
  for (int w = 0; w < static_cast<int>(dist.mass[t].size()); ++w) {
    const double m = dist.mass[t][w];
    if (m == 0.0) continue;
    cov += m * (0.5 - tables.prob(t, w)) * (w - t / 2.0);
  }
  return cov;
}

double mistake_probability(int t, int w, double p) {
  if (w < 0 || w > t || t < 1) {
    throw std::domain_error("mistake_probability: requires 0 <= w <= t");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("mistake_probability: p must lie in [0, 1]");
  }
  if (w == 0 || w == t) return 0.0;
  const double a = static_cast<double>(t - w);
  const double b = static_cast<double>(w);
  const double y = 1.0 - p;
  // int_0^y F(v) dv, with F the CDF of the w-th largest of t-1 uniforms.
  const double cdf_int = orderstat_cdf_integral(y, a, b);
  const double type2 = cdf_int;
  // int_y^1 (1 - F) dv = mu_{t-1,w} - (y - int_0^y F).
  const double type1 = mu(t - 1, w) - (y - cdf_int);
  return type1 + type2;
}

MistakeStats expected_mistakes(const WalkDistribution& dist,
                               const DpTables& tables) {
  check_pair(dist, tables);
  MistakeStats stats;
  stats.per_period.assign(dist.n + 1, 0.0);
  for (int t = 1; t <= dist.n; ++t) {
    double sum = 0.0;
    for (int w = 1; w < std::min(t, static_cast<int>(dist.mass[t].size()));
         ++w) {
      const double m = dist.mass[t][w];
      if (m < kNegligibleMass) continue;
      sum += m * mistake_probability(t, w, tables.prob(t, w));
    }
    stats.per_period[t] = sum;
    stats.total += sum;
  }
  return stats;
}

std::string walk_to_csv(const WalkDistribution& dist, const DpTables& tables) {
  check_pair(dist, tables);
  const WalkMoments moments = walk_moments(dist);
  const MistakeStats mistakes = expected_mistakes(dist, tables);
  std::string out = "# msl-schema 1\n";
  out += "t,mean,variance,variance_bound,covariance,mistake_probability\n";
  for (int t = 0; t <= dist.n; ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_double(moments.mean[t]);
    out += ',';
    out += format_double(moments.variance[t]);
    out += ',';
    out += format_double(reference_variance(dist.n, t));
    out += ',';
    out += format_double(t >= 1 ? step_covariance(dist, tables, t) : 0.0);
    out += ',';
    out += format_double(mistakes.per_period[t]);
    out += '\n';
  }
  return out;
}

}  // namespace msl
