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

#ifndef MSL_BOUNDS_REPORT_HPP_
#define MSL_BOUNDS_REPORT_HPP_

// Sweep exact regret over a grid of horizons, evaluate the analytic
// log bounds, fit the empirical growth rate, and assemble reports.
// One streaming solve at the largest grid value covers every entry:
// states (t, w) for t <= n_max are exactly the smaller subproblems.

#include <string>
#include <vector>

namespace msl {

// Upper regret bound ln(n + 1) / 8, valid for every k.
double upper_bound(int n);

// Lower regret bound ln(n) / 16 - 1/4, asserted only at k = n/2 for
// even n >= 16. Throws std::domain_error outside that range.
double lower_bound(int n);

enum class KRuleKind { kHalf, kFixed, kRatio };

struct KRule {
  KRuleKind kind = KRuleKind::kHalf;
  int fixed_k = 0;     // kFixed
  double ratio = 0.5;  // kRatio

  static KRule half();
  static KRule fixed(int k);
  static KRule with_ratio(double rho);
  int k_for(int n) const;
  std::string name() const;
};

struct RegretCurveEntry {
  int n = 0;
  int k = 0;
  double regret_optimal = 0.0;
  double regret_myopic = 0.0;
  double upper = 0.0;
  double lower = 0.0;          // meaningful only when lower_asserted
  bool lower_asserted = false; // k = n/2, n >= 16 only
};

struct RegretCurve {
  std::vector<RegretCurveEntry> entries;
  std::string grid_spec;  // metadata, e.g. "16:4096:x2"
};

struct BoundsReport {
  RegretCurve curve;
  double fitted_slope = 0.0;      // coefficient of ln n
  double fitted_intercept = 0.0;
  double fit_residual = 0.0;      // max absolute residual
  std::vector<std::string> violations;
};

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Exact regret (optimal and myopic) for each grid n with k from the
// rule. Grid values must be >= 2 and yield 1 <= k <= n - 1.
RegretCurve sweep(const std::vector<int>& grid, const KRule& k_rule);

// Least-squares fit of regret_optimal against ln n. Requires at
// least 3 entries with distinct n.
GrowthFit growth_fit(const RegretCurve& curve);

// Fit plus bound checks; violations lists any entry where
// regret_optimal > upper, regret_optimal > regret_myopic, or an
// asserted lower bound fails. Curves with < 3 entries skip the fit.
BoundsReport build_report(const RegretCurve& curve);

// curve.csv: n, k, regret_optimal, regret_myopic, upper_bound,
// lower_bound (empty field when not asserted).
std::string curve_to_csv(const RegretCurve& curve);
RegretCurve curve_from_csv(const std::string& text);

// report.json: the full BoundsReport with fit metadata.
std::string report_to_json(const BoundsReport& report);
BoundsReport report_from_json(const std::string& text);

}  // namespace msl

#endif  // MSL_BOUNDS_REPORT_HPP_
