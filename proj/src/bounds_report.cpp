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

#include "msl/bounds_report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "msl/dp_engine.hpp"
#include "msl/io.hpp"

namespace msl {

double upper_bound(int n) {
  if (n < 1) throw std::domain_error("upper_bound: n must be >= 1");
  return std::log(n + 1.0) / 8.0;
}

double lower_bound(int n) {
  if (n < 16 || n % 2 != 0) {
    throw std::domain_error(
        "lower_bound: asserted only for even n >= 16 at k = n/2");
  }
  return std::log(static_cast<double>(n)) / 16.0 - 0.25;
}

KRule KRule::half() { return KRule{KRuleKind::kHalf, 0, 0.5}; }

KRule KRule::fixed(int k) { return KRule{KRuleKind::kFixed, k, 0.0}; }

KRule KRule::with_ratio(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::domain_error("KRule: ratio must lie in (0, 1)");
  }
  return KRule{KRuleKind::kRatio, 0, rho};
}

int KRule::k_for(int n) const {
  switch (kind) {
    case KRuleKind::kHalf:
      if (n % 2 != 0) {
        throw std::domain_error("KRule: half rule requires even n");
      }
      return n / 2;
    case KRuleKind::kFixed:
      return fixed_k;
    case KRuleKind::kRatio:
      return static_cast<int>(std::lround(ratio * n));
  }
  return 0;
}

std::string KRule::name() const {
  switch (kind) {
    case KRuleKind::kHalf:
      return "half";
    case KRuleKind::kFixed:
      return "fixed:" + std::to_string(fixed_k);
    case KRuleKind::kRatio:
      return "ratio:" + format_double(ratio);
  }
  return "unknown";
}

RegretCurve sweep(const std::vector<int>& grid, const KRule& k_rule) {
  RegretCurve curve;
  if (grid.empty()) return curve;
  std::map<int, int> k_by_n;
  for (int n : grid) {
    if (n < 2) throw std::domain_error("sweep: grid values must be >= 2");
    const int k = k_rule.k_for(n);
    if (k < 1 || k > n - 1) {
      throw std::domain_error("sweep: k rule must yield 1 <= k <= n - 1");
    }
    k_by_n[n] = k;
  }
  const int n_max = k_by_n.rbegin()->first;

  // Single solve per policy; grid entries are read off diagonal rows.
  std::map<int, double> r_opt, r_myo;
  auto capture = [&](std::map<int, double>& sink) {
    return [&k_by_n, &sink](int t, std::span<const double> r_row,
                            std::span<const double>) {
      auto it = k_by_n.find(t);
      if (it != k_by_n.end()) sink[t] = r_row[it->second];
    };
  };
  solve_streaming(PolicyKind::kOptimal, n_max, capture(r_opt));
  solve_streaming(PolicyKind::kMyopic, n_max, capture(r_myo));

  for (const auto& [n, k] : k_by_n) {
    RegretCurveEntry entry;
    entry.n = n;
    entry.k = k;
    entry.regret_optimal = r_opt.at(n);
    entry.regret_myopic = r_myo.at(n);
    entry.upper = upper_bound(n);
    entry.lower_asserted = (2 * k == n && n >= 16);
    entry.lower = entry.lower_asserted ? lower_bound(n) : 0.0;
    curve.entries.push_back(entry);
  }
  return curve;
}

GrowthFit growth_fit(const RegretCurve& curve) {
  std::set<int> distinct;
  for (const auto& entry : curve.entries) distinct.insert(entry.n);
  if (distinct.size() < 3) {
    throw std::domain_error("growth_fit: need >= 3 entries with distinct n");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(curve.entries.size());
  for (const auto& entry : curve.entries) {
    const double x = std::log(static_cast<double>(entry.n));
    const double y = entry.regret_optimal;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  GrowthFit fit;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  for (const auto& entry : curve.entries) {
    const double predicted =
        fit.slope * std::log(static_cast<double>(entry.n)) + fit.intercept;
    fit.max_residual = std::max(
        fit.max_residual, std::fabs(entry.regret_optimal - predicted));
  }
  return fit;
}

BoundsReport build_report(const RegretCurve& curve) {
  BoundsReport report;
  report.curve = curve;
  for (const auto& entry : curve.entries) {
    const std::string tag = "n=" + std::to_string(entry.n) +
                            ",k=" + std::to_string(entry.k);
    if (entry.regret_optimal > entry.regret_myopic + 1e-12) {
      report.violations.push_back(tag + ": optimal regret above myopic");
    }
    if (entry.regret_optimal > entry.upper) {
      report.violations.push_back(tag + ": upper bound violated");
    }
    if (entry.lower_asserted && entry.regret_optimal < entry.lower) {
      report.violations.push_back(tag + ": lower bound violated");
    }
  }
  std::set<int> distinct;
  for (const auto& entry : curve.entries) distinct.insert(entry.n);
  if (distinct.size() >= 3) {
    const GrowthFit fit = growth_fit(curve);
    report.fitted_slope = fit.slope;
    report.fitted_intercept = fit.intercept;
    report.fit_residual = fit.max_residual;
  }
  return report;
}

std::string curve_to_csv(const RegretCurve& curve) {
  std::string out = "# msl-schema 1\n";
  out += "n,k,regret_optimal,regret_myopic,upper_bound,lower_bound\n";
  for (const auto& entry : curve.entries) {
    out += std::to_string(entry.n);
    out += ',';
    out += std::to_string(entry.k);
    out += ',';
    out += format_double(entry.regret_optimal);
    out += ',';
    out += format_double(entry.regret_myopic);
    out += ',';
    out += format_double(entry.upper);
    out += ',';
    if (entry.lower_asserted) out += format_double(entry.lower);
    out += '\n';
  }
  return out;
}

RegretCurve curve_from_csv(const std::string& text) {
  RegretCurve curve;
  bool header = true;
  for (const auto& row : parse_csv(text)) {
    if (header) {
      header = false;
      continue;
    }
    if (row.size() < 5) throw std::runtime_error("curve_from_csv: short row");
    RegretCurveEntry entry;
    entry.n = static_cast<int>(parse_double(row[0]));
    entry.k = static_cast<int>(parse_double(row[1]));
    entry.regret_optimal = parse_double(row[2]);
    entry.regret_myopic = parse_double(row[3]);
    entry.upper = parse_double(row[4]);
    entry.lower_asserted = row.size() > 5 && !row[5].empty();
    entry.lower = entry.lower_asserted ? parse_double(row[5]) : 0.0;
    curve.entries.push_back(entry);
  }
  return curve;
}

namespace {

nlohmann::ordered_json entry_to_json(const RegretCurveEntry& entry) {
  nlohmann::ordered_json j;
  j["n"] = entry.n;
  j["k"] = entry.k;
  j["regret_optimal"] = entry.regret_optimal;
  j["regret_myopic"] = entry.regret_myopic;
  j["upper_bound"] = entry.upper;
  if (entry.lower_asserted) {
    j["lower_bound"] = entry.lower;
  } else {
    j["lower_bound"] = nullptr;  // not asserted at this (n, k)
  }
  return j;
}

}  // namespace

std::string report_to_json(const BoundsReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["grid"] = report.curve.grid_spec;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& entry : report.curve.entries) {
    j["entries"].push_back(entry_to_json(entry));
  }
  j["fitted_slope"] = report.fitted_slope;
  j["fitted_intercept"] = report.fitted_intercept;
  j["fit_residual"] = report.fit_residual;
  j["violations"] = report.violations;
  return j.dump(2) + "\n";
}

BoundsReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BoundsReport report;
  report.curve.grid_spec = j.at("grid").get<std::string>();
  for (const auto& e : j.at("entries")) {
    RegretCurveEntry entry;
    entry.n = e.at("n").get<int>();
    entry.k = e.at("k").get<int>();
    entry.regret_optimal = e.at("regret_optimal").get<double>();
    entry.regret_myopic = e.at("regret_myopic").get<double>();
    entry.upper = e.at("upper_bound").get<double>();
    entry.lower_asserted = !e.at("lower_bound").is_null();
    entry.lower =
        entry.lower_asserted ? e.at("lower_bound").get<double>() : 0.0;
    report.curve.entries.push_back(entry);
  }
  report.fitted_slope = j.at("fitted_slope").get<double>();
  report.fitted_intercept = j.at("fitted_intercept").get<double>();
  report.fit_residual = j.at("fit_residual").get<double>();
  for (const auto& v : j.at("violations")) {
    report.violations.push_back(v.get<std::string>());
  }
  return report;
}

}  // namespace msl
