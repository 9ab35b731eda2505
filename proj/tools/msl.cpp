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

// Command-line front end: solve, curve, walk, mistakes, simulate,
// report. All outputs are reproducible given the same flags and seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msl/bounds_report.hpp"
#include "msl/core_math.hpp"
#include "msl/dp_engine.hpp"
#include "msl/io.hpp"
#include "msl/simulator.hpp"
#include "msl/walk_analysis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

struct Options {
  int n = 0;
  int k = -1;  // defaults to n/2 when unset
  std::string policy = "optimal";
  std::string grid = "16:4096:x2";
  std::string k_rule = "half";
  long replicates = 10000;
  uint64_t seed = 0;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  std::string out;  // empty = stdout
  std::string format = "csv";
};

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output path '" + out_path + "'");
  }
  file << payload;
  if (!file) {
    throw std::invalid_argument("failed writing output path '" + out_path +
                                "'");
  }
}

// Grid syntax: "a:b:xS" geometric, "a:b:+d" arithmetic, or an
// explicit comma-separated list.
std::vector<int> parse_grid(const std::string& spec) {
  std::vector<int> grid;
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    std::string token;
    std::istringstream stream(spec);
    while (std::getline(stream, token, ',')) grid.push_back(std::stoi(token));
    return grid;
  }
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::invalid_argument("bad --grid '" + spec + "'");
  }
  const int a = std::stoi(spec.substr(0, c1));
  const int b = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string step = spec.substr(c2 + 1);
  if (step.size() < 2 || (step[0] != 'x' && step[0] != '+')) {
    throw std::invalid_argument("bad --grid step '" + step + "'");
  }
  const int amount = std::stoi(step.substr(1));
  if (amount < 1 || (step[0] == 'x' && amount < 2)) {
    throw std::invalid_argument("bad --grid step '" + step + "'");
  }
  for (long n = a; n <= b; n = (step[0] == 'x') ? n * amount : n + amount) {
    grid.push_back(static_cast<int>(n));
  }
  return grid;
}

msl::KRule parse_k_rule(const std::string& spec) {
  if (spec == "half") return msl::KRule::half();
  if (spec.rfind("fixed:", 0) == 0) {
    return msl::KRule::fixed(std::stoi(spec.substr(6)));
  }
  if (spec.rfind("ratio:", 0) == 0) {
    return msl::KRule::with_ratio(std::stod(spec.substr(6)));
  }
  throw std::invalid_argument("bad --k rule '" + spec + "'");
}

int default_k(const Options& opt) {
  if (opt.k >= 0) return opt.k;
  if (opt.n % 2 != 0) {
    throw std::invalid_argument("--k defaults to n/2, which needs even --n");
  }
  return opt.n / 2;
}

msl::DpTables solve_tables(const std::string& policy, int n) {
  if (policy == "optimal") return msl::solve_optimal(n);
  if (policy == "myopic") return msl::solve_myopic(n);
  throw std::invalid_argument("--policy must be optimal or myopic here");
}

int cmd_solve(const Options& opt) {
  const int k = default_k(opt);
  if (k > opt.n) throw std::invalid_argument("--k must not exceed --n");
  const msl::DpTables tables = solve_tables(opt.policy, opt.n);
  write_output(opt.out, msl::tables_to_csv(tables));
  std::fprintf(stderr, "solve: n=%d k=%d policy=%s r=%.12g p=%.12g\n", opt.n,
               k, opt.policy.c_str(), tables.regret(opt.n, k),
               tables.prob(opt.n, k));
  return kExitOk;
}

int cmd_curve(const Options& opt, bool as_report) {
  const std::vector<int> grid = parse_grid(opt.grid);
  const msl::KRule rule = parse_k_rule(opt.k_rule);
  msl::RegretCurve curve = msl::sweep(grid, rule);
  curve.grid_spec = opt.grid;
  const msl::BoundsReport report = msl::build_report(curve);
  const bool json = as_report || opt.format == "json";
  write_output(opt.out, json ? msl::report_to_json(report)
                             : msl::curve_to_csv(curve));
  std::fprintf(stderr,
               "curve: %zu entries, k_rule=%s, slope=%.6g, violations=%zu\n",
               curve.entries.size(), rule.name().c_str(), report.fitted_slope,
               report.violations.size());
  if (!report.violations.empty()) {
    for (const auto& v : report.violations) {
      std::fprintf(stderr, "violation: %s\n", v.c_str());
    }
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_walk(const Options& opt) {
  const int k = default_k(opt);
  const msl::DpTables tables = solve_tables(opt.policy, opt.n);
  const msl::WalkDistribution dist =
      msl::forward_distribution(tables, opt.n, k);
  write_output(opt.out, msl::walk_to_csv(dist, tables));
  std::fprintf(stderr, "walk: n=%d k=%d policy=%s r=%.12g\n", opt.n, k,
               opt.policy.c_str(), tables.regret(opt.n, k));
  return kExitOk;
}

int cmd_mistakes(const Options& opt) {
  const int k = default_k(opt);
  const msl::DpTables tables = solve_tables(opt.policy, opt.n);
  const msl::WalkDistribution dist =
      msl::forward_distribution(tables, opt.n, k);
  const msl::MistakeStats stats = msl::expected_mistakes(dist, tables);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = msl::kSchemaVersion;
    j["n"] = opt.n;
    j["k"] = k;
    j["policy"] = opt.policy;
    j["total"] = stats.total;
    j["per_period"] = stats.per_period;
    write_output(opt.out, j.dump(2) + "\n");
  } else {
    std::string csv = "# msl-schema 1\nt,mistake_probability\n";
    for (int t = 0; t <= opt.n; ++t) {
      csv += std::to_string(t) + ',' +
             msl::format_double(stats.per_period[t]) + '\n';
    }
    write_output(opt.out, csv);
  }
  std::fprintf(stderr, "mistakes: n=%d k=%d policy=%s total=%.12g\n", opt.n,
               k, opt.policy.c_str(), stats.total);
  return kExitOk;
}

int cmd_simulate(const Options& opt) {
  const int k = default_k(opt);
  if (opt.replicates < 1) {
    throw std::invalid_argument("--replicates must be >= 1");
  }
  msl::SimConfig config;
  config.n = opt.n;
  config.k = k;
  config.replicates = opt.replicates;
  config.seed = opt.seed;
  config.threads = opt.threads;
  msl::DpTables tables;
  if (opt.policy.rfind("fixed:", 0) == 0) {
    config.policy = msl::SimPolicy::fixed(std::stod(opt.policy.substr(6)));
  } else {
    tables = solve_tables(opt.policy, opt.n);
    config.policy = msl::SimPolicy::from_tables(tables);
  }
  const msl::SimSummary summary = msl::estimate_regret(config);
  write_output(opt.out, msl::summary_to_json(config, summary));
  std::fprintf(stderr,
               "simulate: n=%d k=%d policy=%s mean_regret=%.6g se=%.3g\n",
               opt.n, k, config.policy.name().c_str(), summary.mean_regret,
               summary.std_error);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multisecretary lab: exact DP, walk analysis, bounds, and "
               "Monte Carlo for the uniform-valuation hiring problem"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    if (needs_n) sub->add_option("--n", opt.n, "horizon")->required();
    sub->add_option("--k", opt.k, "positions (default n/2)");
    sub->add_option("--policy", opt.policy,
                    "optimal | myopic | fixed:<theta>");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--format", opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", opt.threads, "worker threads");
  };

  CLI::App* solve = app.add_subcommand("solve", "dump DP tables");
  add_common(solve, true);
  CLI::App* curve = app.add_subcommand("curve", "regret curve over a grid");
  curve->add_option("--grid", opt.grid, "a:b:xS | a:b:+d | n1,n2,...");
  curve->add_option("--k", opt.k_rule, "half | fixed:<k> | ratio:<rho>");
  curve->add_option("--out", opt.out, "output path");
  curve->add_option("--format", opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  CLI::App* report = app.add_subcommand("report", "bounds report (JSON)");
  report->add_option("--grid", opt.grid, "a:b:xS | a:b:+d | n1,n2,...");
  report->add_option("--k", opt.k_rule, "half | fixed:<k> | ratio:<rho>");
  report->add_option("--out", opt.out, "output path");
  CLI::App* walk = app.add_subcommand("walk", "exact walk diagnostics");
  add_common(walk, true);
  CLI::App* mistakes =
      app.add_subcommand("mistakes", "expected mistake accounting");
  add_common(mistakes, true);
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
  add_common(simulate, true);
  simulate->add_option("--replicates", opt.replicates, "replicate count");
  simulate->add_option("--seed", opt.seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt);
    if (curve->parsed()) return cmd_curve(opt, false);
    if (report->parsed()) return cmd_curve(opt, true);
    if (walk->parsed()) return cmd_walk(opt);
    if (mistakes->parsed()) return cmd_mistakes(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitUsage;
}
