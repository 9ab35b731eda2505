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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "msl/core_math.hpp"
#include "msl/dp_engine.hpp"
#include "msl/simulator.hpp"

TEST_CASE("sample paths are deterministic and uniform") {
  const auto path1 = msl::sample_path(100, 42);
  const auto path2 = msl::sample_path(100, 42);
  CHECK(path1 == path2);
  CHECK(msl::sample_path(100, 43) != path1);

  const auto big = msl::sample_path(1000000, 7);
  double sum = 0.0;
  long below_quarter = 0;
  for (double v : big) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    sum += v;
    if (v <= 0.25) ++below_quarter;
  }
  // 4-sigma CLT bands.
  CHECK(std::fabs(sum / 1e6 - 0.5) <= 0.002);
  CHECK(std::fabs(below_quarter / 1e6 - 0.25) <= 0.002);
}

TEST_CASE("counter-based seed split is order-free") {
  CHECK(msl::derive_seed(0, 0) != msl::derive_seed(0, 1));
  CHECK(msl::derive_seed(0, 5) == msl::derive_seed(0, 5));
  CHECK(msl::derive_seed(1, 5) != msl::derive_seed(2, 5));
}

TEST_CASE("run_policy hand traces at n = 2, k = 1") {
  const msl::DpTables tables = msl::solve_optimal(2);
  const msl::SimPolicy policy = msl::SimPolicy::from_tables(tables);

  // Threshold 1 - p(2,1) = 1/2: reject 0.3, forced-hire 0.6.
  msl::PathResult result = msl::run_policy({0.3, 0.6}, policy, 1);
  CHECK(result.hires == 1);
  CHECK(result.value == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(result.mistakes == 0);

  // Hire 0.6 immediately; hindsight wanted 0.9 (one Type I mistake).
  result = msl::run_policy({0.6, 0.9}, policy, 1);
  CHECK(result.hires == 1);
  CHECK(result.value == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(result.mistakes == 1);

  // k = n: everyone is hired, zero regret.
  result = msl::run_policy({0.6, 0.9}, policy, 2);
  CHECK(result.hires == 2);
  CHECK(result.value == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(result.mistakes == 0);

  CHECK_THROWS_AS(msl::run_policy({0.5}, policy, 2), std::domain_error);
}

TEST_CASE("hindsight value") {
  CHECK(msl::hindsight_value({0.3, 0.6}, 1) == 0.6);
  CHECK(msl::hindsight_value({0.1, 0.9, 0.5}, 2) ==
        doctest::Approx(1.4).epsilon(1e-15));
  CHECK_THROWS_AS(msl::hindsight_value({0.5}, 2), std::domain_error);

  double sum = 0.0;
  const long reps = 100000;
  for (long i = 0; i < reps; ++i) {
    sum += msl::hindsight_value(msl::sample_path(2, msl::derive_seed(3, i)), 1);
  }
  // E(max of two uniforms) = 2/3; spread is well under 3 std errors.
  CHECK(std::fabs(sum / reps - 2.0 / 3.0) <= 0.003);
}

TEST_CASE("path-wise dominance of the hindsight optimum") {
  const msl::DpTables tables = msl::solve_optimal(30);
  for (const msl::SimPolicy& policy :
       {msl::SimPolicy::from_tables(tables), msl::SimPolicy::fixed(0.3),
        msl::SimPolicy::fixed(0.9)}) {
    for (long i = 0; i < 500; ++i) {
      const auto path = msl::sample_path(30, msl::derive_seed(11, i));
      for (int k : {1, 7, 15, 30}) {
        CHECK(msl::run_policy(path, policy, k).value <=
              msl::hindsight_value(path, k) + 1e-12);
      }
    }
  }
}

TEST_CASE("Monte Carlo regret matches the DP oracle") {
  const msl::DpTables optimal = msl::solve_optimal(50);
  const msl::DpTables myopic = msl::solve_myopic(50);
  for (const msl::DpTables* tables : {&optimal, &myopic}) {
    msl::SimConfig config;
    config.n = 50;
    config.k = 25;
    config.policy = msl::SimPolicy::from_tables(*tables);
    config.replicates = 40000;
    config.seed = 2024;
    const msl::SimSummary summary = msl::estimate_regret(config);
    CHECK(summary.mean_hires == doctest::Approx(25.0));  // always fills k
    CHECK(std::fabs(summary.mean_regret - tables->regret(50, 25)) <=
          3.0 * summary.std_error);
  }
}

TEST_CASE("determinism across reruns and thread counts") {
  const msl::DpTables tables = msl::solve_optimal(20);
  msl::SimConfig config;
  config.n = 20;
  config.k = 10;
  config.policy = msl::SimPolicy::from_tables(tables);
  config.replicates = 5000;
  config.seed = 99;
  config.threads = 1;
  const std::string first =
      msl::summary_to_json(config, msl::estimate_regret(config));
  const std::string second =
      msl::summary_to_json(config, msl::estimate_regret(config));
  CHECK(first == second);
  config.threads = 4;
  const std::string threaded =
      msl::summary_to_json(config, msl::estimate_regret(config));
  CHECK(first == threaded);
  CHECK(first.find("\"generator_version\": \"splitmix64/53bit-v1\"") !=
        std::string::npos);
}

TEST_CASE("degenerate and fixed-threshold configurations") {
  const msl::DpTables tables = msl::solve_optimal(10);
  msl::SimConfig config;
  config.n = 10;
  config.k = 10;
  config.policy = msl::SimPolicy::fixed(0.0);
  config.replicates = 1;
  config.seed = 5;
  const msl::SimSummary single = msl::estimate_regret(config);
  CHECK(single.std_error == 0.0);
  CHECK(single.mean_hires == 10.0);
  CHECK(std::fabs(single.mean_regret) <= 1e-12);

  // Threshold 1 hires only through the forced w = t boundary: the
  // last k candidates. Expected regret is v*(n,k) - k/2.
  config.k = 4;
  config.policy = msl::SimPolicy::fixed(1.0);
  config.replicates = 40000;
  const msl::SimSummary summary = msl::estimate_regret(config);
  CHECK(summary.mean_hires == 4.0);
  const double expected = msl::offline_value(10, 4) - 2.0;
  CHECK(std::fabs(summary.mean_regret - expected) <=
        3.0 * summary.std_error);

  config.replicates = 0;
  CHECK_THROWS_AS(msl::estimate_regret(config), std::domain_error);
  CHECK_THROWS_AS(msl::SimPolicy::fixed(1.5), std::domain_error);
}
