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
#include "msl/io.hpp"
#include "msl/walk_analysis.hpp"

TEST_CASE("forward propagation, small hand cases") {
  const msl::DpTables tables = msl::solve_optimal(2);
  const msl::WalkDistribution dist = msl::forward_distribution(tables, 2, 1);
  CHECK(dist.at(2, 1) == 1.0);
  CHECK(dist.at(1, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(dist.at(1, 1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(dist.at(0, 0) == doctest::Approx(1.0).epsilon(1e-13));

  // Forced hires: k = n collapses to the diagonal.
  const msl::WalkDistribution forced = msl::forward_distribution(tables, 2, 2);
  CHECK(forced.at(1, 1) == 1.0);
  CHECK(forced.at(0, 0) == 1.0);

  CHECK_THROWS_AS(msl::forward_distribution(tables, 2, 3), std::domain_error);
  CHECK_THROWS_AS(msl::forward_distribution(tables, 5, 1), std::domain_error);
}

TEST_CASE("mass conservation and support band") {
  for (msl::PolicyKind kind :
       {msl::PolicyKind::kOptimal, msl::PolicyKind::kMyopic}) {
    const msl::DpTables tables =
        kind == msl::PolicyKind::kOptimal ? msl::solve_optimal(96)
                                          : msl::solve_myopic(96);
    for (int k : {1, 13, 48, 95}) {
      const msl::WalkDistribution dist =
          msl::forward_distribution(tables, 96, k);
      for (int t = 0; t <= 96; ++t) {
        double sum = 0.0;
        for (int w = 0; w <= std::min(t, k); ++w) {
          const double m = dist.at(t, w);
          CHECK(m >= 0.0);
          sum += m;
          if (w < std::max(0, k - (96 - t))) CHECK(m == 0.0);
        }
        CHECK(std::fabs(sum - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("walk symmetry and moments at k = n/2") {
  const int n = 128;
  const msl::DpTables tables = msl::solve_optimal(n);
  const msl::WalkDistribution dist =
      msl::forward_distribution(tables, n, n / 2);
  const msl::WalkMoments moments = msl::walk_moments(dist);
  CHECK(moments.variance[n] == 0.0);
  for (int t = 0; t <= n; ++t) {
    CHECK(std::fabs(moments.mean[t] - t / 2.0) <= 1e-9);
    CHECK(moments.variance[t] <= msl::reference_variance(n, t) + 1e-9);
    for (int w = 0; w <= std::min(t, n / 2); ++w) {
      CHECK(std::fabs(dist.at(t, w) - dist.at(t, t - w)) <= 1e-9);
    }
  }
}

TEST_CASE("reference variance") {
  CHECK(msl::reference_variance(9, 9) == 0.0);
  CHECK(msl::reference_variance(16, 0) == 4.0);
  CHECK(msl::reference_variance(100, 36) == 16.0);
  CHECK_THROWS_AS(msl::reference_variance(4, 5), std::domain_error);
}

TEST_CASE("step covariance sign under the optimal policy") {
  const int n = 64;
  const msl::DpTables tables = msl::solve_optimal(n);
  const msl::WalkDistribution dist =
      msl::forward_distribution(tables, n, n / 2);
  CHECK(msl::step_covariance(dist, tables, n) == 0.0);
  for (int t = 1; t <= n; ++t) {
    CHECK(msl::step_covariance(dist, tables, t) <= 1e-12);
  }
  CHECK_THROWS_AS(msl::step_covariance(dist, tables, 0), std::domain_error);

  // Two-point mass at t = 1 with p(1,0) = 0, p(1,1) = 1:
  // cov = 1/2 [(1/2)(-1/2) + (-1/2)(1/2)] = -1/4.
  const msl::WalkDistribution tiny = msl::forward_distribution(tables, 2, 1);
  CHECK(msl::step_covariance(tiny, tables, 1) ==
        doctest::Approx(-0.25).epsilon(1e-13));
}

TEST_CASE("mistake probability hand values") {
  // F_{1,1}(v) = v: both error integrals are triangles.
  CHECK(msl::mistake_probability(2, 1, 0.5) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(msl::mistake_probability(2, 1, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(msl::mistake_probability(2, 1, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(msl::mistake_probability(5, 0, 0.3) == 0.0);
  CHECK(msl::mistake_probability(5, 5, 0.3) == 0.0);
  CHECK_THROWS_AS(msl::mistake_probability(2, 1, 1.5), std::domain_error);
}

TEST_CASE("mistake probability stays in [0,1] and dips at the threshold") {
  for (int t : {2, 17, 64, 256}) {
    for (int w = 1; w <= t - 1; w += std::max(1, t / 7)) {
      double at_min = 1.0;
      for (int pi = 0; pi <= 20; ++pi) {
        const double p = pi / 20.0;
        const double value = msl::mistake_probability(t, w, p);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);
        at_min = std::min(at_min, value);
      }
      // The minimizing threshold classifies against the benchmark
      // median; p = w/t sits near it.
      const double near_opt =
          msl::mistake_probability(t, w, static_cast<double>(w) / t);
      CHECK(near_opt <= at_min + 0.05);
    }
  }
}

TEST_CASE("expected mistakes: hand case and forced hires") {
  const msl::DpTables tables = msl::solve_optimal(4);
  const msl::WalkDistribution dist = msl::forward_distribution(tables, 2, 1);
  const msl::MistakeStats stats = msl::expected_mistakes(dist, tables);
  // Only t = 2 contributes: boundary states at t = 1 are decision-free.
  CHECK(stats.total == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(stats.per_period[1] == 0.0);

  const msl::WalkDistribution forced = msl::forward_distribution(tables, 3, 3);
  CHECK(msl::expected_mistakes(forced, tables).total == 0.0);
}

TEST_CASE("expected mistakes grow like sqrt(n)") {
  const msl::DpTables tables = msl::solve_optimal(1024);
  const auto total = [&](int n) {
    const msl::WalkDistribution dist =
        msl::forward_distribution(tables, n, n / 2);
    return msl::expected_mistakes(dist, tables).total;
  };
  const double ratio = total(1024) / total(256);
  CHECK(ratio >= 1.7);
  CHECK(ratio <= 2.3);
}

TEST_CASE("regret decomposition identity") {
  const msl::DpTables tables = msl::solve_optimal(128);
  for (int n : {64, 128}) {
    const int k = n / 2;
    const msl::WalkDistribution dist =
        msl::forward_distribution(tables, n, k);
    double decomposed = 0.0;
    for (int t = 1; t <= n; ++t) {
      for (int w = 0; w <= std::min(t, k); ++w) {
        decomposed +=
            dist.at(t, w) * msl::myopic_regret(t, w, tables.prob(t, w));
      }
    }
    CHECK(std::fabs(decomposed - tables.regret(n, k)) <= 1e-9);
  }
}

TEST_CASE("walk CSV parses and matches the moments") {
  const msl::DpTables tables = msl::solve_optimal(16);
  const msl::WalkDistribution dist = msl::forward_distribution(tables, 16, 8);
  const auto rows = msl::parse_csv(msl::walk_to_csv(dist, tables));
  REQUIRE(rows.size() == 1 + 17);
  const msl::WalkMoments moments = msl::walk_moments(dist);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int t = static_cast<int>(msl::parse_double(rows[i][0]));
    CHECK(msl::parse_double(rows[i][1]) == moments.mean[t]);
    CHECK(msl::parse_double(rows[i][2]) == moments.variance[t]);
    CHECK(msl::parse_double(rows[i][3]) == msl::reference_variance(16, t));
  }
}
