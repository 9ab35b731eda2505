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

// Test-only Gauss-Legendre quadrature, independent of the library
// under test. Exact for polynomial integrands of degree <= 2m - 1.

#ifndef MSL_TESTS_QUADRATURE_HPP_
#define MSL_TESTS_QUADRATURE_HPP_

#include <cmath>
#include <vector>

namespace msl_test {

struct GaussLegendre {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1

  explicit GaussLegendre(int m) {
    nodes.resize(m);
    weights.resize(m);
    for (int i = 0; i < m; ++i) {
      // Newton iteration from the Chebyshev initial guess.
      double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= m; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      nodes[i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], ascending
      weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  // Integral of f over [lo, hi].
  template <typename F>
  double integrate(const F& f, double lo, double hi) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      sum += weights[i] * f(lo + (hi - lo) * nodes[i]);
    }
    return (hi - lo) * sum;
  }
};

}  // namespace msl_test

#endif  // MSL_TESTS_QUADRATURE_HPP_
