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

#include "msl/core_math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msl {

namespace {

constexpr double kCfTolerance = 1e-15;
constexpr int kCfMaxIterations = 500;

// Continued fraction for the incomplete beta function (modified Lentz).
// Converges quickly when x < (a + 1) / (a + b + 2).
double beta_cf(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kCfMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kCfTolerance) return h;
  }
  throw std::runtime_error(
      "beta_reg: continued fraction did not converge (x=" +
      std::to_string(x) + ", a=" + std::to_string(a) +
      ", b=" + std::to_string(b) + ")");
}

}  // namespace

double mu(int n, int j) {
  if (j < 1 || j > n) {
    throw std::domain_error("mu: rank j must satisfy 1 <= j <= n");
  }
  return static_cast<double>(n - j + 1) / (n + 1);
}

double lambda(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::domain_error("lambda: requires 0 <= k <= n, n >= 1");
  }
  return static_cast<double>(k) * (k + 1) / (2.0 * n * (n + 1));
}

double beta_reg(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("beta_reg: x must lie in [0, 1]");
  }
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("beta_reg: shapes must be positive");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_prefactor = std::lgamma(a + b) - std::lgamma(a) -
                               std::lgamma(b) + a * std::log(x) +
                               b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_prefactor) * beta_cf(x, a, b) / a;
  }
  return 1.0 - std::exp(log_prefactor) * beta_cf(1.0 - x, b, a) / b;
}

double orderstat_cdf(int n, int j, double x) {
  if (j < 1 || j > n) {
    throw std::domain_error("orderstat_cdf: rank j must satisfy 1 <= j <= n");
  }
  return beta_reg(x, static_cast<double>(n - j + 1), static_cast<double>(j));
}

double orderstat_cdf_integral(double y, double a, double b) {
  return b / (a + b) * beta_reg(y, a, b + 1.0) -
         (1.0 - y) * beta_reg(y, a, b);
}

double offline_value(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("offline_value: requires 0 <= k <= n");
  }
  return static_cast<double>(k) * (2.0 * n - k + 1) / (2.0 * (n + 1));
}

double myopic_regret(int n, int k, double p) {
  if (k < 0 || k > n || n < 1) {
    throw std::domain_error("myopic_regret: requires 0 <= k <= n, n >= 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("myopic_regret: p must lie in [0, 1]");
  }
  if (k == 0 || k == n) return 0.0;
  return lambda(n, k) + p * (mu(n - 1, k) - 1.0 + p / 2.0);
}

}  // namespace msl
