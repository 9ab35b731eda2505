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

#ifndef MSL_CORE_MATH_HPP_
#define MSL_CORE_MATH_HPP_

// Closed-form quantities for the multisecretary problem with standard
// uniform valuations: Beta order-statistic means and CDFs, the option
// value of one extra applicant, the offline optimum, and the one-step
// (myopic) regret of a hiring decision.

namespace msl {

// (n, k): n applicants remaining, k positions still to fill.
// Valid states satisfy 0 <= k <= n; k = 0 and k = n are degenerate
// boundary states reached by the dynamic program.
struct ProblemSize {
  int n = 0;
  int k = 0;
};

// Mean of the j-th largest of n uniform draws: (n - j + 1) / (n + 1).
// The order statistic itself is Beta(n - j + 1, j).
// Requires 1 <= j <= n.
double mu(int n, int j);

// Expected value of the option to replace the k-th best of n - 1
// remaining applicants with one more draw: k(k+1) / (2n(n+1)).
// Requires 0 <= k <= n, n >= 1. Zero when k = 0.
double lambda(int n, int k);

// Regularized incomplete beta function I_x(a, b), computed by the
// Lentz continued fraction with the symmetry flip
// I_x(a,b) = 1 - I_{1-x}(b,a) when x > (a+1)/(a+b+2).
// Throws std::domain_error for x outside [0,1] or nonpositive shapes,
// std::runtime_error if the continued fraction fails to converge.
double beta_reg(double x, double a, double b);

// CDF of the j-th largest of n uniforms at x: I_x(n - j + 1, j).
double orderstat_cdf(int n, int j, double x);

// Integral of the order-statistic CDF: int_0^y I_v(a, b) dv
//   = (b / (a + b)) I_y(a, b+1) - (1 - y) I_y(a, b).
// Used by the closed-form mistake-probability integrals.
double orderstat_cdf_integral(double y, double a, double b);

// Expected value of hiring the k best of n in hindsight:
// k(2n - k + 1) / (2(n + 1)). Requires 0 <= k <= n.
double offline_value(int n, int k);

// Expected one-step cost of hiring with probability p against the
// hindsight benchmark (the k-th best of the remaining n - 1):
//   m(p) = lambda(n,k) + p (mu(n-1,k) - 1 + p/2).
// Strictly convex in p, minimized at p = k/n. Boundary states k = 0
// and k = n return 0 (no real decision exists there).
// Requires 0 <= k <= n and p in [0, 1].
double myopic_regret(int n, int k, double p);

}  // namespace msl

#endif  // MSL_CORE_MATH_HPP_
