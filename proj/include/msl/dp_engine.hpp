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

#ifndef MSL_DP_ENGINE_HPP_
#define MSL_DP_ENGINE_HPP_

// Exact finite-horizon dynamic programming for the multisecretary
// problem. The primary solvers run in regret space: substituting
// v = v* - r into the Bellman maximizer gives
//   p[t][w] = clamp(w/t + (r[t-1][w] - r[t-1][w-1]), 0, 1),
// which avoids subtracting two O(t)-sized values to obtain an
// O(log t) regret. A value-space solver is kept as a cross-check
// oracle.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace msl {

enum class PolicyKind { kOptimal, kMyopic };

std::string to_string(PolicyKind kind);

// Triangular tables over all states (t, w), 0 <= w <= t <= n_max.
// State (t, w) means w positions open with t candidates left to
// interview. Stored flat, row t starting at t(t+1)/2.
struct DpTables {
  int n_max = 0;
  PolicyKind kind = PolicyKind::kOptimal;
  std::vector<double> r;  // regret per state
  std::vector<double> p;  // hiring probability per state
  std::vector<double> v;  // value per state; empty unless value solve

  static std::size_t index(int t, int w) {
    return static_cast<std::size_t>(t) * (t + 1) / 2 + w;
  }
  double regret(int t, int w) const { return r[index(t, w)]; }
  double prob(int t, int w) const { return p[index(t, w)]; }
  double value(int t, int w) const { return v[index(t, w)]; }
  bool has_values() const { return !v.empty(); }
};

// Regret-space solve of the optimal policy over all t <= n_max.
// Boundary states: r[t][0] = r[t][t] = 0, p[t][0] = 0, p[t][t] = 1.
DpTables solve_optimal(int n_max);

// Myopic policy: p[t][w] = w/t everywhere, regret by the same
// forward recursion.
DpTables solve_myopic(int n_max);

// Value-space Bellman solve with maximizer
// p = clamp(1 - (v[t-1][w] - v[t-1][w-1]), 0, 1). Fills v and p.
// Oracle for solve_optimal via r = offline_value - v.
DpTables solve_value_direct(int n_max);

// Streaming solve in O(n_max) memory: calls row_fn(t, r_row, p_row)
// for each completed row, retaining only two rows internally.
// Row spans have t + 1 entries indexed by w and are invalidated when
// row_fn returns.
using DpRowFn =
    std::function<void(int t, std::span<const double> r_row,
                       std::span<const double> p_row)>;
void solve_streaming(PolicyKind kind, int n_max, const DpRowFn& row_fn);

// Table dump: CSV rows "t,w,p,r[,v]" in increasing (t, w) order.
std::string tables_to_csv(const DpTables& tables);

}  // namespace msl

#endif  // MSL_DP_ENGINE_HPP_
