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

#include "msl/dp_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "msl/core_math.hpp"
#include "msl/io.hpp"

namespace msl {

std::string to_string(PolicyKind kind) {
  return kind == PolicyKind::kOptimal ? "optimal" : "myopic";
}

namespace {

void check_horizon(int n_max) {
  if (n_max < 1) throw std::domain_error("dp_engine: n_max must be >= 1");
}

// One row of the regret recursion. prev_* are row t-1; out_* are row t.
void fill_regret_row(PolicyKind kind, int t, std::span<const double> prev_r,
                     std::span<double> out_r, std::span<double> out_p) {
  out_r[0] = 0.0;
  out_p[0] = 0.0;
  out_r[t] = 0.0;
  out_p[t] = 1.0;
  for (int w = 1; w < t; ++w) {
    const double p_hat = static_cast<double>(w) / t;
    double p = p_hat;
    if (kind == PolicyKind::kOptimal) {
      p = std::clamp(p_hat + (prev_r[w] - prev_r[w - 1]), 0.0, 1.0);
    }
    out_p[w] = p;
    out_r[w] = myopic_regret(t, w, p) + p * prev_r[w - 1] +
               (1.0 - p) * prev_r[w];
  }
}

}  // namespace

void solve_streaming(PolicyKind kind, int n_max, const DpRowFn& row_fn) {
  check_horizon(n_max);
  std::vector<double> prev_r(n_max + 1), cur_r(n_max + 1), cur_p(n_max + 1);
  // Row t = 0: the empty state, regret 0.
  cur_r[0] = 0.0;
  cur_p[0] = 0.0;
  row_fn(0, std::span<const double>(cur_r.data(), 1),
         std::span<const double>(cur_p.data(), 1));
  prev_r[0] = 0.0;
  for (int t = 1; t <= n_max; ++t) {
    fill_regret_row(kind, t, std::span<const double>(prev_r.data(), t),
                    std::span<double>(cur_r.data(), t + 1),
                    std::span<double>(cur_p.data(), t + 1));
    row_fn(t, std::span<const double>(cur_r.data(), t + 1),
           std::span<const double>(cur_p.data(), t + 1));
    std::swap(prev_r, cur_r);
  }
}

namespace {

DpTables solve_regret_space(PolicyKind kind, int n_max) {
  check_horizon(n_max);
  DpTables tables;
  tables.n_max = n_max;
  tables.kind = kind;
  const std::size_t total = DpTables::index(n_max, n_max) + 1;
  tables.r.resize(total);
  tables.p.resize(total);
  solve_streaming(kind, n_max,
                  [&](int t, std::span<const double> r_row,
                      std::span<const double> p_row) {
                    std::copy(r_row.begin(), r_row.end(),
                              tables.r.begin() + DpTables::index(t, 0));
                    std::copy(p_row.begin(), p_row.end(),
                              tables.p.begin() + DpTables::index(t, 0));
                  });
  return tables;
}

}  // namespace

DpTables solve_optimal(int n_max) {
  return solve_regret_space(PolicyKind::kOptimal, n_max);
}

DpTables solve_myopic(int n_max) {
  return solve_regret_space(PolicyKind::kMyopic, n_max);
}

DpTables solve_value_direct(int n_max) {
  check_horizon(n_max);
  DpTables tables;
  tables.n_max = n_max;
  tables.kind = PolicyKind::kOptimal;
  const std::size_t total = DpTables::index(n_max, n_max) + 1;
  tables.v.resize(total);
  tables.p.resize(total);
  tables.v[0] = 0.0;
  tables.p[0] = 0.0;
  for (int t = 1; t <= n_max; ++t) {
    const std::size_t row = DpTables::index(t, 0);
    const std::size_t prev = DpTables::index(t - 1, 0);
    tables.v[row] = 0.0;
    tables.p[row] = 0.0;
    // Forced hire-all: one uniform mean per remaining candidate.
    tables.v[row + t] = tables.v[prev + t - 1] + 0.5;
    tables.p[row + t] = 1.0;
    for (int w = 1; w < t; ++w) {
      const double p = std::clamp(
          1.0 - (tables.v[prev + w] - tables.v[prev + w - 1]), 0.0, 1.0);
      tables.p[row + w] = p;
      tables.v[row + w] = p * (1.0 - p / 2.0) + p * tables.v[prev + w - 1] +
                          (1.0 - p) * tables.v[prev + w];
    }
  }
  return tables;
}

std::string tables_to_csv(const DpTables& tables) {
  const bool with_v = tables.has_values();
  std::string out = "# msl-schema 1\n";
  out += with_v ? "t,w,p,r,v\n" : "t,w,p,r\n";
  for (int t = 0; t <= tables.n_max; ++t) {
    for (int w = 0; w <= t; ++w) {
      out += std::to_string(t);
      out += ',';
      out += std::to_string(w);
      out += ',';
      out += format_double(tables.prob(t, w));
      out += ',';
      const double r = tables.r.empty()
                           ? offline_value(t, w) - tables.value(t, w)
                           : tables.regret(t, w);
      out += format_double(r);
      if (with_v) {
        out += ',';
        out += format_double(tables.value(t, w));
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace msl
