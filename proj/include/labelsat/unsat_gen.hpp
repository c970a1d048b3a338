// Copyright 2026 The labelsat Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "labelsat/cnf.hpp"
#include "labelsat/distributions.hpp"
#include "labelsat/problem.hpp"
#include "labelsat/rng.hpp"
#include "labelsat/sat_gen.hpp"

namespace labelsat {

// Which clauses of the current core bloom in a round.
struct DownClause {
  enum class Mode { Bernoulli, ExactlyOne };
  Mode mode = Mode::Bernoulli;
  double p = 0.5;  // per-clause inclusion probability in Bernoulli mode

  friend bool operator==(const DownClause&, const DownClause&) = default;
};

inline constexpr std::size_t kUnboundedDepth = std::numeric_limits<std::size_t>::max();

struct UnsatGenConfig {
  Var n = 1;
  std::size_t m = 2;
  std::size_t init_size = 1;  // complementary unit-clause pairs
  std::size_t depth = 3;
  DownClause down_clause{};
  DistributionSpec vars = dist::UniformIndex{};
  DistributionSpec lits_clause = dist::NormalClipped{4.5, 1.0, 1.0, 1e9};
  DistributionSpec polarities = dist::Bernoulli{0.5};
  DistributionSpec bloom = dist::BloomWeights{0.48, 0.48, 0.02};
  bool record_trace = true;
};

// Named depth / down-clause presets.
inline UnsatGenConfig shallow_bloom(UnsatGenConfig cfg) {
  cfg.depth = 3;
  cfg.down_clause = {DownClause::Mode::Bernoulli, 0.5};
  return cfg;
}

inline UnsatGenConfig deep_bloom(UnsatGenConfig cfg) {
  cfg.depth = kUnboundedDepth;
  cfg.down_clause = {DownClause::Mode::Bernoulli, 1.0};
  return cfg;
}

inline void validate(const UnsatGenConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("unsat generator: n must be at least 1");
  if (cfg.init_size < 1) throw ConfigError("unsat generator: init_size must be at least 1");
  if (2 * cfg.init_size > cfg.m)
    throw ConfigError("unsat generator: 2*init_size=" + std::to_string(2 * cfg.init_size) +
                      " exceeds m=" + std::to_string(cfg.m));
  if (!(cfg.down_clause.p >= 0 && cfg.down_clause.p <= 1))
    throw ConfigError("unsat generator: down_clause p outside [0,1]");
  for (const auto* d : {&cfg.vars, &cfg.lits_clause, &cfg.polarities, &cfg.bloom}) validate(*d);
}

namespace detail {

inline Var sample_cut_var(const DistributionSpec& vars, Var n, const Clause& c, RngState& rng) {
  auto used = [&](Var v) {
    for (const auto& l : c.literals)
      if (l.var == v) return true;
    return false;
  };
  if (const auto* u = std::get_if<dist::UniformIndex>(&vars)) {
    auto [lo, hi] = uniform_range(*u, n);
    if (lo == 1 && hi == n && 2 * c.size() <= n) {
      for (;;) {
        const auto v = static_cast<Var>(rng.uniform_below(n)) + 1;
        if (!used(v)) return v;
      }
    }
  }
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  for (const auto& l : c.literals) taken[l.var] = true;
  std::vector<Var> available;
  available.reserve(n - c.size());
  for (Var v = 1; v <= n; ++v)
    if (!taken[v]) available.push_back(v);
  return sample_index_among(vars, n, available, rng);
}

inline std::vector<std::size_t> select_down_clauses(const DownClause& dc, std::size_t size, RngState& rng) {
  std::vector<std::size_t> sel;
  if (dc.mode == DownClause::Mode::ExactlyOne) {
    sel.push_back(rng.uniform_below(size));
    return sel;
  }
  for (int attempt = 0; attempt < 64 && sel.empty(); ++attempt)
    for (std::size_t i = 0; i < size; ++i)
      if (rng.bernoulli(dc.p)) sel.push_back(i);
  if (sel.empty()) sel.push_back(rng.uniform_below(size));
  return sel;
}

}  // namespace detail

// One parallel round of backward resolution on every clause of `prob`. Clause
// i yields a positive-cut child and a negative-cut child (in that order) that
// together imply it. Every clause must have an unused variable.
inline Cnf res_search(const Cnf& prob, const DistributionSpec& vars, const DistributionSpec& bloom,
                      RngState& rng, BloomStep* record = nullptr) {
  const Var n = prob.num_vars();
  std::vector<Clause> out;
  out.reserve(prob.num_clauses() * 2);
  if (record) *record = BloomStep{};
  for (std::size_t i = 0; i < prob.num_clauses(); ++i) {
    const auto& c = prob[i];
    if (c.size() >= n)
      throw PreconditionError("res_search: clause " + std::to_string(i) + " uses all variables");
    const Var cut = detail::sample_cut_var(vars, n, c, rng);
    std::vector<BloomChoice> choices(c.size());
    for (auto& ch : choices) ch = sample_bloom(bloom, rng);
    auto [a, b] = bloom_clause(c, cut, choices);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
    if (record) {
      record->selected.push_back(i);
      record->cut_vars.push_back(cut);
      record->choices.push_back(std::move(choices));
    }
  }
  return Cnf(n, std::move(out));
}

namespace detail {

struct Core {
  std::vector<Clause> clauses;
  BloomTrace trace;
};

inline Core bloom_core(const UnsatGenConfig& cfg, RngState& rng) {
  Core core;
  for (std::size_t i = 0; i < cfg.init_size; ++i)
    core.trace.init_vars.push_back(sample_var_index(cfg.vars, cfg.n, rng));
  core.clauses = initial_core(core.trace.init_vars);

  for (std::size_t it = 0; it < cfg.depth; ++it) {
    const auto size = core.clauses.size();
    if (2 * size > cfg.m) break;
    if (std::any_of(core.clauses.begin(), core.clauses.end(),
                    [&](const Clause& c) { return c.size() >= cfg.n; }))
      break;
    const auto sel = select_down_clauses(cfg.down_clause, size, rng);
    std::vector<Clause> subset;
    subset.reserve(sel.size());
    for (auto idx : sel) subset.push_back(core.clauses[idx]);
    BloomStep step;
    const Cnf bloomed = res_search(Cnf(cfg.n, std::move(subset)), cfg.vars, cfg.bloom, rng, &step);
    step.selected = sel;  // res_search indexed the subset; record core indices

    std::vector<bool> picked(size, false);
    for (auto idx : sel) picked[idx] = true;
    std::vector<Clause> next = bloomed.clauses();
    next.reserve(size + sel.size());
    for (std::size_t i = 0; i < size; ++i)
      if (!picked[i]) next.push_back(std::move(core.clauses[i]));
    core.clauses = std::move(next);
    if (cfg.record_trace) core.trace.steps.push_back(std::move(step));
  }
  core.trace.core_size = core.clauses.size();
  if (!cfg.record_trace) core.trace.init_vars.clear();
  return core;
}

}  // namespace detail

// Unsatisfiable core grown by blooming, padded with random clauses to exactly m.
inline LabeledProblem generate_unsat(const UnsatGenConfig& cfg, RngState& rng) {
  validate(cfg);
  auto core = detail::bloom_core(cfg, rng);
  const auto needed = cfg.m - std::min(cfg.m, core.clauses.size());
  auto tail = sample_random_clauses(cfg.n, needed, cfg.vars, cfg.lits_clause, cfg.polarities, rng);
  core.clauses.insert(core.clauses.end(), std::make_move_iterator(tail.begin()),
                      std::make_move_iterator(tail.end()));
  return {Cnf(cfg.n, std::move(core.clauses)), Label::Unsat, std::move(core.trace)};
}

// As generate_unsat, but the padding is a satisfiable formula drawn by the SAT
// generator's clause process (its hidden assignment lands in the trace).
inline LabeledProblem unsat_with_sat_tail(const UnsatGenConfig& cfg, const SatGenConfig& sat_cfg,
                                          RngState& rng) {
  validate(cfg);
  if (sat_cfg.n != cfg.n) throw ArgumentError("unsat_with_sat_tail: configs disagree on n");
  validate(sat_cfg);
  auto core = detail::bloom_core(cfg, rng);
  const auto needed = cfg.m - std::min(cfg.m, core.clauses.size());
  auto alpha = sample_assignment(sat_cfg.polarities, cfg.n, rng);
  auto tail = sample_satisfied_clauses(sat_cfg, alpha, needed, rng);
  core.clauses.insert(core.clauses.end(), std::make_move_iterator(tail.begin()),
                      std::make_move_iterator(tail.end()));
  core.trace.tail_witness = std::move(alpha);
  return {Cnf(cfg.n, std::move(core.clauses)), Label::Unsat, std::move(core.trace)};
}

}  // namespace labelsat
