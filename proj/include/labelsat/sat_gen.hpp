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

#include <cstdint>
#include <vector>

#include "labelsat/cnf.hpp"
#include "labelsat/distributions.hpp"
#include "labelsat/problem.hpp"
#include "labelsat/rng.hpp"

namespace labelsat {

struct SatGenConfig {
  Var n = 1;
  std::size_t m = 1;
  DistributionSpec vars = dist::UniformIndex{};
  DistributionSpec lits_clause = dist::NormalClipped{4.5, 1.0, 1.0, 1e9};
  DistributionSpec polarities = dist::Bernoulli{0.5};
  DistributionSpec polarity_bias = dist::UniformNonZeroBias{};
};

inline void validate(const SatGenConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("sat generator: n must be at least 1");
  if (cfg.m < 1) throw ConfigError("sat generator: m must be at least 1");
  for (const auto* d : {&cfg.vars, &cfg.lits_clause, &cfg.polarities, &cfg.polarity_bias}) validate(*d);
}

// Literal j sits on variable indices[j] and agrees with alpha iff seq[j] == 1.
inline Clause make_biased_clause(const std::vector<Var>& indices, const Assignment& alpha,
                                 const BiasSeq& seq) {
  if (seq.size() != indices.size()) throw ArgumentError("make_biased_clause: length mismatch");
  Clause c;
  c.literals.reserve(indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const bool value = alpha[indices[j] - 1];
    c.literals.push_back({indices[j], seq[j] ? value : !value});
  }
  return c;
}

inline Assignment sample_assignment(const DistributionSpec& polarities, Var n, RngState& rng) {
  Assignment alpha(n);
  for (Var j = 0; j < n; ++j) alpha[j] = sample_polarity(polarities, rng);
  return alpha;
}

// Clauses that all agree with `alpha` somewhere. One bias sequence per clause.
inline std::vector<Clause> sample_satisfied_clauses(const SatGenConfig& cfg, const Assignment& alpha,
                                                    std::size_t count, RngState& rng) {
  std::vector<Clause> clauses;
  clauses.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = sample_clause_length(cfg.lits_clause, cfg.n, rng);
    const auto indices = sample_unique_indices(cfg.vars, cfg.n, k, rng);
    const auto seq = sample_bias_seq(cfg.polarity_bias, k, rng);
    clauses.push_back(make_biased_clause(indices, alpha, seq));
  }
  return clauses;
}

// A formula with exactly cfg.m clauses over cfg.n variables, satisfied by the
// returned witness.
inline LabeledProblem generate_sat(const SatGenConfig& cfg, RngState& rng) {
  validate(cfg);
  auto alpha = sample_assignment(cfg.polarities, cfg.n, rng);
  auto clauses = sample_satisfied_clauses(cfg, alpha, cfg.m, rng);
  return {Cnf(cfg.n, std::move(clauses)), Label::Sat, std::move(alpha)};
}

// Keeps the literal incidence graph of `cnf` and re-draws polarities so that
// every clause agrees with `alpha` where its bias sequence has a 1.
inline Cnf sat_cover(const Cnf& cnf, const Assignment& alpha, const DistributionSpec& bias,
                     RngState& rng) {
  if (alpha.size() != cnf.num_vars()) throw ArgumentError("sat_cover: assignment length mismatch");
  std::vector<Clause> out;
  out.reserve(cnf.num_clauses());
  std::vector<Var> indices;
  for (const auto& c : cnf.clauses()) {
    if (c.empty()) throw ArgumentError("sat_cover: formula contains an empty clause");
    indices.clear();
    for (const auto& l : c.literals) indices.push_back(l.var);
    out.push_back(make_biased_clause(indices, alpha, sample_bias_seq(bias, c.size(), rng)));
  }
  return Cnf(cnf.num_vars(), std::move(out));
}

struct BiasedCoverResult {
  Cnf cnf;
  std::size_t changed = 0;         // anchor literals inverted to agree with alpha
  std::size_t unit_changes = 0;    // of those, in clauses of length 1 (never compensated)
  std::size_t compensated = 0;     // compensating inversions made
  std::size_t uncompensated = 0;   // changes in clauses of length >= 2 with no candidate anywhere
};

// Picks one anchor literal per clause and inverts it when it disagrees with
// alpha. With `flip`, each such inversion in a clause of length >= 2 is paired
// with inverting one non-anchor literal of the anchor's new polarity, so the
// formula's positive and negative literal counts are unchanged. The partner
// comes from the same clause when one exists, otherwise from the non-anchor
// literals of the whole formula. Anchors are never touched again, so the
// output satisfies alpha.
inline BiasedCoverResult biased_sat_cover_detailed(const Cnf& cnf, const Assignment& alpha, bool flip,
                                                   RngState& rng) {
  if (alpha.size() != cnf.num_vars()) throw ArgumentError("biased_sat_cover: assignment length mismatch");
  BiasedCoverResult res;
  std::vector<Clause> clauses = cnf.clauses();
  std::vector<std::size_t> anchor(clauses.size());
  std::vector<std::size_t> changed_clauses;

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto& c = clauses[i];
    if (c.empty()) throw ArgumentError("biased_sat_cover: formula contains an empty clause");
    anchor[i] = rng.uniform_below(c.size());
    auto& l = c.literals[anchor[i]];
    if (!l.agrees(alpha[l.var - 1])) {
      l.positive = !l.positive;
      ++res.changed;
      if (c.size() == 1) ++res.unit_changes;
      else changed_clauses.push_back(i);
    }
  }

  if (flip && !changed_clauses.empty()) {
    struct Slot {
      std::size_t clause, pos;
    };
    std::vector<std::vector<bool>> flipped(clauses.size());
    for (std::size_t i = 0; i < clauses.size(); ++i) flipped[i].assign(clauses[i].size(), false);
    // pools[p] holds non-anchor literals whose polarity was p when built.
    std::vector<Slot> pools[2];
    bool pools_built = false;
    auto build_pools = [&] {
      for (std::size_t i = 0; i < clauses.size(); ++i)
        for (std::size_t j = 0; j < clauses[i].size(); ++j)
          if (j != anchor[i]) pools[clauses[i].literals[j].positive ? 1 : 0].push_back({i, j});
      pools_built = true;
    };

    std::vector<std::size_t> local;
    for (std::size_t i : changed_clauses) {
      auto& c = clauses[i];
      const bool want = c.literals[anchor[i]].positive;
      local.clear();
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != anchor[i] && !flipped[i][j] && c.literals[j].positive == want) local.push_back(j);
      if (!local.empty()) {
        const auto j = local[rng.uniform_below(local.size())];
        c.literals[j].positive = !want;
        flipped[i][j] = true;
        ++res.compensated;
        continue;
      }
      if (!pools_built) build_pools();
      auto& pool = pools[want ? 1 : 0];
      bool done = false;
      while (!pool.empty()) {
        const auto k = rng.uniform_below(pool.size());
        const Slot s = pool[k];
        pool[k] = pool.back();
        pool.pop_back();
        auto& l = clauses[s.clause].literals[s.pos];
        if (flipped[s.clause][s.pos] || l.positive != want) continue;
        l.positive = !want;
        flipped[s.clause][s.pos] = true;
        ++res.compensated;
        done = true;
        break;
      }
      if (!done) ++res.uncompensated;
    }
  }
  res.cnf = Cnf(cnf.num_vars(), std::move(clauses));
  return res;
}

inline Cnf biased_sat_cover(const Cnf& cnf, const Assignment& alpha, bool flip, RngState& rng) {
  return biased_sat_cover_detailed(cnf, alpha, flip, rng).cnf;
}

// Random clauses with independently drawn polarities (no satisfiability guarantee).
inline std::vector<Clause> sample_random_clauses(Var n, std::size_t count, const DistributionSpec& vars,
                                                 const DistributionSpec& lits_clause,
                                                 const DistributionSpec& polarities, RngState& rng) {
  std::vector<Clause> clauses;
  clauses.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = sample_clause_length(lits_clause, n, rng);
    const auto indices = sample_unique_indices(vars, n, k, rng);
    Clause c;
    c.literals.reserve(k);
    for (Var v : indices) c.literals.push_back({v, sample_polarity(polarities, rng)});
    clauses.push_back(std::move(c));
  }
  return clauses;
}

}  // namespace labelsat
