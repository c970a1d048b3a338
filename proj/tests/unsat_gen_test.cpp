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

#include <gtest/gtest.h>

#include <set>

#include "labelsat/unsat_gen.hpp"
#include "test_support.hpp"

namespace labelsat {
namespace {

using testing::as_ints;
using testing::naive_eval;
using testing::naive_satisfiable;
using testing::random_cnf;

using IntClause = std::vector<int>;
using IntCore = std::vector<IntClause>;  // sorted multiset of sorted clauses

IntCore canonical_core(std::vector<IntClause> core) {
  for (auto& c : core) std::sort(c.begin(), c.end());
  std::sort(core.begin(), core.end());
  return core;
}

// Truth-table check that every assignment of the first `v` variables
// satisfying both children also satisfies the parent.
bool pair_implies(const IntClause& a, const IntClause& b, const IntClause& parent, int v) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits)
    if (naive_eval({a}, bits, v) && naive_eval({b}, bits, v) && !naive_eval({parent}, bits, v)) return false;
  return true;
}

UnsatGenConfig base_config(Var n, std::size_t m) {
  UnsatGenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  return cfg;
}

TEST(ResSearch, ChainFromComplementaryUnits) {
  RngState rng(1);
  const Cnf prob(2, {Clause{pos(1)}, Clause{neg(1)}});
  const auto out = res_search(prob, dist::UniformIndex{}, dist::BloomWeights{0, 0, 1}, rng);
  EXPECT_EQ(out, Cnf(2, {Clause{pos(1), pos(2)}, Clause{pos(1), neg(2)}, Clause{neg(1), pos(2)},
                         Clause{neg(1), neg(2)}}));
}

TEST(ResSearch, DoublesAndImpliesParents) {
  RngState rng(2);
  for (int t = 0; t < 1000; ++t) {
    const Var n = 2 + static_cast<Var>(rng.uniform_below(9));
    const auto prob = random_cnf(rng, n, 1 + rng.uniform_below(12), n - 1);
    BloomStep step;
    const auto out = res_search(prob, dist::UniformIndex{}, dist::BloomWeights{0.48, 0.48, 0.02}, rng, &step);
    ASSERT_EQ(out.num_clauses(), 2 * prob.num_clauses());
    const auto parents = as_ints(prob), kids = as_ints(out);
    for (std::size_t i = 0; i < parents.size(); ++i) {
      ASSERT_TRUE(pair_implies(kids[2 * i], kids[2 * i + 1], parents[i], static_cast<int>(n)));
      const int cut = static_cast<int>(step.cut_vars[i]);
      ASSERT_EQ(kids[2 * i].back(), cut);
      ASSERT_EQ(kids[2 * i + 1].back(), -cut);
    }
  }
}

TEST(ResSearch, FullClauseIsRejected) {
  RngState rng(3);
  EXPECT_THROW(res_search(Cnf(2, {Clause{pos(1), neg(2)}}), dist::UniformIndex{}, dist::BloomWeights{}, rng),
               PreconditionError);
}

TEST(GenerateUnsat, SingleVariableCore) {
  for (std::size_t depth : {std::size_t{0}, std::size_t{3}, kUnboundedDepth}) {
    auto cfg = base_config(1, 5);
    cfg.depth = depth;
    RngState rng(4);
    const auto p = generate_unsat(cfg, rng);
    ASSERT_EQ(p.cnf.num_clauses(), 5u);
    EXPECT_EQ(p.cnf[0], Clause{pos(1)});
    EXPECT_EQ(p.cnf[1], Clause{neg(1)});
    EXPECT_EQ(p.trace()->core_size, 2u);
    EXPECT_TRUE(p.trace()->steps.empty());
  }
}

TEST(GenerateUnsat, DepthZeroIsOnePair) {
  auto cfg = base_config(7, 2);
  cfg.depth = 0;
  RngState rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto p = generate_unsat(cfg, rng);
    ASSERT_EQ(p.cnf.num_clauses(), 2u);
    const Var j = p.cnf[0].literals.at(0).var;
    EXPECT_EQ(p.cnf, Cnf(7, {Clause{pos(j)}, Clause{neg(j)}}));
  }
}

TEST(GenerateUnsat, BruteForceUnsatisfiable) {
  RngState rng(6);
  for (int i = 0; i < 2000; ++i) {
    const Var n = 1 + static_cast<Var>(rng.uniform_below(14));
    const std::size_t m = std::max<std::size_t>(2, static_cast<std::size_t>(4.27 * n));
    auto cfg = rng.bernoulli(0.5) ? shallow_bloom(base_config(n, m)) : deep_bloom(base_config(n, m));
    if (rng.bernoulli(0.3)) cfg.vars = dist::Pareto{};
    const auto p = generate_unsat(cfg, rng);
    ASSERT_EQ(p.label, Label::Unsat);
    ASSERT_EQ(p.cnf.num_clauses(), m);
    ASSERT_FALSE(naive_satisfiable(p.cnf)) << "sample " << i;
  }
}

TEST(GenerateUnsat, TraceReplaysCorePrefix) {
  RngState rng(7);
  for (int i = 0; i < 500; ++i) {
    const Var n = 2 + static_cast<Var>(rng.uniform_below(30));
    const std::size_t m = 4 + rng.uniform_below(120);
    auto cfg = deep_bloom(base_config(n, m));
    cfg.init_size = 1 + rng.uniform_below(2);
    const auto p = generate_unsat(cfg, rng);
    const auto& tr = *p.trace();
    const auto core = replay_trace(tr, n);
    ASSERT_EQ(core.num_clauses(), tr.core_size);
    ASSERT_LE(tr.core_size, m);
    for (std::size_t k = 0; k < tr.core_size; ++k) ASSERT_EQ(core[k], p.cnf[k]);
    // Monotone growth: each step adds one clause per selected clause and stays within m.
    std::size_t size = 2 * cfg.init_size;
    for (const auto& s : tr.steps) {
      ASSERT_LE(2 * size, m);
      size += s.selected.size();
      ASSERT_LE(size, m);
    }
    ASSERT_EQ(size, tr.core_size);
  }
}

TEST(GenerateUnsat, TraceCanBeDisabled) {
  auto cfg = base_config(6, 20);
  cfg.record_trace = false;
  RngState rng(8);
  const auto p = generate_unsat(cfg, rng);
  EXPECT_TRUE(p.trace()->steps.empty());
  EXPECT_TRUE(p.trace()->init_vars.empty());
  EXPECT_EQ(p.cnf.num_clauses(), 20u);
}

TEST(GenerateUnsat, ConfigErrors) {
  RngState rng(9);
  auto cfg = base_config(4, 3);
  cfg.init_size = 2;
  EXPECT_THROW(generate_unsat(cfg, rng), ConfigError);
  cfg = base_config(4, 3);
  cfg.init_size = 0;
  EXPECT_THROW(generate_unsat(cfg, rng), ConfigError);
  cfg = base_config(0, 3);
  EXPECT_THROW(generate_unsat(cfg, rng), ConfigError);
}

TEST(UnsatWithSatTail, TailSatisfiesHiddenAssignment) {
  auto cfg = base_config(9, 4);
  cfg.depth = 0;
  SatGenConfig sat;
  sat.n = 9;
  RngState rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto p = unsat_with_sat_tail(cfg, sat, rng);
    ASSERT_EQ(p.cnf.num_clauses(), 4u);
    const Var j = p.cnf[0].literals.at(0).var;
    ASSERT_EQ(p.cnf[0], Clause{pos(j)});
    ASSERT_EQ(p.cnf[1], Clause{neg(j)});
    const auto& alpha = *p.trace()->tail_witness;
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) bits |= std::uint64_t(alpha[k]) << k;
    const auto ints = as_ints(p.cnf);
    ASSERT_TRUE(naive_eval({ints[2], ints[3]}, bits, 9));
  }
}

TEST(UnsatWithSatTail, BruteForceUnsatisfiable) {
  RngState rng(11);
  for (int i = 0; i < 500; ++i) {
    const Var n = 1 + static_cast<Var>(rng.uniform_below(14));
    const std::size_t m = std::max<std::size_t>(2, static_cast<std::size_t>(4.27 * n));
    auto cfg = shallow_bloom(base_config(n, m));
    SatGenConfig sat;
    sat.n = n;
    const auto p = unsat_with_sat_tail(cfg, sat, rng);
    ASSERT_FALSE(naive_satisfiable(p.cnf));
  }
  SatGenConfig other;
  other.n = 3;
  EXPECT_THROW(unsat_with_sat_tail(base_config(4, 4), other, rng), ArgumentError);
}

// Independent enumeration of every core reachable in at most two blooming
// rounds that each split exactly one clause, starting from one unit pair.
std::set<IntCore> enumerate_cores(int n, std::size_t m) {
  std::set<IntCore> all;
  std::vector<IntCore> frontier;
  for (int j = 1; j <= n; ++j) frontier.push_back(canonical_core({{j}, {-j}}));
  all.insert(frontier.begin(), frontier.end());
  for (int round = 0; round < 2; ++round) {
    std::vector<IntCore> next;
    for (const auto& core : frontier) {
      if (2 * core.size() > m) continue;
      bool full = false;
      for (const auto& c : core) full = full || static_cast<int>(c.size()) >= n;
      if (full) continue;
      for (std::size_t i = 0; i < core.size(); ++i) {
        const auto& c = core[i];
        for (int cut = 1; cut <= n; ++cut) {
          bool used = false;
          for (int l : c) used = used || std::abs(l) == cut;
          if (used) continue;
          int combos = 1;
          for (std::size_t k = 0; k < c.size(); ++k) combos *= 3;
          for (int code = 0; code < combos; ++code) {
            IntClause a, b;
            int x = code;
            for (int l : c) {
              const int ch = x % 3;
              x /= 3;
              if (ch != 1) a.push_back(l);
              if (ch != 0) b.push_back(l);
            }
            a.push_back(cut);
            b.push_back(-cut);
            IntCore grown;
            for (std::size_t k = 0; k < core.size(); ++k)
              if (k != i) grown.push_back(core[k]);
            grown.push_back(a);
            grown.push_back(b);
            auto canon = canonical_core(std::move(grown));
            if (all.insert(canon).second) next.push_back(std::move(canon));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

TEST(GenerateUnsat, RestrictedCompletenessAtThreeVariables) {
  const std::size_t m = 6;
  const auto expected = enumerate_cores(3, m);
  for (const auto& core : expected) {
    std::vector<Clause> cl;
    for (const auto& c : core) {
      Clause k;
      for (int l : c) k.literals.push_back(Literal::from_int(l));
      cl.push_back(k);
    }
    ASSERT_FALSE(naive_satisfiable(Cnf(3, cl)));
  }

  auto cfg = base_config(3, m);
  cfg.down_clause = {DownClause::Mode::ExactlyOne, 1.0};
  cfg.bloom = dist::BloomWeights{1, 1, 1};
  RngState rng(12);
  std::set<IntCore> seen;
  for (int i = 0; i < 200000; ++i) {
    cfg.depth = rng.uniform_below(3);
    const auto p = generate_unsat(cfg, rng);
    const auto core = replay_trace(*p.trace(), 3);
    seen.insert(canonical_core(as_ints(core)));
  }
  std::size_t missing = 0;
  for (const auto& c : expected) missing += !seen.count(c);
  EXPECT_EQ(missing, 0u) << "of " << expected.size() << " enumerated cores";
  for (const auto& c : seen) EXPECT_TRUE(expected.count(c));
}

}  // namespace
}  // namespace labelsat
