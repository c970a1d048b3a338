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
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "labelsat/cnf.hpp"
#include "labelsat/errors.hpp"

namespace labelsat {

inline constexpr Var kBruteForceMaxVars = 26;
inline constexpr Var kImplicationMaxVars = 20;

struct OracleResult {
  bool satisfiable = false;
  Assignment witness;  // lexicographically first satisfying assignment when satisfiable
};

namespace detail {

// Evaluates a formula on 64 consecutive assignments at once. Assignment a
// sets x_j to bit (v - j) of a, so increasing a is lexicographic order with
// x_1 most significant. The low six bits vary across lanes.
class BlockEvaluator {
 public:
  explicit BlockEvaluator(const Cnf& cnf) : v_(cnf.num_vars()) {
    static constexpr std::array<std::uint64_t, 6> lane_bits = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    clauses_.reserve(cnf.num_clauses());
    for (const auto& c : cnf.clauses()) {
      Packed p;
      for (const auto& l : c.literals) {
        const unsigned bit = v_ - l.var;
        if (bit < 6) {
          p.low |= l.positive ? lane_bits[bit] : ~lane_bits[bit];
        } else {
          p.high.push_back({bit - 6, l.positive});
        }
      }
      clauses_.push_back(std::move(p));
    }
    // Clauses with no block-dependent literals first: they prune fastest.
    std::stable_sort(clauses_.begin(), clauses_.end(),
                     [](const Packed& a, const Packed& b) { return a.high.size() < b.high.size(); });
  }

  std::uint64_t blocks() const noexcept { return v_ <= 6 ? 1 : (std::uint64_t{1} << (v_ - 6)); }

  std::uint64_t valid_lanes() const noexcept {
    return v_ >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << v_)) - 1);
  }

  // Lanes of `block` whose assignment satisfies every clause.
  std::uint64_t satisfied(std::uint64_t block) const noexcept {
    std::uint64_t result = valid_lanes();
    for (const auto& p : clauses_) {
      bool whole = false;
      for (const auto& h : p.high) {
        if ((((block >> h.bit) & 1) != 0) == h.positive) {
          whole = true;
          break;
        }
      }
      if (whole) continue;
      result &= p.low;
      if (result == 0) return 0;
    }
    return result;
  }

  Assignment assignment(std::uint64_t block, unsigned lane) const {
    const std::uint64_t a = (block << 6) | lane;
    Assignment alpha(v_);
    for (Var j = 1; j <= v_; ++j) alpha[j - 1] = (a >> (v_ - j)) & 1;
    return alpha;
  }

 private:
  struct HighLit {
    unsigned bit;
    bool positive;
  };
  struct Packed {
    std::uint64_t low = 0;
    std::vector<HighLit> high;
  };
  Var v_;
  std::vector<Packed> clauses_;
};

}  // namespace detail

// Exhaustive search over all 2^v assignments (v <= 26).
inline OracleResult brute_force_sat(const Cnf& cnf) {
  if (cnf.num_vars() > kBruteForceMaxVars)
    throw CapacityError("brute_force_sat: " + std::to_string(cnf.num_vars()) + " variables exceeds cap of " +
                        std::to_string(kBruteForceMaxVars));
  const detail::BlockEvaluator eval(cnf);
  for (std::uint64_t b = 0; b < eval.blocks(); ++b) {
    const auto sat = eval.satisfied(b);
    if (sat != 0) return {true, eval.assignment(b, static_cast<unsigned>(std::countr_zero(sat)))};
  }
  return {false, {}};
}

inline bool is_satisfiable(const Cnf& cnf) { return brute_force_sat(cnf).satisfiable; }

// Every model of f is a model of g (full truth-table scan, v <= 20).
inline bool check_implication(const Cnf& f, const Cnf& g) {
  if (f.num_vars() != g.num_vars()) throw ArgumentError("check_implication: variable counts differ");
  if (f.num_vars() > kImplicationMaxVars)
    throw CapacityError("check_implication: " + std::to_string(f.num_vars()) + " variables exceeds cap of " +
                        std::to_string(kImplicationMaxVars));
  const detail::BlockEvaluator ef(f), eg(g);
  for (std::uint64_t b = 0; b < ef.blocks(); ++b) {
    const auto mf = ef.satisfied(b);
    if (mf == 0) continue;
    if ((mf & ~eg.satisfied(b)) != 0) return false;
  }
  return true;
}

// True iff `resolvent` is exactly the resolvent of c1 and c2 on `pivot`.
inline bool resolution_step_check(const Clause& c1, const Clause& c2, Var pivot, const Clause& resolvent) {
  auto find = [](const Clause& c, Var v) -> std::optional<bool> {
    for (const auto& l : c.literals)
      if (l.var == v) return l.positive;
    return std::nullopt;
  };
  const auto p1 = find(c1, pivot);
  const auto p2 = find(c2, pivot);
  if (!p1 || !p2 || *p1 == *p2)
    throw ArgumentError("resolution_step_check: pivot " + std::to_string(pivot) +
                        " does not occur with opposite signs in the two clauses");
  std::set<Literal> expected;
  for (const auto* c : {&c1, &c2})
    for (const auto& l : c->literals)
      if (l.var != pivot) expected.insert(l);
  const std::set<Literal> got(resolvent.begin(), resolvent.end());
  return got == expected && got.size() == resolvent.size();
}

using SatOracle = std::function<bool(const Cnf&)>;

namespace detail {

// x := value; satisfied clauses vanish, falsified literals are dropped.
inline std::vector<Clause> substitute(const std::vector<Clause>& clauses, Var x, bool value) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    bool sat = false;
    Clause reduced;
    reduced.literals.reserve(c.size());
    for (const auto& l : c.literals) {
      if (l.var != x) {
        reduced.literals.push_back(l);
      } else if (l.agrees(value)) {
        sat = true;
        break;
      }
    }
    if (!sat) out.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace detail

// Recovers a satisfying assignment from a yes/no satisfiability oracle by
// fixing x_1..x_v in turn, trying true first. Makes exactly v oracle calls when
// the oracle is consistent. Once the residual formula is empty the remaining
// variables default to false; the oracle is still queried on the empty
// residual as a consistency check.
inline Assignment extract_assignment(const Cnf& cnf, const SatOracle& oracle) {
  const Var v = cnf.num_vars();
  Assignment alpha(v, false);
  std::vector<Clause> residual = cnf.clauses();

  auto fail = [&]() -> Assignment {
    if (!oracle(cnf)) throw ArgumentError("extract_assignment: oracle reports the formula unsatisfiable");
    throw OracleFault("extract_assignment: oracle answers are inconsistent");
  };

  for (Var x = 1; x <= v; ++x) {
    if (residual.empty()) {
      if (!oracle(Cnf(v))) throw OracleFault("extract_assignment: oracle rejects the empty formula");
      continue;
    }
    auto with_true = detail::substitute(residual, x, true);
    if (oracle(Cnf(v, with_true))) {
      alpha[x - 1] = true;
      residual = std::move(with_true);
      continue;
    }
    residual = detail::substitute(residual, x, false);
    if (std::any_of(residual.begin(), residual.end(), [](const Clause& c) { return c.empty(); }))
      return fail();
  }
  if (!evaluate(cnf, alpha)) return fail();
  return alpha;
}

}  // namespace labelsat
