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

// Shared helpers for the unit suites: random formulas and a naive evaluator
// that does not share code with the library.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labelsat/cnf.hpp"
#include "labelsat/rng.hpp"

namespace labelsat::testing {

// Random formula with uniformly random clause widths in [0, max_width].
inline Cnf random_cnf(RngState& rng, Var n, std::size_t m, std::size_t max_width, bool allow_empty = false) {
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = allow_empty ? 0 : 1;
    const std::size_t w = std::min<std::size_t>(n, lo + rng.uniform_below(max_width - lo + 1));
    std::vector<Var> vars;
    while (vars.size() < w) {
      Var v = static_cast<Var>(rng.uniform_below(n)) + 1;
      bool dup = false;
      for (Var u : vars) dup = dup || u == v;
      if (!dup) vars.push_back(v);
    }
    Clause c;
    for (Var v : vars) c.literals.push_back({v, rng.bernoulli(0.5)});
    clauses.push_back(std::move(c));
  }
  return Cnf(n, std::move(clauses));
}

// Direct reading of the boolean semantics on signed-integer clauses.
inline bool naive_eval(const std::vector<std::vector<int>>& clauses, std::uint64_t bits, int v) {
  for (const auto& c : clauses) {
    bool any = false;
    for (int lit : c) {
      const int var = lit > 0 ? lit : -lit;
      const bool val = (bits >> (var - 1)) & 1;
      if ((lit > 0) == val) any = true;
    }
    if (!any) return false;
  }
  (void)v;
  return true;
}

inline std::vector<std::vector<int>> as_ints(const Cnf& f) {
  std::vector<std::vector<int>> out;
  for (const auto& c : f.clauses()) {
    std::vector<int> row;
    for (const auto& l : c.literals) row.push_back(static_cast<int>(l.to_int()));
    out.push_back(row);
  }
  return out;
}

// Independent satisfiability check: plain loop over every assignment.
inline bool naive_satisfiable(const Cnf& f) {
  const auto ints = as_ints(f);
  const int v = static_cast<int>(f.num_vars());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits)
    if (naive_eval(ints, bits, v)) return true;
  return false;
}

inline Assignment bits_to_assignment(std::uint64_t bits, Var v) {
  Assignment a(v);
  for (Var j = 0; j < v; ++j) a[j] = (bits >> j) & 1;
  return a;
}

}  // namespace labelsat::testing
