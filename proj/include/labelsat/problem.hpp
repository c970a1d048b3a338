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
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "labelsat/cnf.hpp"

namespace labelsat {

// Carry choice for a parent literal: 0 = positive child only, 1 = negative
// child only, 2 = both.
using BloomChoice = std::uint8_t;

// One round of backward resolution. selected[i] is an index into the core as
// it stood before the round; cut_vars[i] and choices[i] describe how that
// clause split.
struct BloomStep {
  std::vector<std::size_t> selected;
  std::vector<Var> cut_vars;
  std::vector<std::vector<BloomChoice>> choices;

  friend bool operator==(const BloomStep&, const BloomStep&) = default;
};

// Witness for an UNSAT label: enough to rebuild the unsatisfiable core.
struct BloomTrace {
  std::vector<Var> init_vars;  // each contributes (x_j) and (-x_j)
  std::vector<BloomStep> steps;
  std::size_t core_size = 0;
  std::optional<Assignment> tail_witness;  // set when the padding is a satisfiable formula

  friend bool operator==(const BloomTrace&, const BloomTrace&) = default;
};

// Splits `parent` on the unused variable `cut`. The positive child carries the
// literals with choice 0 or 2, the negative child those with choice 1 or 2;
// both end with the cut literal. Resolving the children on `cut` gives back
// `parent`.
inline std::pair<Clause, Clause> bloom_clause(const Clause& parent, Var cut,
                                              const std::vector<BloomChoice>& choices) {
  if (choices.size() != parent.size())
    throw ArgumentError("bloom_clause: one choice per parent literal required");
  Clause pos_child, neg_child;
  pos_child.literals.reserve(parent.size() + 1);
  neg_child.literals.reserve(parent.size() + 1);
  for (std::size_t k = 0; k < parent.size(); ++k) {
    const auto& l = parent.literals[k];
    if (l.var == cut) throw ArgumentError("bloom_clause: cut variable already used in the clause");
    if (choices[k] > 2) throw ArgumentError("bloom_clause: choice must be 0, 1 or 2");
    if (choices[k] != 1) pos_child.literals.push_back(l);
    if (choices[k] != 0) neg_child.literals.push_back(l);
  }
  pos_child.literals.push_back(pos(cut));
  neg_child.literals.push_back(neg(cut));
  return {std::move(pos_child), std::move(neg_child)};
}

inline std::vector<Clause> initial_core(const std::vector<Var>& init_vars) {
  std::vector<Clause> core;
  core.reserve(init_vars.size() * 2);
  for (Var j : init_vars) {
    core.push_back(Clause{pos(j)});
    core.push_back(Clause{neg(j)});
  }
  return core;
}

// Bloomed children (in selection order) followed by the untouched clauses.
inline std::vector<Clause> apply_step(const std::vector<Clause>& core, const BloomStep& step) {
  if (step.cut_vars.size() != step.selected.size() || step.choices.size() != step.selected.size())
    throw ArgumentError("apply_step: inconsistent step record");
  std::vector<bool> picked(core.size(), false);
  std::vector<Clause> next;
  next.reserve(core.size() + step.selected.size());
  for (std::size_t s = 0; s < step.selected.size(); ++s) {
    const auto idx = step.selected[s];
    if (idx >= core.size() || picked[idx]) throw ArgumentError("apply_step: bad selection index");
    picked[idx] = true;
    auto [a, b] = bloom_clause(core[idx], step.cut_vars[s], step.choices[s]);
    next.push_back(std::move(a));
    next.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < core.size(); ++i)
    if (!picked[i]) next.push_back(core[i]);
  return next;
}

// Rebuilds the unsatisfiable core recorded by `trace`.
inline Cnf replay_trace(const BloomTrace& trace, Var num_vars) {
  auto core = initial_core(trace.init_vars);
  for (const auto& step : trace.steps) core = apply_step(core, step);
  return Cnf(num_vars, std::move(core));
}

struct LabeledProblem {
  Cnf cnf;
  Label label = Label::Sat;
  std::variant<Assignment, BloomTrace> witness;

  const Assignment* assignment() const { return std::get_if<Assignment>(&witness); }
  const BloomTrace* trace() const { return std::get_if<BloomTrace>(&witness); }
};

}  // namespace labelsat
