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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "labelsat/errors.hpp"

namespace labelsat {

using Var = std::uint32_t;

struct Literal {
  Var var = 0;  // 1-based
  bool positive = true;

  constexpr Literal negated() const noexcept { return {var, !positive}; }

  // DIMACS-style signed integer.
  constexpr std::int64_t to_int() const noexcept {
    return positive ? static_cast<std::int64_t>(var) : -static_cast<std::int64_t>(var);
  }
  static constexpr Literal from_int(std::int64_t v) noexcept {
    return v > 0 ? Literal{static_cast<Var>(v), true} : Literal{static_cast<Var>(-v), false};
  }

  // Agrees with the assignment (makes the literal true).
  bool agrees(bool value) const noexcept { return value == positive; }

  friend constexpr bool operator==(const Literal&, const Literal&) = default;
  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

constexpr Literal pos(Var v) noexcept { return {v, true}; }
constexpr Literal neg(Var v) noexcept { return {v, false}; }

// A disjunction of literals with at most one literal per variable.
struct Clause {
  std::vector<Literal> literals;

  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : literals(lits) {}
  explicit Clause(std::vector<Literal> lits) : literals(std::move(lits)) {}

  std::size_t size() const noexcept { return literals.size(); }
  bool empty() const noexcept { return literals.empty(); }
  auto begin() const noexcept { return literals.begin(); }
  auto end() const noexcept { return literals.end(); }

  std::size_t positive_count() const noexcept {
    std::size_t c = 0;
    for (const auto& l : literals) c += l.positive ? 1 : 0;
    return c;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

// A CNF formula over variables 1..num_vars. Immutable once built; the
// constructor enforces the variable range and one-literal-per-variable rules.
class Cnf {
 public:
  Cnf() = default;
  explicit Cnf(Var num_vars) : num_vars_(num_vars) {}
  Cnf(Var num_vars, std::vector<Clause> clauses)
      : num_vars_(num_vars), clauses_(std::move(clauses)) {
    validate();
  }

  Var num_vars() const noexcept { return num_vars_; }
  std::size_t num_clauses() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  std::size_t num_literals() const noexcept {
    std::size_t n = 0;
    for (const auto& c : clauses_) n += c.size();
    return n;
  }

  std::size_t positive_literals() const noexcept {
    std::size_t n = 0;
    for (const auto& c : clauses_) n += c.positive_count();
    return n;
  }

  bool has_empty_clause() const noexcept {
    for (const auto& c : clauses_)
      if (c.empty()) return true;
    return false;
  }

  // Conjunction with another formula over the same variables.
  Cnf conjoin(const Cnf& other) const {
    if (other.num_vars_ != num_vars_)
      throw ArgumentError("conjoin: variable counts differ");
    std::vector<Clause> all = clauses_;
    all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
    Cnf out;
    out.num_vars_ = num_vars_;
    out.clauses_ = std::move(all);
    return out;
  }

  friend bool operator==(const Cnf&, const Cnf&) = default;

 private:
  void validate() const {
    std::vector<std::size_t> seen(static_cast<std::size_t>(num_vars_) + 1, 0);
    std::size_t stamp = 0;
    for (const auto& c : clauses_) {
      ++stamp;
      for (const auto& l : c.literals) {
        if (l.var < 1 || l.var > num_vars_)
          throw ArgumentError("literal variable " + std::to_string(l.var) +
                              " outside 1.." + std::to_string(num_vars_));
        if (seen[l.var] == stamp)
          throw ArgumentError("variable " + std::to_string(l.var) +
                              " occurs twice in one clause");
        seen[l.var] = stamp;
      }
    }
  }

  Var num_vars_ = 0;
  std::vector<Clause> clauses_;
};

inline bool satisfies(const Clause& c, const Assignment& alpha) {
  for (const auto& l : c.literals)
    if (l.agrees(alpha[l.var - 1])) return true;
  return false;
}

// The empty conjunction is true; a formula containing an empty clause is false.
inline bool evaluate(const Cnf& cnf, const Assignment& alpha) {
  if (alpha.size() != cnf.num_vars())
    throw ArgumentError("evaluate: assignment has " + std::to_string(alpha.size()) +
                        " values, formula has " + std::to_string(cnf.num_vars()) +
                        " variables");
  for (const auto& c : cnf.clauses())
    if (!satisfies(c, alpha)) return false;
  return true;
}

enum class Label : std::uint8_t { Unsat = 0, Sat = 1 };

inline const char* to_string(Label l) noexcept { return l == Label::Sat ? "SAT" : "UNSAT"; }

inline Label label_from_string(const std::string& s) {
  if (s == "SAT") return Label::Sat;
  if (s == "UNSAT") return Label::Unsat;
  throw FormatError("unknown label '" + s + "'");
}

}  // namespace labelsat
