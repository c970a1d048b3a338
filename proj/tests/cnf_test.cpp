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

#include "labelsat/cnf.hpp"
#include "labelsat/dense.hpp"
#include "labelsat/mix.hpp"
#include "test_support.hpp"

namespace labelsat {
namespace {

TEST(Evaluate, WitnessForMixedClause) {
  // (x v -y) with x = y = 1.
  const Cnf f(2, {Clause{pos(1), neg(2)}});
  EXPECT_TRUE(evaluate(f, {true, true}));
  EXPECT_FALSE(evaluate(f, {false, true}));
}

TEST(Evaluate, EmptyConjunctionIsTrue) {
  const Cnf f(3);
  EXPECT_TRUE(evaluate(f, {false, true, false}));
}

TEST(Evaluate, EmptyClauseIsFalse) {
  const Cnf f(2, {Clause{}});
  EXPECT_TRUE(f.has_empty_clause());
  for (std::uint64_t bits = 0; bits < 4; ++bits)
    EXPECT_FALSE(evaluate(f, testing::bits_to_assignment(bits, 2)));
}

TEST(Evaluate, LengthMismatchThrows) {
  const Cnf f(2, {Clause{pos(1)}});
  EXPECT_THROW(evaluate(f, {true}), ArgumentError);
}

TEST(Evaluate, MatchesNaiveEvaluatorOnRandomFormulas) {
  RngState rng(11);
  for (int t = 0; t < 300; ++t) {
    const Var v = 1 + static_cast<Var>(rng.uniform_below(10));
    const Cnf f = testing::random_cnf(rng, v, rng.uniform_below(12), 4, /*allow_empty=*/true);
    const auto ints = testing::as_ints(f);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits)
      ASSERT_EQ(evaluate(f, testing::bits_to_assignment(bits, v)), testing::naive_eval(ints, bits, v));
  }
}

TEST(Cnf, RejectsOutOfRangeAndRepeatedVariables) {
  EXPECT_THROW(Cnf(2, {Clause{pos(3)}}), ArgumentError);
  EXPECT_THROW(Cnf(2, {Clause{Literal{0, true}}}), ArgumentError);
  EXPECT_THROW(Cnf(2, {Clause{pos(1), neg(1)}}), ArgumentError);
  EXPECT_THROW(Cnf(2, {Clause{pos(1), pos(1)}}), ArgumentError);
  EXPECT_NO_THROW(Cnf(2, {Clause{pos(1)}, Clause{pos(1)}}));  // duplicate rows are fine
}

TEST(Dense, EncodesPolarityPerCell) {
  // (x1 v -x2) & (x2)
  const Cnf f(2, {Clause{pos(1), neg(2)}, Clause{pos(2)}});
  const auto enc = to_dense(f);
  ASSERT_EQ(enc.rows(), 2u);
  ASSERT_EQ(enc.cols(), 2u);
  EXPECT_EQ(enc.at(0, 0), 1);
  EXPECT_EQ(enc.at(0, 1), -1);
  EXPECT_EQ(enc.at(1, 0), 0);
  EXPECT_EQ(enc.at(1, 1), 1);
}

TEST(Dense, ZeroClauseFormula) {
  const auto enc = to_dense(Cnf(3));
  EXPECT_EQ(enc.rows(), 0u);
  EXPECT_EQ(enc.cols(), 3u);
  EXPECT_TRUE(enc.cells().empty());
  EXPECT_EQ(from_dense(enc), Cnf(3));
}

TEST(Dense, InvalidCellIsFormatError) {
  EXPECT_THROW(DenseEncoding(1, 2, {1, 2}), FormatError);
  EXPECT_THROW(DenseEncoding(1, 2, {1}), FormatError);
}

// Clause membership sets, ignoring literal order.
std::vector<std::vector<Literal>> canonical(const Cnf& f) {
  std::vector<std::vector<Literal>> out;
  for (const auto& c : f.clauses()) {
    auto lits = c.literals;
    std::sort(lits.begin(), lits.end());
    out.push_back(lits);
  }
  return out;
}

TEST(Dense, RoundTripOnGeneratedFormulas) {
  const auto mix = default_mix();
  for (std::uint64_t s = 0; s < 1000; ++s) {
    RngState rng(5, s);
    const auto f = sample_problem(mix, rng).problem.cnf;
    const auto enc = to_dense(f);
    const auto back = from_dense(enc);
    ASSERT_EQ(canonical(back), canonical(f));
    ASSERT_EQ(to_dense(back), enc);
  }
}

TEST(Dense, GridRoundTripIsExact) {
  RngState rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = rng.uniform_below(8), cols = 1 + rng.uniform_below(8);
    std::vector<std::int8_t> cells(rows * cols);
    for (auto& c : cells) c = static_cast<std::int8_t>(static_cast<int>(rng.uniform_below(3)) - 1);
    const DenseEncoding enc(rows, cols, cells);
    ASSERT_EQ(to_dense(from_dense(enc)), enc);
  }
}

TEST(Tokenize, RowsAndColumns) {
  const DenseEncoding enc(2, 2, {1, -1, 0, 1});
  const auto rows = tokenize(enc, Orientation::Rows);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (Token{1, -1}));
  EXPECT_EQ(rows[1], (Token{0, 1}));
  const auto cols = tokenize(enc, Orientation::Columns);
  ASSERT_EQ(cols.size(), 2u);
  EXPECT_EQ(cols[0], (Token{1, 0}));
  EXPECT_EQ(cols[1], (Token{-1, 1}));
}

TEST(Tokenize, ReassemblyReproducesGrid) {
  const auto mix = default_mix();
  for (std::uint64_t s = 0; s < 200; ++s) {
    RngState rng(9, s);
    const auto enc = to_dense(sample_problem(mix, rng).problem.cnf);
    const auto rows = tokenize(enc, Orientation::Rows);
    const auto cols = tokenize(enc, Orientation::Columns);
    ASSERT_EQ(rows.size(), enc.rows());
    ASSERT_EQ(cols.size(), enc.cols());
    for (std::size_t i = 0; i < enc.rows(); ++i)
      for (std::size_t j = 0; j < enc.cols(); ++j) {
        ASSERT_EQ(rows[i][j], enc.at(i, j));
        ASSERT_EQ(cols[j][i], enc.at(i, j));
      }
  }
}

}  // namespace
}  // namespace labelsat
