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
#include <vector>

#include "labelsat/cnf.hpp"

namespace labelsat {

// Variable-space encoding: an m x v grid over {-1, 0, +1}, row-major.
// cell(i, j) is +1 when variable j+1 occurs positively in clause i, -1 when
// negatively, 0 when absent.
class DenseEncoding {
 public:
  DenseEncoding() = default;
  DenseEncoding(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  // Validates every cell; throws FormatError otherwise.
  DenseEncoding(std::size_t rows, std::size_t cols, std::vector<std::int8_t> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_)
      throw FormatError("dense encoding: expected " + std::to_string(rows_ * cols_) +
                        " cells, got " + std::to_string(cells_.size()));
    for (std::size_t k = 0; k < cells_.size(); ++k)
      if (cells_[k] < -1 || cells_[k] > 1)
        throw FormatError("dense encoding: cell (" + std::to_string(k / (cols_ ? cols_ : 1)) +
                          "," + std::to_string(k % (cols_ ? cols_ : 1)) + ") has value " +
                          std::to_string(cells_[k]));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int8_t at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int8_t v) { cells_[i * cols_ + j] = v; }

  std::span<const std::int8_t> row(std::size_t i) const {
    return {cells_.data() + i * cols_, cols_};
  }
  std::span<const std::int8_t> cells() const noexcept { return cells_; }

  friend bool operator==(const DenseEncoding&, const DenseEncoding&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> cells_;
};

inline DenseEncoding to_dense(const Cnf& cnf) {
  DenseEncoding enc(cnf.num_clauses(), cnf.num_vars());
  for (std::size_t i = 0; i < cnf.num_clauses(); ++i)
    for (const auto& l : cnf[i].literals)
      enc.set(i, l.var - 1, l.positive ? 1 : -1);
  return enc;
}

// Literals come out in ascending variable order.
inline Cnf from_dense(const DenseEncoding& enc) {
  std::vector<Clause> clauses(enc.rows());
  for (std::size_t i = 0; i < enc.rows(); ++i) {
    auto r = enc.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] == 0) continue;
      if (r[j] != 1 && r[j] != -1)
        throw FormatError("dense encoding: invalid cell value " + std::to_string(r[j]));
      clauses[i].literals.push_back({static_cast<Var>(j + 1), r[j] > 0});
    }
  }
  return Cnf(static_cast<Var>(enc.cols()), std::move(clauses));
}

enum class Orientation { Rows, Columns };

using Token = std::vector<std::int8_t>;

// Rows: one token per clause (length v). Columns: one token per variable (length m).
inline std::vector<Token> tokenize(const DenseEncoding& enc, Orientation orientation) {
  std::vector<Token> out;
  if (orientation == Orientation::Rows) {
    out.reserve(enc.rows());
    for (std::size_t i = 0; i < enc.rows(); ++i) {
      auto r = enc.row(i);
      out.emplace_back(r.begin(), r.end());
    }
  } else {
    out.assign(enc.cols(), Token(enc.rows(), 0));
    for (std::size_t i = 0; i < enc.rows(); ++i)
      for (std::size_t j = 0; j < enc.cols(); ++j) out[j][i] = enc.at(i, j);
  }
  return out;
}

}  // namespace labelsat
