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
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "labelsat/cnf.hpp"

namespace labelsat {

enum class DimacsMode {
  Strict,   // declared v and m must match the body
  Lenient,  // mismatched counts tolerated; v grows to the largest variable seen
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

inline Cnf parse_dimacs(std::string_view text, DimacsMode mode = DimacsMode::Strict) {
  bool have_header = false;
  std::int64_t declared_vars = 0;
  std::int64_t declared_clauses = 0;
  std::int64_t max_var = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::vector<std::int64_t> seen;  // last clause index a variable appeared in, +1
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') continue;
    if (toks[0] == "%") {
      if (mode == DimacsMode::Lenient) break;
      throw ParseError(line_no, "unexpected '%' terminator");
    }
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      declared_vars = detail::parse_int(toks[2], line_no);
      declared_clauses = detail::parse_int(toks[3], line_no);
      if (declared_vars < 0 || declared_clauses < 0)
        throw ParseError(line_no, "negative count in header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause data before 'p cnf' header");

    for (auto tok : toks) {
      std::int64_t lit = detail::parse_int(tok, line_no);
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current = Clause{};
        continue;
      }
      std::int64_t var = lit < 0 ? -lit : lit;
      if (var > declared_vars && mode == DimacsMode::Strict)
        throw ParseError(line_no, "literal " + std::to_string(lit) + " exceeds declared " +
                                      std::to_string(declared_vars) + " variables");
      if (var > static_cast<std::int64_t>(UINT32_MAX))
        throw ParseError(line_no, "variable index too large");
      if (static_cast<std::size_t>(var) >= seen.size()) seen.resize(var + 1, 0);
      const auto stamp = static_cast<std::int64_t>(clauses.size()) + 1;
      if (seen[var] == stamp) {
        const auto prev = std::find_if(current.literals.begin(), current.literals.end(),
                                       [&](const Literal& l) { return l.var == var; });
        if (prev->to_int() != lit)
          throw ParseError(line_no, "clause contains complementary literals on variable " +
                                        std::to_string(var));
        if (mode == DimacsMode::Strict)
          throw ParseError(line_no, "duplicate literal " + std::to_string(lit));
        continue;
      }
      seen[var] = stamp;
      max_var = std::max(max_var, var);
      current.literals.push_back(Literal::from_int(lit));
    }
  }

  if (!have_header) throw ParseError(0, "missing 'p cnf' header");
  if (!current.empty()) {
    if (mode == DimacsMode::Strict) throw ParseError(line_no, "last clause is not terminated by 0");
    clauses.push_back(std::move(current));
  }
  if (mode == DimacsMode::Strict && static_cast<std::int64_t>(clauses.size()) != declared_clauses)
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                  " clauses, found " + std::to_string(clauses.size()));
  const auto vars = static_cast<Var>(std::max(declared_vars, max_var));
  return Cnf(vars, std::move(clauses));
}

// One header line, then one line per clause. No comments.
inline std::string serialize_dimacs(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars()) + " " +
                    std::to_string(cnf.num_clauses()) + "\n";
  out.reserve(out.size() + cnf.num_literals() * 4 + cnf.num_clauses() * 2);
  char buf[24];
  for (const auto& c : cnf.clauses()) {
    for (const auto& l : c.literals) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, l.to_int());
      out.append(buf, p);
      out.push_back(' ');
    }
    out += "0\n";
  }
  return out;
}

inline Cnf read_dimacs_file(const std::string& path, DimacsMode mode = DimacsMode::Strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_dimacs(ss.str(), mode);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

inline void write_dimacs_file(const std::string& path, const Cnf& cnf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_dimacs(cnf);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace labelsat
