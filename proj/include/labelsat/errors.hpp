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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace labelsat {

// Bad argument to an operation (length mismatch, invalid palette, k > n...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed data (dense cells outside {-1,0,1}, bad packed file).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DIMACS parse failure. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// Input is beyond an exhaustive oracle's variable cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator was asked to do something its preconditions forbid.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The satisfiability oracle answered inconsistently during self-reduction.
class OracleFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace labelsat
