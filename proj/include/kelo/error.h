// Copyright 2026 The kelo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KELO_ERROR_H_
#define KELO_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kelo {

// Bad parameter values or malformed calls. Maps to the CLI usage exit code.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Problems with input data: missing columns, unparseable rows, I/O.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  // 1-based line number in the source file, 0 if not applicable.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Numerical failures: a realized outcome with zero predicted probability, or
// an optimizer that could not converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroProbabilityError : public NumericError {
 public:
  // `game_index` is 0-based; npos when the caller has no game context.
  ZeroProbabilityError(const std::string& what, std::size_t game_index)
      : NumericError(what), game_index_(game_index) {}

  std::size_t game_index() const { return game_index_; }

 private:
  std::size_t game_index_;
};

class NonConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace kelo

#endif  // KELO_ERROR_H_
