// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nicheck {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax or declaration error with a 1-based source position.
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct UnknownVariableError : Error {
  std::string name;
  explicit UnknownVariableError(const std::string& var)
      : Error("unknown variable: " + var), name(var) {}
};

struct DomainMismatchError : Error {
  using Error::Error;
};

/// Raised when a finite-state exploration would exceed its resource cap.
struct CapExceededError : Error {
  std::size_t limit;
  explicit CapExceededError(std::size_t limit_)
      : Error("state-space cap exceeded (limit " + std::to_string(limit_) + ")"),
        limit(limit_) {}
};

}  // namespace nicheck
