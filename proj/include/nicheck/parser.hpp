// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "nicheck/lang.hpp"

namespace nicheck {

/// Parses a program file: declarations (`low a, b;` / `high h;`) followed by
/// one command. `#` starts a line comment. Throws ParseError with a 1-based
/// line/column on syntax errors, use of undeclared variables, and duplicate
/// declarations.
Program parse_program(std::string_view text);

}  // namespace nicheck
