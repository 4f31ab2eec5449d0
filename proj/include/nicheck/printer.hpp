// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "nicheck/lang.hpp"

namespace nicheck {

std::string to_string(const AExp& e);
std::string to_string(const BExp& b);
std::string to_string(const Cmd& c);

/// Emits text that reparses to a structurally identical Program:
/// one declaration line per nonempty level group, then the body.
std::string pretty_print(const Program& p);

}  // namespace nicheck
