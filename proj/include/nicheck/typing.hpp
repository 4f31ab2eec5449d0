// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

#include "nicheck/lang.hpp"

namespace nicheck {

/// An arithmetic expression or a boolean test; both are typed the same way.
using ExprOrTest = std::variant<AExpPtr, BExpPtr>;

/// Minimal security type: the join of the levels of all variables occurring
/// in the expression; Lo when it has no variables (empty join is bottom).
Level min_tp(const AExp& e, const SecEnv& env);
Level min_tp(const BExp& b, const SecEnv& env);
Level min_tp(const ExprOrTest& e, const SecEnv& env);

/// The subtype-closed typing relation: e has type l iff min_tp(e) <= l.
bool has_type(const AExp& e, Level l, const SecEnv& env);
bool has_type(const BExp& b, Level l, const SecEnv& env);
bool has_type(const ExprOrTest& e, Level l, const SecEnv& env);

}  // namespace nicheck
