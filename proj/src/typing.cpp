// SPDX-License-Identifier: Apache-2.0
#include "nicheck/typing.hpp"

namespace nicheck {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Level join_aexp(const AExp& e, const SecEnv& env) {
  return std::visit(overloaded{
                        [&](const AExp::IntConst&) { return Level::Lo; },
                        [&](const AExp::Var& v) { return env.level_of(v.name); },
                        [&](const AExp::Bin& b) {
                          return join(join_aexp(*b.lhs, env), join_aexp(*b.rhs, env));
                        },
                    },
                    e.node);
}

Level join_bexp(const BExp& b, const SecEnv& env) {
  return std::visit(
      overloaded{
          [&](const BExp::BoolConst&) { return Level::Lo; },
          [&](const BExp::Cmp& c) { return join(join_aexp(*c.lhs, env), join_aexp(*c.rhs, env)); },
          [&](const BExp::Not& n) { return join_bexp(*n.inner, env); },
          [&](const BExp::And& a) { return join(join_bexp(*a.lhs, env), join_bexp(*a.rhs, env)); },
          [&](const BExp::Or& o) { return join(join_bexp(*o.lhs, env), join_bexp(*o.rhs, env)); },
      },
      b.node);
}

}  // namespace

Level min_tp(const AExp& e, const SecEnv& env) { return join_aexp(e, env); }
Level min_tp(const BExp& b, const SecEnv& env) { return join_bexp(b, env); }
Level min_tp(const ExprOrTest& e, const SecEnv& env) {
  return std::visit([&](const auto& p) { return min_tp(*p, env); }, e);
}

bool has_type(const AExp& e, Level l, const SecEnv& env) { return leq(min_tp(e, env), l); }
bool has_type(const BExp& b, Level l, const SecEnv& env) { return leq(min_tp(b, env), l); }
bool has_type(const ExprOrTest& e, Level l, const SecEnv& env) {
  return leq(min_tp(e, env), l);
}

}  // namespace nicheck
