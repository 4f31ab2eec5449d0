// SPDX-License-Identifier: Apache-2.0
#include "nicheck/printer.hpp"

#include <sstream>
#include <variant>

namespace nicheck {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* arith_op_text(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
  }
  return "?";
}

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
  }
  return "?";
}

// Precedence levels: 0 additive, 1 multiplicative, 2 atomic. A right operand
// at the same level needs parentheses because the grammar chains left-to-left.
void print_aexp(std::ostream& os, const AExp& e, int min_prec, bool right_operand) {
  std::visit(overloaded{
                 [&](const AExp::IntConst& c) { os << c.value; },
                 [&](const AExp::Var& v) { os << v.name; },
                 [&](const AExp::Bin& b) {
                   int prec = b.op == ArithOp::Mul ? 1 : 0;
                   bool parens = prec < min_prec || (prec == min_prec && right_operand);
                   if (parens) os << "(";
                   print_aexp(os, *b.lhs, prec, false);
                   os << " " << arith_op_text(b.op) << " ";
                   print_aexp(os, *b.rhs, prec, true);
                   if (parens) os << ")";
                 },
             },
             e.node);
}

// Precedence: 0 or, 1 and, 2 not/atomic.
void print_bexp(std::ostream& os, const BExp& b, int min_prec, bool right_operand) {
  std::visit(overloaded{
                 [&](const BExp::BoolConst& c) { os << (c.value ? "true" : "false"); },
                 [&](const BExp::Cmp& c) {
                   print_aexp(os, *c.lhs, 0, false);
                   os << " " << cmp_op_text(c.op) << " ";
                   print_aexp(os, *c.rhs, 0, false);
                 },
                 [&](const BExp::Not& n) {
                   os << "not ";
                   print_bexp(os, *n.inner, 2, false);
                 },
                 [&](const BExp::And& a) {
                   bool parens = 1 < min_prec || (1 == min_prec && right_operand);
                   if (parens) os << "(";
                   print_bexp(os, *a.lhs, 1, false);
                   os << " and ";
                   print_bexp(os, *a.rhs, 1, true);
                   if (parens) os << ")";
                 },
                 [&](const BExp::Or& o) {
                   bool parens = 0 < min_prec || (0 == min_prec && right_operand);
                   if (parens) os << "(";
                   print_bexp(os, *o.lhs, 0, false);
                   os << " or ";
                   print_bexp(os, *o.rhs, 0, true);
                   if (parens) os << ")";
                 },
             },
             b.node);
}

// seq_left: the position is the left operand of ";", which the grammar
// restricts to a parenthesized or atomic unit.
void print_cmd(std::ostream& os, const Cmd& c, bool seq_left) {
  std::visit(overloaded{
                 [&](const Cmd::Assign& a) {
                   os << a.var << " := ";
                   print_aexp(os, *a.value, 0, false);
                 },
                 [&](const Cmd::Seq& s) {
                   if (seq_left) os << "(";
                   print_cmd(os, *s.first, true);
                   os << " ; ";
                   print_cmd(os, *s.second, false);
                   if (seq_left) os << ")";
                 },
                 [&](const Cmd::If& i) {
                   os << "if ";
                   print_bexp(os, *i.guard, 0, false);
                   os << " then ";
                   print_cmd(os, *i.then_branch, false);
                   os << " else ";
                   print_cmd(os, *i.else_branch, false);
                   os << " fi";
                 },
                 [&](const Cmd::While& w) {
                   os << "while ";
                   print_bexp(os, *w.guard, 0, false);
                   os << " do ";
                   print_cmd(os, *w.body, false);
                   os << " od";
                 },
                 [&](const Cmd::Par& p) {
                   os << "{ ";
                   print_cmd(os, *p.left, false);
                   os << " || ";
                   print_cmd(os, *p.right, false);
                   os << " }";
                 },
             },
             c.node);
}

}  // namespace

std::string to_string(const AExp& e) {
  std::ostringstream os;
  print_aexp(os, e, 0, false);
  return os.str();
}

std::string to_string(const BExp& b) {
  std::ostringstream os;
  print_bexp(os, b, 0, false);
  return os.str();
}

std::string to_string(const Cmd& c) {
  std::ostringstream os;
  print_cmd(os, c, false);
  return os.str();
}

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  for (Level group : {Level::Lo, Level::Hi}) {
    bool first = true;
    for (const auto& [name, level] : p.env.levels) {
      if (level != group) continue;
      os << (first ? (group == Level::Lo ? "low " : "high ") : ", ") << name;
      first = false;
    }
    if (!first) os << ";\n";
  }
  print_cmd(os, *p.body, false);
  return os.str();
}

}  // namespace nicheck
