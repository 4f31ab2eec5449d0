// SPDX-License-Identifier: Apache-2.0
#include "nicheck/lang.hpp"

#include <algorithm>

namespace nicheck {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const char* level_name(Level l) { return l == Level::Lo ? "lo" : "hi"; }

Level level_from_name(const std::string& s) {
  if (s == "lo") return Level::Lo;
  if (s == "hi") return Level::Hi;
  throw Error("not a security level: " + s);
}

Level SecEnv::level_of(const std::string& name) const {
  auto it = levels.find(name);
  if (it == levels.end()) throw UnknownVariableError(name);
  return it->second;
}

std::vector<std::string> SecEnv::variables() const {
  std::vector<std::string> out;
  out.reserve(levels.size());
  for (const auto& [name, _] : levels) out.push_back(name);
  return out;
}

AExpPtr mk_int(long long value) {
  return std::make_shared<const AExp>(AExp{AExp::IntConst{value}});
}
AExpPtr mk_var(std::string name) {
  return std::make_shared<const AExp>(AExp{AExp::Var{std::move(name)}});
}
AExpPtr mk_bin(ArithOp op, AExpPtr lhs, AExpPtr rhs) {
  return std::make_shared<const AExp>(AExp{AExp::Bin{op, std::move(lhs), std::move(rhs)}});
}

BExpPtr mk_bool(bool value) {
  return std::make_shared<const BExp>(BExp{BExp::BoolConst{value}});
}
BExpPtr mk_cmp(CmpOp op, AExpPtr lhs, AExpPtr rhs) {
  return std::make_shared<const BExp>(BExp{BExp::Cmp{op, std::move(lhs), std::move(rhs)}});
}
BExpPtr mk_not(BExpPtr inner) {
  return std::make_shared<const BExp>(BExp{BExp::Not{std::move(inner)}});
}
BExpPtr mk_and(BExpPtr lhs, BExpPtr rhs) {
  return std::make_shared<const BExp>(BExp{BExp::And{std::move(lhs), std::move(rhs)}});
}
BExpPtr mk_or(BExpPtr lhs, BExpPtr rhs) {
  return std::make_shared<const BExp>(BExp{BExp::Or{std::move(lhs), std::move(rhs)}});
}

CmdPtr mk_assign(std::string var, AExpPtr value, SourcePos pos) {
  return std::make_shared<const Cmd>(Cmd{Cmd::Assign{std::move(var), std::move(value)}, pos});
}
CmdPtr mk_seq(CmdPtr first, CmdPtr second, SourcePos pos) {
  return std::make_shared<const Cmd>(Cmd{Cmd::Seq{std::move(first), std::move(second)}, pos});
}
CmdPtr mk_if(BExpPtr guard, CmdPtr then_branch, CmdPtr else_branch, SourcePos pos) {
  return std::make_shared<const Cmd>(
      Cmd{Cmd::If{std::move(guard), std::move(then_branch), std::move(else_branch)}, pos});
}
CmdPtr mk_while(BExpPtr guard, CmdPtr body, SourcePos pos) {
  return std::make_shared<const Cmd>(Cmd{Cmd::While{std::move(guard), std::move(body)}, pos});
}
CmdPtr mk_par(CmdPtr left, CmdPtr right, SourcePos pos) {
  return std::make_shared<const Cmd>(Cmd{Cmd::Par{std::move(left), std::move(right)}, pos});
}

bool operator==(const AExp& a, const AExp& b) {
  if (&a == &b) return true;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const AExp::IntConst& x) { return x.value == std::get<AExp::IntConst>(b.node).value; },
          [&](const AExp::Var& x) { return x.name == std::get<AExp::Var>(b.node).name; },
          [&](const AExp::Bin& x) {
            const auto& y = std::get<AExp::Bin>(b.node);
            return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
      },
      a.node);
}

bool operator==(const BExp& a, const BExp& b) {
  if (&a == &b) return true;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const BExp::BoolConst& x) {
            return x.value == std::get<BExp::BoolConst>(b.node).value;
          },
          [&](const BExp::Cmp& x) {
            const auto& y = std::get<BExp::Cmp>(b.node);
            return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [&](const BExp::Not& x) { return *x.inner == *std::get<BExp::Not>(b.node).inner; },
          [&](const BExp::And& x) {
            const auto& y = std::get<BExp::And>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [&](const BExp::Or& x) {
            const auto& y = std::get<BExp::Or>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
      },
      a.node);
}

bool operator==(const Cmd& a, const Cmd& b) {
  if (&a == &b) return true;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Cmd::Assign& x) {
            const auto& y = std::get<Cmd::Assign>(b.node);
            return x.var == y.var && *x.value == *y.value;
          },
          [&](const Cmd::Seq& x) {
            const auto& y = std::get<Cmd::Seq>(b.node);
            return *x.first == *y.first && *x.second == *y.second;
          },
          [&](const Cmd::If& x) {
            const auto& y = std::get<Cmd::If>(b.node);
            return *x.guard == *y.guard && *x.then_branch == *y.then_branch &&
                   *x.else_branch == *y.else_branch;
          },
          [&](const Cmd::While& x) {
            const auto& y = std::get<Cmd::While>(b.node);
            return *x.guard == *y.guard && *x.body == *y.body;
          },
          [&](const Cmd::Par& x) {
            const auto& y = std::get<Cmd::Par>(b.node);
            return *x.left == *y.left && *x.right == *y.right;
          },
      },
      a.node);
}

bool operator==(const Program& a, const Program& b) {
  return a.env == b.env && *a.body == *b.body;
}

namespace {

void collect_vars(const AExp& e, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const AExp::IntConst&) {},
                 [&](const AExp::Var& v) { out.insert(v.name); },
                 [&](const AExp::Bin& b) {
                   collect_vars(*b.lhs, out);
                   collect_vars(*b.rhs, out);
                 },
             },
             e.node);
}

void collect_vars(const BExp& b, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const BExp::BoolConst&) {},
                 [&](const BExp::Cmp& c) {
                   collect_vars(*c.lhs, out);
                   collect_vars(*c.rhs, out);
                 },
                 [&](const BExp::Not& n) { collect_vars(*n.inner, out); },
                 [&](const BExp::And& a) {
                   collect_vars(*a.lhs, out);
                   collect_vars(*a.rhs, out);
                 },
                 [&](const BExp::Or& o) {
                   collect_vars(*o.lhs, out);
                   collect_vars(*o.rhs, out);
                 },
             },
             b.node);
}

void collect_vars(const Cmd& c, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Cmd::Assign& a) {
                   out.insert(a.var);
                   collect_vars(*a.value, out);
                 },
                 [&](const Cmd::Seq& s) {
                   collect_vars(*s.first, out);
                   collect_vars(*s.second, out);
                 },
                 [&](const Cmd::If& i) {
                   collect_vars(*i.guard, out);
                   collect_vars(*i.then_branch, out);
                   collect_vars(*i.else_branch, out);
                 },
                 [&](const Cmd::While& w) {
                   collect_vars(*w.guard, out);
                   collect_vars(*w.body, out);
                 },
                 [&](const Cmd::Par& p) {
                   collect_vars(*p.left, out);
                   collect_vars(*p.right, out);
                 },
             },
             c.node);
}

}  // namespace

std::set<std::string> vars_of(const AExp& e) {
  std::set<std::string> out;
  collect_vars(e, out);
  return out;
}
std::set<std::string> vars_of(const BExp& b) {
  std::set<std::string> out;
  collect_vars(b, out);
  return out;
}
std::set<std::string> vars_of(const Cmd& c) {
  std::set<std::string> out;
  collect_vars(c, out);
  return out;
}

bool no_while(const Cmd& c) {
  return std::visit(
      overloaded{
          [](const Cmd::Assign&) { return true; },
          [](const Cmd::Seq& s) { return no_while(*s.first) && no_while(*s.second); },
          [](const Cmd::If& i) { return no_while(*i.then_branch) && no_while(*i.else_branch); },
          [](const Cmd::While&) { return false; },
          [](const Cmd::Par& p) { return no_while(*p.left) && no_while(*p.right); },
      },
      c.node);
}

int count_nodes(const Cmd& c) {
  return std::visit(
      overloaded{
          [](const Cmd::Assign&) { return 1; },
          [](const Cmd::Seq& s) { return 1 + count_nodes(*s.first) + count_nodes(*s.second); },
          [](const Cmd::If& i) {
            return 1 + count_nodes(*i.then_branch) + count_nodes(*i.else_branch);
          },
          [](const Cmd::While& w) { return 1 + count_nodes(*w.body); },
          [](const Cmd::Par& p) { return 1 + count_nodes(*p.left) + count_nodes(*p.right); },
      },
      c.node);
}

}  // namespace nicheck
