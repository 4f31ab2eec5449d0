// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nicheck/errors.hpp"

namespace nicheck {

/// Security level of the two-point lattice, ordered Lo < Hi.
enum class Level : std::uint8_t { Lo, Hi };

constexpr bool leq(Level a, Level b) {
  return a == Level::Lo || b == Level::Hi;
}
constexpr Level join(Level a, Level b) {
  return (a == Level::Hi || b == Level::Hi) ? Level::Hi : Level::Lo;
}
constexpr Level meet(Level a, Level b) {
  return (a == Level::Lo || b == Level::Lo) ? Level::Lo : Level::Hi;
}

const char* level_name(Level l);          // "lo" / "hi"
Level level_from_name(const std::string& s);

/// Security classification of program variables.
struct SecEnv {
  std::map<std::string, Level> levels;

  Level level_of(const std::string& name) const;
  bool contains(const std::string& name) const { return levels.count(name) != 0; }
  std::vector<std::string> variables() const;  // sorted

  bool operator==(const SecEnv&) const = default;
};

struct SourcePos {
  int line = 0;
  int col = 0;
};

enum class ArithOp : std::uint8_t { Add, Sub, Mul };
enum class CmpOp : std::uint8_t { Eq, Lt, Le };

struct AExp;
struct BExp;
struct Cmd;
using AExpPtr = std::shared_ptr<const AExp>;
using BExpPtr = std::shared_ptr<const BExp>;
using CmdPtr = std::shared_ptr<const Cmd>;

/// Arithmetic expression tree.
struct AExp {
  struct IntConst {
    long long value;
  };
  struct Var {
    std::string name;
  };
  struct Bin {
    ArithOp op;
    AExpPtr lhs;
    AExpPtr rhs;
  };
  std::variant<IntConst, Var, Bin> node;
};

/// Boolean test tree over arithmetic comparisons.
struct BExp {
  struct BoolConst {
    bool value;
  };
  struct Cmp {
    CmpOp op;
    AExpPtr lhs;
    AExpPtr rhs;
  };
  struct Not {
    BExpPtr inner;
  };
  struct And {
    BExpPtr lhs;
    BExpPtr rhs;
  };
  struct Or {
    BExpPtr lhs;
    BExpPtr rhs;
  };
  std::variant<BoolConst, Cmp, Not, And, Or> node;
};

/// Command tree of the parallel while-language. Assignments are the only atoms.
struct Cmd {
  struct Assign {
    std::string var;
    AExpPtr value;
  };
  struct Seq {
    CmdPtr first;
    CmdPtr second;
  };
  struct If {
    BExpPtr guard;
    CmdPtr then_branch;
    CmdPtr else_branch;
  };
  struct While {
    BExpPtr guard;
    CmdPtr body;
  };
  struct Par {
    CmdPtr left;
    CmdPtr right;
  };
  std::variant<Assign, Seq, If, While, Par> node;
  SourcePos pos{};  // ignored by structural equality
};

AExpPtr mk_int(long long value);
AExpPtr mk_var(std::string name);
AExpPtr mk_bin(ArithOp op, AExpPtr lhs, AExpPtr rhs);

BExpPtr mk_bool(bool value);
BExpPtr mk_cmp(CmpOp op, AExpPtr lhs, AExpPtr rhs);
BExpPtr mk_not(BExpPtr inner);
BExpPtr mk_and(BExpPtr lhs, BExpPtr rhs);
BExpPtr mk_or(BExpPtr lhs, BExpPtr rhs);

CmdPtr mk_assign(std::string var, AExpPtr value, SourcePos pos = {});
CmdPtr mk_seq(CmdPtr first, CmdPtr second, SourcePos pos = {});
CmdPtr mk_if(BExpPtr guard, CmdPtr then_branch, CmdPtr else_branch, SourcePos pos = {});
CmdPtr mk_while(BExpPtr guard, CmdPtr body, SourcePos pos = {});
CmdPtr mk_par(CmdPtr left, CmdPtr right, SourcePos pos = {});

bool operator==(const AExp& a, const AExp& b);
bool operator==(const BExp& a, const BExp& b);
bool operator==(const Cmd& a, const Cmd& b);
inline bool operator!=(const AExp& a, const AExp& b) { return !(a == b); }
inline bool operator!=(const BExp& a, const BExp& b) { return !(a == b); }
inline bool operator!=(const Cmd& a, const Cmd& b) { return !(a == b); }

/// A command together with the classification of its variables.
struct Program {
  SecEnv env;
  CmdPtr body;
};

bool operator==(const Program& a, const Program& b);
inline bool operator!=(const Program& a, const Program& b) { return !(a == b); }

std::set<std::string> vars_of(const AExp& e);
std::set<std::string> vars_of(const BExp& b);
std::set<std::string> vars_of(const Cmd& c);

/// True iff no While node occurs anywhere in c.
bool no_while(const Cmd& c);

/// Number of command constructors in the tree (expression nodes not counted).
int count_nodes(const Cmd& c);

}  // namespace nicheck
