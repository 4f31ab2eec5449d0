// SPDX-License-Identifier: Apache-2.0
#include "nicheck/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace nicheck {

namespace {

enum class Tok {
  Ident,
  Int,
  KwLow,
  KwHigh,
  KwIf,
  KwThen,
  KwElse,
  KwFi,
  KwWhile,
  KwDo,
  KwOd,
  KwTrue,
  KwFalse,
  KwNot,
  KwAnd,
  KwOr,
  Assign,     // :=
  Semi,       // ;
  Comma,      // ,
  LParen,     // (
  RParen,     // )
  LBrace,     // {
  RBrace,     // }
  ParBar,     // ||
  Plus,
  Minus,
  Star,
  Eq,         // =
  Lt,         // <
  Le,         // <=
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long long int_value = 0;
  int line = 1;
  int col = 1;
};

const char* token_desc(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::KwLow: return "'low'";
    case Tok::KwHigh: return "'high'";
    case Tok::KwIf: return "'if'";
    case Tok::KwThen: return "'then'";
    case Tok::KwElse: return "'else'";
    case Tok::KwFi: return "'fi'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwDo: return "'do'";
    case Tok::KwOd: return "'od'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwNot: return "'not'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwOr: return "'or'";
    case Tok::Assign: return "':='";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::ParBar: return "'||'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::optional<Tok> keyword(const std::string& word) {
  if (word == "low") return Tok::KwLow;
  if (word == "high") return Tok::KwHigh;
  if (word == "if") return Tok::KwIf;
  if (word == "then") return Tok::KwThen;
  if (word == "else") return Tok::KwElse;
  if (word == "fi") return Tok::KwFi;
  if (word == "while") return Tok::KwWhile;
  if (word == "do") return Tok::KwDo;
  if (word == "od") return Tok::KwOd;
  if (word == "true") return Tok::KwTrue;
  if (word == "false") return Tok::KwFalse;
  if (word == "not") return Tok::KwNot;
  if (word == "and") return Tok::KwAnd;
  if (word == "or") return Tok::KwOr;
  return std::nullopt;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      std::size_t n = 0;
      while (i + n < text.size() && text[i + n] != '\n') ++n;
      advance(n);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 1;
      while (i + n < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + n])) || text[i + n] == '_'))
        ++n;
      tok.text = std::string(text.substr(i, n));
      auto kw = keyword(tok.text);
      tok.kind = kw ? *kw : Tok::Ident;
      advance(n);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
      tok.text = std::string(text.substr(i, n));
      if (n > 18) throw ParseError(line, col, "integer literal too large");
      tok.int_value = std::stoll(tok.text);
      tok.kind = Tok::Int;
      advance(n);
    } else {
      auto two = i + 1 < text.size() ? text.substr(i, 2) : std::string_view{};
      if (two == ":=") {
        tok.kind = Tok::Assign;
        advance(2);
      } else if (two == "||") {
        tok.kind = Tok::ParBar;
        advance(2);
      } else if (two == "<=") {
        tok.kind = Tok::Le;
        advance(2);
      } else {
        switch (c) {
          case ';': tok.kind = Tok::Semi; break;
          case ',': tok.kind = Tok::Comma; break;
          case '(': tok.kind = Tok::LParen; break;
          case ')': tok.kind = Tok::RParen; break;
          case '{': tok.kind = Tok::LBrace; break;
          case '}': tok.kind = Tok::RBrace; break;
          case '+': tok.kind = Tok::Plus; break;
          case '-': tok.kind = Tok::Minus; break;
          case '*': tok.kind = Tok::Star; break;
          case '=': tok.kind = Tok::Eq; break;
          case '<': tok.kind = Tok::Lt; break;
          default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        advance(1);
      }
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", 0, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Program parse() {
    SecEnv env;
    while (at(Tok::KwLow) || at(Tok::KwHigh)) parse_decl(env);
    env_ = &env;
    CmdPtr body = parse_cmd();
    expect(Tok::End);
    return Program{std::move(env), std::move(body)};
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  Token take() { return toks_[pos_++]; }

  Token expect(Tok k) {
    if (!at(k))
      throw ParseError(cur().line, cur().col,
                       std::string("expected ") + token_desc(k) + ", found " +
                           token_desc(cur().kind));
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(cur().line, cur().col, msg);
  }

  void parse_decl(SecEnv& env) {
    Level lvl = take().kind == Tok::KwLow ? Level::Lo : Level::Hi;
    for (;;) {
      Token name = expect(Tok::Ident);
      if (env.contains(name.text))
        throw ParseError(name.line, name.col, "duplicate declaration of '" + name.text + "'");
      env.levels.emplace(name.text, lvl);
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::Semi);
  }

  std::string check_declared(const Token& name) {
    if (!env_->contains(name.text))
      throw ParseError(name.line, name.col, "undeclared variable '" + name.text + "'");
    return name.text;
  }

  // cmd ::= par (";" cmd)?     right-associative
  CmdPtr parse_cmd() {
    SourcePos pos{cur().line, cur().col};
    CmdPtr head = parse_par();
    if (at(Tok::Semi)) {
      take();
      return mk_seq(std::move(head), parse_cmd(), pos);
    }
    return head;
  }

  // par ::= unit | "{" cmd "||" cmd "}"
  CmdPtr parse_par() {
    if (at(Tok::LBrace)) {
      SourcePos pos{cur().line, cur().col};
      take();
      CmdPtr left = parse_cmd();
      expect(Tok::ParBar);
      CmdPtr right = parse_cmd();
      expect(Tok::RBrace);
      return mk_par(std::move(left), std::move(right), pos);
    }
    return parse_unit();
  }

  CmdPtr parse_unit() {
    SourcePos pos{cur().line, cur().col};
    if (at(Tok::Ident)) {
      std::string var = check_declared(take());
      expect(Tok::Assign);
      return mk_assign(std::move(var), parse_aexp(), pos);
    }
    if (at(Tok::KwIf)) {
      take();
      BExpPtr guard = parse_bexp();
      expect(Tok::KwThen);
      CmdPtr then_branch = parse_cmd();
      expect(Tok::KwElse);
      CmdPtr else_branch = parse_cmd();
      expect(Tok::KwFi);
      return mk_if(std::move(guard), std::move(then_branch), std::move(else_branch), pos);
    }
    if (at(Tok::KwWhile)) {
      take();
      BExpPtr guard = parse_bexp();
      expect(Tok::KwDo);
      CmdPtr body = parse_cmd();
      expect(Tok::KwOd);
      return mk_while(std::move(guard), std::move(body), pos);
    }
    if (at(Tok::LParen)) {
      take();
      CmdPtr inner = parse_cmd();
      expect(Tok::RParen);
      return inner;
    }
    fail("expected a command");
  }

  AExpPtr parse_aexp() {
    AExpPtr lhs = parse_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      ArithOp op = take().kind == Tok::Plus ? ArithOp::Add : ArithOp::Sub;
      lhs = mk_bin(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  AExpPtr parse_term() {
    AExpPtr lhs = parse_factor();
    while (at(Tok::Star)) {
      take();
      lhs = mk_bin(ArithOp::Mul, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  AExpPtr parse_factor() {
    if (at(Tok::Int)) return mk_int(take().int_value);
    if (at(Tok::Ident)) return mk_var(check_declared(take()));
    if (at(Tok::LParen)) {
      take();
      AExpPtr inner = parse_aexp();
      expect(Tok::RParen);
      return inner;
    }
    fail("expected an arithmetic expression");
  }

  BExpPtr parse_bexp() {
    BExpPtr lhs = parse_bterm();
    while (at(Tok::KwOr)) {
      take();
      lhs = mk_or(std::move(lhs), parse_bterm());
    }
    return lhs;
  }

  BExpPtr parse_bterm() {
    BExpPtr lhs = parse_bfac();
    while (at(Tok::KwAnd)) {
      take();
      lhs = mk_and(std::move(lhs), parse_bfac());
    }
    return lhs;
  }

  // bfac ::= "not" bfac | "true" | "false" | aexp cmp aexp | "(" bexp ")"
  // A leading "(" is ambiguous between a parenthesized aexp and a
  // parenthesized bexp; try the comparison route first and backtrack.
  BExpPtr parse_bfac() {
    if (at(Tok::KwNot)) {
      take();
      return mk_not(parse_bfac());
    }
    if (at(Tok::KwTrue)) {
      take();
      return mk_bool(true);
    }
    if (at(Tok::KwFalse)) {
      take();
      return mk_bool(false);
    }
    if (at(Tok::LParen)) {
      std::size_t save = pos_;
      try {
        return parse_cmp();
      } catch (const ParseError&) {
        pos_ = save;
      }
      take();  // (
      BExpPtr inner = parse_bexp();
      expect(Tok::RParen);
      return inner;
    }
    return parse_cmp();
  }

  BExpPtr parse_cmp() {
    AExpPtr lhs = parse_aexp();
    CmpOp op;
    if (at(Tok::Eq)) {
      op = CmpOp::Eq;
    } else if (at(Tok::Le)) {
      op = CmpOp::Le;
    } else if (at(Tok::Lt)) {
      op = CmpOp::Lt;
    } else {
      fail("expected '=', '<' or '<='");
    }
    take();
    return mk_cmp(op, std::move(lhs), parse_aexp());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const SecEnv* env_ = nullptr;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

}  // namespace nicheck
