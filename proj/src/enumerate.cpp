// SPDX-License-Identifier: Apache-2.0
#include "nicheck/enumerate.hpp"

#include <string>

namespace nicheck {

std::vector<CmdPtr> enumerate_cmds(int max_nodes, const std::vector<std::string>& vars,
                                   const std::vector<AExpPtr>& expr_pool,
                                   const std::vector<BExpPtr>& test_pool) {
  if (max_nodes < 1) throw Error("enumerate_cmds: max_nodes must be >= 1");
  if (vars.empty() || expr_pool.empty() || test_pool.empty())
    throw Error("enumerate_cmds: pools must be nonempty");

  // by_size[s] holds all commands with exactly s command nodes.
  std::vector<std::vector<CmdPtr>> by_size(static_cast<std::size_t>(max_nodes) + 1);
  for (const auto& var : vars)
    for (const auto& e : expr_pool) by_size[1].push_back(mk_assign(var, e));

  for (int s = 2; s <= max_nodes; ++s) {
    auto& out = by_size[s];
    for (int s1 = 1; s1 <= s - 2; ++s1)
      for (const auto& c1 : by_size[s1])
        for (const auto& c2 : by_size[s - 1 - s1]) out.push_back(mk_seq(c1, c2));
    for (const auto& t : test_pool)
      for (int s1 = 1; s1 <= s - 2; ++s1)
        for (const auto& c1 : by_size[s1])
          for (const auto& c2 : by_size[s - 1 - s1]) out.push_back(mk_if(t, c1, c2));
    for (const auto& t : test_pool)
      for (const auto& body : by_size[s - 1]) out.push_back(mk_while(t, body));
    for (int s1 = 1; s1 <= s - 2; ++s1)
      for (const auto& c1 : by_size[s1])
        for (const auto& c2 : by_size[s - 1 - s1]) out.push_back(mk_par(c1, c2));
  }

  std::vector<CmdPtr> all;
  for (int s = 1; s <= max_nodes; ++s)
    all.insert(all.end(), by_size[s].begin(), by_size[s].end());
  return all;
}

std::uint64_t count_cmds(int max_nodes, std::size_t num_vars, std::size_t num_exprs,
                         std::size_t num_tests) {
  std::vector<std::uint64_t> n(static_cast<std::size_t>(max_nodes) + 1, 0);
  if (max_nodes >= 1) n[1] = static_cast<std::uint64_t>(num_vars) * num_exprs;
  for (int s = 2; s <= max_nodes; ++s) {
    std::uint64_t binary = 0;
    for (int s1 = 1; s1 <= s - 2; ++s1) binary += n[s1] * n[s - 1 - s1];
    n[s] = binary                      // Seq
           + num_tests * binary       // If
           + num_tests * n[s - 1]     // While
           + binary;                  // Par
  }
  std::uint64_t total = 0;
  for (int s = 1; s <= max_nodes; ++s) total += n[s];
  return total;
}

namespace {

std::size_t pick(std::mt19937_64& engine, std::size_t n) {
  return static_cast<std::size_t>(engine() % n);
}

AExpPtr random_aexp(std::mt19937_64& engine, int depth, const std::vector<std::string>& vars) {
  if (depth <= 1 || pick(engine, 3) == 0) {
    if (pick(engine, 2) == 0) return mk_int(static_cast<long long>(pick(engine, 10)));
    return mk_var(vars[pick(engine, vars.size())]);
  }
  auto op = static_cast<ArithOp>(pick(engine, 3));
  return mk_bin(op, random_aexp(engine, depth - 1, vars), random_aexp(engine, depth - 1, vars));
}

BExpPtr random_bexp(std::mt19937_64& engine, int depth, const std::vector<std::string>& vars) {
  std::size_t choice = depth <= 1 ? pick(engine, 2) : pick(engine, 5);
  switch (choice) {
    case 0: return mk_bool(pick(engine, 2) == 0);
    case 1: {
      auto op = static_cast<CmpOp>(pick(engine, 3));
      return mk_cmp(op, random_aexp(engine, 2, vars), random_aexp(engine, 2, vars));
    }
    case 2: return mk_not(random_bexp(engine, depth - 1, vars));
    case 3:
      return mk_and(random_bexp(engine, depth - 1, vars), random_bexp(engine, depth - 1, vars));
    default:
      return mk_or(random_bexp(engine, depth - 1, vars), random_bexp(engine, depth - 1, vars));
  }
}

CmdPtr random_cmd_free(std::mt19937_64& engine, int depth, const std::vector<std::string>& vars) {
  if (depth <= 1 || pick(engine, 4) == 0)
    return mk_assign(vars[pick(engine, vars.size())], random_aexp(engine, 3, vars));
  switch (pick(engine, 4)) {
    case 0:
      return mk_seq(random_cmd_free(engine, depth - 1, vars),
                    random_cmd_free(engine, depth - 1, vars));
    case 1:
      return mk_if(random_bexp(engine, 2, vars), random_cmd_free(engine, depth - 1, vars),
                   random_cmd_free(engine, depth - 1, vars));
    case 2:
      return mk_while(random_bexp(engine, 2, vars), random_cmd_free(engine, depth - 1, vars));
    default:
      return mk_par(random_cmd_free(engine, depth - 1, vars),
                    random_cmd_free(engine, depth - 1, vars));
  }
}

}  // namespace

CmdPtr random_cmd(std::mt19937_64& engine, int max_depth, const std::vector<std::string>& vars,
                  const std::vector<AExpPtr>& expr_pool, const std::vector<BExpPtr>& test_pool) {
  if (max_depth <= 1)
    return mk_assign(vars[pick(engine, vars.size())], expr_pool[pick(engine, expr_pool.size())]);
  switch (pick(engine, 5)) {
    case 0:
      return mk_assign(vars[pick(engine, vars.size())], expr_pool[pick(engine, expr_pool.size())]);
    case 1:
      return mk_seq(random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool),
                    random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool));
    case 2:
      return mk_if(test_pool[pick(engine, test_pool.size())],
                   random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool),
                   random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool));
    case 3:
      return mk_while(test_pool[pick(engine, test_pool.size())],
                      random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool));
    default:
      return mk_par(random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool),
                    random_cmd(engine, max_depth - 1, vars, expr_pool, test_pool));
  }
}

Program random_program(std::mt19937_64& engine) {
  static const std::vector<std::string> names = {"l", "l2", "lx", "h", "h2", "secret", "pub"};
  SecEnv env;
  std::size_t count = 1 + pick(engine, names.size() - 1);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < count; ++i) {
    env.levels.emplace(names[i], pick(engine, 2) == 0 ? Level::Lo : Level::Hi);
    vars.push_back(names[i]);
  }
  CmdPtr body = random_cmd_free(engine, 1 + static_cast<int>(pick(engine, 5)), vars);
  return Program{std::move(env), std::move(body)};
}

}  // namespace nicheck
