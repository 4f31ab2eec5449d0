// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nicheck/lang.hpp"

namespace nicheck {

/// Deterministically enumerates every command whose command-constructor count
/// (see count_nodes) is at most max_nodes, with assignments drawn from
/// vars x expr_pool and guards from test_pool. Order: size ascending; within a
/// size Assign, Seq, If, While, Par; components in pool order with splits
/// ascending by the first operand's size. Duplicate-free and stable.
std::vector<CmdPtr> enumerate_cmds(int max_nodes, const std::vector<std::string>& vars,
                                   const std::vector<AExpPtr>& expr_pool,
                                   const std::vector<BExpPtr>& test_pool);

/// Independent count of what enumerate_cmds yields, computed arithmetically
/// from the pool sizes without building any tree.
std::uint64_t count_cmds(int max_nodes, std::size_t num_vars, std::size_t num_exprs,
                         std::size_t num_tests);

/// Uniform random command of recursion depth <= max_depth (depth 1 yields an
/// assignment). Uses only engine() so results are identical across platforms.
CmdPtr random_cmd(std::mt19937_64& engine, int max_depth, const std::vector<std::string>& vars,
                  const std::vector<AExpPtr>& expr_pool, const std::vector<BExpPtr>& test_pool);

/// Random well-formed program over a fresh set of declared variables; used to
/// fuzz the parser/printer pair.
Program random_program(std::mt19937_64& engine);

}  // namespace nicheck
