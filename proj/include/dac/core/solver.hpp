#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dac/backends/backend.hpp"
#include "dac/core/adapter.hpp"
#include "dac/core/types.hpp"

namespace dac::core {

/// Joins sub-answers with `separator`, no leading or trailing separator.
/// Throws EmptyInput when `answers` is empty.
std::string assemble_subresults(std::span<const std::string> answers,
                                std::string_view separator);

/// One decompose call, one tackle call per sub-task (concurrent up to
/// config.parallelism, assembled in decomposition order), one merge call.
Resolution solve_single_level(const TaskInput& input, const TaskAdapter& adapter,
                              backends::Backend& backend, const SolverConfig& config);

/// As above, but a sub-task whose problem size exceeds config.w is solved
/// by recursion instead of a tackle call. Throws MaxDepthExceeded when the
/// recursion would go deeper than config.max_depth.
Resolution solve_multi_level(const TaskInput& input, const TaskAdapter& adapter,
                             backends::Backend& backend, const SolverConfig& config);

/// Dispatches to a baseline prompting strategy or to one of the solvers.
Resolution run_strategy(Strategy strategy, const TaskInput& input,
                        const TaskAdapter& adapter, backends::Backend& backend,
                        const SolverConfig& config);

/// Text forwarded to merge for one sub-task in the ablation mode.
std::string format_exchange(std::string_view prompt, std::string_view response);

}  // namespace dac::core
