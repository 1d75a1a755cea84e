#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "dac/core/prompt.hpp"
#include "dac/core/types.hpp"

namespace dac::core {

/// Everything task-specific the solvers need: prompt rendering for each
/// stage, parsing of backend output, and the problem-size metric.
///
/// Parsing lives here rather than in the solver because every task's
/// decomposition and answer formats differ.
class TaskAdapter {
 public:
  virtual ~TaskAdapter() = default;

  virtual TaskKind kind() const = 0;
  virtual const PromptTriple& prompts() const = 0;

  /// Problem-size metric compared against SolverConfig::w.
  virtual std::size_t problem_size(const TaskInput& input) const = 0;

  virtual std::string decompose_prompt(const TaskInput& input) const = 0;
  /// Parses the decompose response; throws DecomposeParseError if it does
  /// not yield at least one sub-task.
  virtual SubTaskList parse_decomposition(const TaskInput& input,
                                          std::string_view response) const = 0;

  virtual std::string tackle_prompt(const TaskInput& input) const = 0;
  /// Final answer carried out of a tackle response; throws AnswerParseError
  /// or VerdictParseError.
  virtual std::string parse_tackle(const TaskInput& input,
                                   std::string_view response) const = 0;

  /// `merged_context` is what the solver assembled with the separator;
  /// `answers` are the parsed sub-answers in decomposition order.
  virtual std::string merge_prompt(const TaskInput& parent, const SubTaskList& subtasks,
                                   std::span<const std::string> answers,
                                   std::string_view merged_context) const = 0;
  virtual std::string parse_merge(const TaskInput& parent,
                                  std::span<const std::string> answers,
                                  std::string_view response) const = 0;

  // Baseline templates.
  virtual std::string io_prompt(const TaskInput& input) const = 0;
  virtual std::string cot_prompt(const TaskInput& input) const = 0;
  /// Parses the answer of an io/cot call or the last least-to-most call.
  virtual std::string parse_final(const TaskInput& input, std::string_view response) const = 0;
  /// Last least-to-most question, asked after every sub-task is solved.
  virtual std::string ltm_final_prompt(const TaskInput& input) const = 0;
};

}  // namespace dac::core
