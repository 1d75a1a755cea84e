#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dac::core {

enum class TaskKind { multiplication, hallucination, factcheck, bsi };

std::string_view to_string(TaskKind kind);
/// Accepts the names printed by `to_string`; throws ConfigError.
TaskKind task_kind_from_string(std::string_view name);

/// Operand pair of a multiplication (sub-)task, as raw digit strings.
struct MultiplyOperands {
  std::string a;
  std::string b;
  friend bool operator==(const MultiplyOperands&, const MultiplyOperands&) = default;
};

/// Source document plus the text checked against it. For sub-tasks the
/// candidate is a single statement.
struct VerificationPair {
  std::string document;
  std::string candidate;
  friend bool operator==(const VerificationPair&, const VerificationPair&) = default;
};

using Payload = std::variant<MultiplyOperands, VerificationPair>;

struct TaskInput {
  TaskKind kind = TaskKind::multiplication;
  Payload payload;

  /// Throws PreconditionViolation on an empty payload or a payload that
  /// does not belong to `kind`.
  void validate() const;

  friend bool operator==(const TaskInput&, const TaskInput&) = default;
};

enum class Strategy { io, cot, ltm, dac_single, dac_multi };

std::string_view to_string(Strategy strategy);
/// Accepts both "dac_multi" and "dac-multi" spellings; throws ConfigError.
Strategy strategy_from_string(std::string_view name);

struct SolverConfig {
  std::size_t w = 2;
  std::string separator = "[SEP]";
  std::size_t max_depth = 10;
  std::size_t parallelism = 4;
  /// false runs the ablation that forwards whole sub-transcripts to merge.
  bool disentangled = true;
  Strategy strategy = Strategy::dac_multi;
  double temperature = 0.0;

  /// Throws ConfigError.
  void validate() const;
};

struct SubTaskList {
  std::vector<TaskInput> items;
  /// Request key of the decompose call that produced the list.
  std::string provenance;
};

enum class Stage { decompose, tackle, merge, direct };
std::string_view to_string(Stage stage);

struct TraceRecord {
  Stage stage = Stage::direct;
  /// 1 for the top-level call, incremented per recursion level.
  std::size_t depth = 1;
  std::string prompt;
  std::string response;
};

struct Resolution {
  std::string answer;
  std::vector<TraceRecord> trace;
  std::size_t depth_used = 0;
  /// Text forwarded to the top-level merge call (empty for strategies
  /// without a merge stage).
  std::string merged_context;
};

}  // namespace dac::core
