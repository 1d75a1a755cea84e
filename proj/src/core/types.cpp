#include "dac/core/types.hpp"

#include "dac/error.hpp"

namespace dac::core {

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::multiplication:
      return "multiplication";
    case TaskKind::hallucination:
      return "hallucination";
    case TaskKind::factcheck:
      return "factcheck";
    case TaskKind::bsi:
      return "bsi";
  }
  return "unknown";
}

TaskKind task_kind_from_string(std::string_view name) {
  for (auto kind : {TaskKind::multiplication, TaskKind::hallucination,
                    TaskKind::factcheck, TaskKind::bsi}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown task '" + std::string(name) +
                    "' (expected multiplication, hallucination, factcheck or bsi)");
}

void TaskInput::validate() const {
  const bool ok = std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MultiplyOperands>) {
          return kind == TaskKind::multiplication && !p.a.empty() && !p.b.empty();
        } else {
          return (kind == TaskKind::hallucination || kind == TaskKind::factcheck) &&
                 !p.document.empty() && !p.candidate.empty();
        }
      },
      payload);
  if (!ok) {
    throw PreconditionViolation("empty payload or payload does not match task kind " +
                                std::string(to_string(kind)));
  }
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::io:
      return "io";
    case Strategy::cot:
      return "cot";
    case Strategy::ltm:
      return "ltm";
    case Strategy::dac_single:
      return "dac-single";
    case Strategy::dac_multi:
      return "dac-multi";
  }
  return "unknown";
}

Strategy strategy_from_string(std::string_view name) {
  std::string normalized(name);
  for (auto& c : normalized) {
    if (c == '_') c = '-';
  }
  for (auto s : {Strategy::io, Strategy::cot, Strategy::ltm, Strategy::dac_single,
                 Strategy::dac_multi}) {
    if (normalized == to_string(s)) return s;
  }
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected io, cot, ltm, dac-single or dac-multi)");
}

void SolverConfig::validate() const {
  if (max_depth < 1) throw ConfigError("max_depth must be at least 1");
  if (parallelism < 1) throw ConfigError("parallelism must be at least 1");
  if (!(temperature >= 0.0)) throw ConfigError("temperature must be non-negative");
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::decompose:
      return "decompose";
    case Stage::tackle:
      return "tackle";
    case Stage::merge:
      return "merge";
    case Stage::direct:
      return "direct";
  }
  return "unknown";
}

}  // namespace dac::core
