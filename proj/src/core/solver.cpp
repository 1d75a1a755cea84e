#include "dac/core/solver.hpp"

#include <algorithm>
#include <exception>
#include <vector>

#include "dac/error.hpp"

namespace dac::core {

std::string assemble_subresults(std::span<const std::string> answers,
                                std::string_view separator) {
  if (answers.empty()) throw EmptyInput("no sub-answers to assemble");
  std::string out = answers.front();
  for (std::size_t i = 1; i < answers.size(); ++i) {
    out += separator;
    out += answers[i];
  }
  return out;
}

std::string format_exchange(std::string_view prompt, std::string_view response) {
  std::string out = "[prompt]\n";
  out += prompt;
  out += "\n[response]\n";
  out += response;
  return out;
}

namespace {

// Result of solving one node of the decomposition tree.
struct Outcome {
  std::string answer;
  // Final exchange of this node, forwarded instead of `answer` when the
  // disentangled flag is off.
  std::string exchange;
  std::vector<TraceRecord> trace;
  std::size_t depth_used = 0;
  std::string merged_context;
};

class Engine {
 public:
  Engine(const TaskAdapter& adapter, backends::Backend& backend, const SolverConfig& config)
      : adapter_(adapter), backend_(backend), config_(config) {}

  std::string call(const std::string& prompt) {
    auto request = backends::BackendRequest::user(prompt, backend_.model_id(),
                                                  config_.temperature);
    return backend_.complete(request).text;
  }

  std::string request_key(const std::string& prompt) const {
    return backends::BackendRequest::user(prompt, backend_.model_id(), config_.temperature)
        .key();
  }

  Outcome tackle(const TaskInput& input, std::size_t depth) {
    Outcome out;
    const std::string prompt = adapter_.tackle_prompt(input);
    const std::string response = call(prompt);
    out.answer = adapter_.parse_tackle(input, response);
    out.exchange = format_exchange(prompt, response);
    out.trace.push_back({Stage::tackle, depth, prompt, response});
    out.depth_used = depth;
    return out;
  }

  Outcome solve(const TaskInput& input, std::size_t depth, bool recurse) {
    Outcome out;
    const std::string d_prompt = adapter_.decompose_prompt(input);
    const std::string d_response = call(d_prompt);
    SubTaskList subtasks = adapter_.parse_decomposition(input, d_response);
    if (subtasks.items.empty()) {
      throw DecomposeParseError("decomposition produced no sub-tasks");
    }
    subtasks.provenance = request_key(d_prompt);
    out.trace.push_back({Stage::decompose, depth, d_prompt, d_response});

    const std::size_t k = subtasks.items.size();
    std::vector<Outcome> children(k);
    std::vector<std::exception_ptr> errors(k);
    const int threads = static_cast<int>(std::min(config_.parallelism, k));

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1)
    for (std::size_t i = 0; i < k; ++i) {
      try {
        const TaskInput& item = subtasks.items[i];
        if (recurse && adapter_.problem_size(item) > config_.w) {
          if (depth + 1 > config_.max_depth) {
            throw MaxDepthExceeded("problem size still above w=" + std::to_string(config_.w) +
                                   " at max_depth=" + std::to_string(config_.max_depth));
          }
          children[i] = solve(item, depth + 1, true);
        } else {
          children[i] = tackle(item, depth);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }

    std::vector<std::string> answers;
    std::vector<std::string> forwarded;
    answers.reserve(k);
    forwarded.reserve(k);
    out.depth_used = depth;
    for (auto& child : children) {
      answers.push_back(child.answer);
      forwarded.push_back(config_.disentangled ? child.answer : child.exchange);
      out.depth_used = std::max(out.depth_used, child.depth_used);
      std::move(child.trace.begin(), child.trace.end(), std::back_inserter(out.trace));
    }

    out.merged_context = assemble_subresults(forwarded, config_.separator);
    const std::string m_prompt =
        adapter_.merge_prompt(input, subtasks, answers, out.merged_context);
    const std::string m_response = call(m_prompt);
    out.trace.push_back({Stage::merge, depth, m_prompt, m_response});
    out.answer = adapter_.parse_merge(input, answers, m_response);
    out.exchange = format_exchange(m_prompt, m_response);
    return out;
  }

 private:
  const TaskAdapter& adapter_;
  backends::Backend& backend_;
  const SolverConfig& config_;
};

void check_inputs(const TaskInput& input, const TaskAdapter& adapter,
                  const SolverConfig& config) {
  config.validate();
  if (input.kind == TaskKind::bsi) {
    throw UnsupportedStrategy("no prompt templates exist for task kind bsi");
  }
  if (adapter.kind() != input.kind) {
    throw PreconditionViolation("adapter for " + std::string(to_string(adapter.kind())) +
                                " cannot consume a " + std::string(to_string(input.kind)) +
                                " input");
  }
  input.validate();
}

Resolution to_resolution(Outcome&& outcome) {
  return {std::move(outcome.answer), std::move(outcome.trace), outcome.depth_used,
          std::move(outcome.merged_context)};
}

std::string prior_answers_context(const std::vector<std::string>& answers) {
  if (answers.empty()) return {};
  std::string out = "Answers to previous sub-problems:\n";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    out += std::to_string(i + 1) + ". " + answers[i] + "\n";
  }
  out += "\n";
  return out;
}

Resolution single_call(const std::string& prompt, const TaskInput& input,
                       const TaskAdapter& adapter, Engine& engine) {
  Resolution res;
  const std::string response = engine.call(prompt);
  res.trace.push_back({Stage::direct, 1, prompt, response});
  res.answer = adapter.parse_final(input, response);
  res.depth_used = 1;
  return res;
}

// Decompose once, then solve sub-tasks one after another, each seeing the
// answers of all earlier ones; the original question is asked last.
Resolution least_to_most(const TaskInput& input, const TaskAdapter& adapter,
                         Engine& engine) {
  Resolution res;
  res.depth_used = 1;
  const std::string d_prompt = adapter.decompose_prompt(input);
  const std::string d_response = engine.call(d_prompt);
  res.trace.push_back({Stage::decompose, 1, d_prompt, d_response});
  SubTaskList subtasks = adapter.parse_decomposition(input, d_response);
  if (subtasks.items.empty()) {
    throw DecomposeParseError("decomposition produced no sub-tasks");
  }

  std::vector<std::string> answers;
  for (const auto& item : subtasks.items) {
    const std::string prompt = prior_answers_context(answers) + adapter.tackle_prompt(item);
    const std::string response = engine.call(prompt);
    res.trace.push_back({Stage::tackle, 1, prompt, response});
    answers.push_back(adapter.parse_tackle(item, response));
  }
  const std::string prompt = prior_answers_context(answers) + adapter.ltm_final_prompt(input);
  const std::string response = engine.call(prompt);
  res.trace.push_back({Stage::tackle, 1, prompt, response});
  res.answer = adapter.parse_final(input, response);
  return res;
}

}  // namespace

Resolution solve_single_level(const TaskInput& input, const TaskAdapter& adapter,
                              backends::Backend& backend, const SolverConfig& config) {
  check_inputs(input, adapter, config);
  Engine engine(adapter, backend, config);
  return to_resolution(engine.solve(input, 1, false));
}

Resolution solve_multi_level(const TaskInput& input, const TaskAdapter& adapter,
                             backends::Backend& backend, const SolverConfig& config) {
  check_inputs(input, adapter, config);
  Engine engine(adapter, backend, config);
  return to_resolution(engine.solve(input, 1, true));
}

Resolution run_strategy(Strategy strategy, const TaskInput& input,
                        const TaskAdapter& adapter, backends::Backend& backend,
                        const SolverConfig& config) {
  check_inputs(input, adapter, config);
  Engine engine(adapter, backend, config);
  switch (strategy) {
    case Strategy::io:
      return single_call(adapter.io_prompt(input), input, adapter, engine);
    case Strategy::cot:
      return single_call(adapter.cot_prompt(input), input, adapter, engine);
    case Strategy::ltm:
      return least_to_most(input, adapter, engine);
    case Strategy::dac_single:
      return to_resolution(engine.solve(input, 1, false));
    case Strategy::dac_multi:
      return to_resolution(engine.solve(input, 1, true));
  }
  throw UnsupportedStrategy("unknown strategy");
}

}  // namespace dac::core
