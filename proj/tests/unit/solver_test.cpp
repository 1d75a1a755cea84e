#include "dac/core/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dac/backends/mock_backend.hpp"
#include "dac/error.hpp"
#include "dac/tasks/multiplication.hpp"
#include "support/oracles.hpp"
#include "support/spy_backend.hpp"

namespace dac::core {
namespace {

using tasks::MultiplicationAdapter;

std::size_t count_stage(const Resolution& res, Stage stage) {
  return static_cast<std::size_t>(std::count_if(
      res.trace.begin(), res.trace.end(), [&](const TraceRecord& r) { return r.stage == stage; }));
}

Resolution multiply(const std::string& a, const std::string& b, Strategy strategy,
                    SolverConfig config = {}) {
  backends::MockBackend mock;
  MultiplicationAdapter adapter;
  return run_strategy(strategy, MultiplicationAdapter::make_input(a, b), adapter, mock, config);
}

TEST(AssembleSubresults, Examples) {
  std::vector<std::string> three{"408", "12", "7"};
  EXPECT_EQ(assemble_subresults(three, "[SEP]"), "408[SEP]12[SEP]7");
  std::vector<std::string> one{"x"};
  EXPECT_EQ(assemble_subresults(one, "[SEP]"), "x");
  EXPECT_THROW(assemble_subresults({}, "[SEP]"), EmptyInput);
}

TEST(MultiLevel, KnownProducts) {
  EXPECT_EQ(multiply("12", "34", Strategy::dac_multi).answer, "408");
  EXPECT_EQ(multiply("12345", "67890", Strategy::dac_multi).answer, "838102050");
  EXPECT_EQ(multiply("99999999", "99999999", Strategy::dac_multi).answer, "9999999800000001");
}

TEST(MultiLevel, RandomProductsMatchSchoolbook) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::string a(2 + rng() % 10, '0');
    std::string b(2 + rng() % 10, '0');
    for (auto& c : a) c = static_cast<char>('0' + rng() % 10);
    for (auto& c : b) c = static_cast<char>('0' + rng() % 10);
    EXPECT_EQ(multiply(a, b, Strategy::dac_multi).answer, testing::schoolbook_multiply(a, b))
        << a << "*" << b;
  }
}

TEST(SingleLevel, CallAccounting) {
  auto res = multiply("1234", "5678", Strategy::dac_single);
  EXPECT_EQ(res.answer, "7006652");
  EXPECT_EQ(res.trace.size(), 4u + 2u);
  EXPECT_EQ(res.trace.front().stage, Stage::decompose);
  EXPECT_EQ(count_stage(res, Stage::tackle), 4u);
  EXPECT_EQ(res.trace.back().stage, Stage::merge);
  EXPECT_EQ(res.merged_context, "672[SEP]936[SEP]1904[SEP]2652");
  EXPECT_EQ(res.depth_used, 1u);
}

// With every sub-problem already at or below w the multi-level solver
// behaves exactly like the single-level one.
TEST(MultiLevel, CollapsesToSingleLevelAtThreshold) {
  auto multi = multiply("12", "34", Strategy::dac_multi);
  auto single = multiply("12", "34", Strategy::dac_single);
  EXPECT_EQ(multi.trace.size(), 6u);
  EXPECT_EQ(multi.depth_used, 1u);
  ASSERT_EQ(multi.trace.size(), single.trace.size());
  for (std::size_t i = 0; i < multi.trace.size(); ++i) {
    EXPECT_EQ(multi.trace[i].prompt, single.trace[i].prompt);
  }
}

TEST(MultiLevel, RecursesAboveThreshold) {
  auto res = multiply("12345", "67890", Strategy::dac_multi);
  EXPECT_GE(res.depth_used, 2u);
  EXPECT_GE(count_stage(res, Stage::decompose), 2u);
  EXPECT_EQ(count_stage(res, Stage::decompose), count_stage(res, Stage::merge));
  // Each level's merge comes after its own decompose.
  std::vector<std::size_t> open;
  for (const auto& r : res.trace) {
    if (r.stage == Stage::decompose) open.push_back(r.depth);
    if (r.stage == Stage::merge) {
      ASSERT_FALSE(open.empty());
      EXPECT_EQ(open.back(), r.depth);
      open.pop_back();
    }
  }
  EXPECT_TRUE(open.empty());
}

TEST(MultiLevel, TraceIsIndependentOfParallelism) {
  SolverConfig serial;
  serial.parallelism = 1;
  SolverConfig wide;
  wide.parallelism = 8;
  auto a = multiply("31415926", "27182818", Strategy::dac_multi, serial);
  auto b = multiply("31415926", "27182818", Strategy::dac_multi, wide);
  EXPECT_EQ(a.answer, b.answer);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].prompt, b.trace[i].prompt) << i;
    EXPECT_EQ(a.trace[i].response, b.trace[i].response) << i;
  }
}

TEST(MultiLevel, SeparatorIsConfigurable) {
  SolverConfig config;
  config.separator = " | ";
  auto res = multiply("12", "34", Strategy::dac_multi, config);
  EXPECT_EQ(res.merged_context, "3 | 4 | 6 | 8");
  EXPECT_EQ(res.answer, "408");
}

TEST(MultiLevel, DepthGuard) {
  SolverConfig config;
  config.max_depth = 1;
  EXPECT_THROW(multiply("12345", "67890", Strategy::dac_multi, config), MaxDepthExceeded);
  config.max_depth = 2;
  EXPECT_EQ(multiply("12345", "67890", Strategy::dac_multi, config).answer, "838102050");
}

TEST(Baselines, CallCounts) {
  auto io = multiply("12", "34", Strategy::io);
  EXPECT_EQ(io.trace.size(), 1u);
  EXPECT_EQ(io.trace[0].stage, Stage::direct);
  EXPECT_EQ(io.answer, "408");
  auto cot = multiply("12", "34", Strategy::cot);
  EXPECT_EQ(cot.trace.size(), 1u);
  EXPECT_NE(cot.trace[0].prompt.find("step by step"), std::string::npos);
  EXPECT_EQ(cot.answer, "408");
}

TEST(Baselines, LeastToMostSeesEarlierAnswers) {
  auto res = multiply("12", "34", Strategy::ltm);
  EXPECT_EQ(res.answer, "408");
  ASSERT_EQ(res.trace.size(), 1u + 4u + 1u);
  EXPECT_EQ(res.trace[0].stage, Stage::decompose);
  EXPECT_EQ(res.trace[1].prompt.find("Answers to previous"), std::string::npos);
  for (std::size_t i = 2; i < res.trace.size(); ++i) {
    EXPECT_EQ(res.trace[i].stage, Stage::tackle);
    EXPECT_NE(res.trace[i].prompt.find("Answers to previous sub-problems"), std::string::npos);
    for (std::size_t j = 1; j < i; ++j) {
      EXPECT_NE(res.trace[i].prompt.find(std::to_string(j) + ". " + res.trace[j].response),
                std::string::npos);
    }
  }
  EXPECT_EQ(count_stage(res, Stage::merge), 0u);
}

TEST(Solver, RejectsMismatchedOrUnsupportedInputs) {
  backends::MockBackend mock;
  MultiplicationAdapter adapter;
  SolverConfig config;
  TaskInput bsi{TaskKind::bsi, MultiplyOperands{"1", "2"}};
  EXPECT_THROW(run_strategy(Strategy::dac_multi, bsi, adapter, mock, config), UnsupportedStrategy);
  TaskInput ver{TaskKind::hallucination, VerificationPair{"d", "c"}};
  EXPECT_THROW(run_strategy(Strategy::io, ver, adapter, mock, config), PreconditionViolation);
  EXPECT_THROW(solve_multi_level(MultiplicationAdapter::make_input("7", "8"), adapter, mock, config),
               TooShort);
}

TEST(Solver, BackendErrorsPropagate) {
  testing::SpyBackend broken([](const std::string& prompt) -> std::string {
    if (prompt.find("split") != std::string::npos) return "1,2,3,4";
    throw TransportError("down");
  });
  MultiplicationAdapter adapter;
  EXPECT_THROW(solve_single_level(MultiplicationAdapter::make_input("12", "34"), adapter, broken,
                                  SolverConfig{}),
               TransportError);
}

TEST(Solver, UnparseableDecompositionIsReported) {
  testing::SpyBackend chatty([](const std::string&) { return std::string("sure!"); });
  MultiplicationAdapter adapter;
  EXPECT_THROW(solve_single_level(MultiplicationAdapter::make_input("12", "34"), adapter, chatty,
                                  SolverConfig{}),
               DecomposeParseError);
}

TEST(FormatExchange, Shape) {
  EXPECT_EQ(format_exchange("p", "r"), "[prompt]\np\n[response]\nr");
}

}  // namespace
}  // namespace dac::core
