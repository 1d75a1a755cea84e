#include "dac/tasks/multiplication.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dac/error.hpp"
#include "support/oracles.hpp"

namespace dac::tasks {
namespace {

DigitString D(const char* s) {
  return DigitString(s);
}

TEST(DigitString, RejectsNonDigits) {
  EXPECT_THROW(DigitString("12a"), NonDigitInput);
  EXPECT_THROW(DigitString(""), NonDigitInput);
  EXPECT_EQ(D("000").canonical().str(), "0");
  EXPECT_EQ(D("0408").canonical().str(), "408");
}

TEST(SplitInteger, Examples) {
  auto even = split_integer(D("1234"));
  EXPECT_EQ(even.high.str(), "12");
  EXPECT_EQ(even.low.str(), "34");
  auto odd = split_integer(D("12345"));
  EXPECT_EQ(odd.high.str(), "123");
  EXPECT_EQ(odd.low.str(), "45");
  EXPECT_EQ(odd.low_len(), 2u);
  auto two = split_integer(D("99"));
  EXPECT_EQ(two.high.str(), "9");
  EXPECT_EQ(two.low.str(), "9");
  EXPECT_THROW(split_integer(D("7")), TooShort);
}

TEST(SplitInteger, ConservesDigits) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s(2 + rng() % 30, '0');
    for (auto& c : s) c = static_cast<char>('0' + rng() % 10);
    auto split = split_integer(DigitString(s));
    EXPECT_EQ(split.high.str() + split.low.str(), s);
    const auto diff = split.high.size() - split.low.size();
    EXPECT_TRUE(diff == 0 || diff == 1) << s;
  }
}

TEST(BuildSubtasks, PairOrderAndShifts) {
  auto small = build_subtasks(D("12"), D("34"));
  ASSERT_EQ(small.size(), 4u);
  EXPECT_EQ(small[0].left.str() + "*" + small[0].right.str(), "1*3");
  EXPECT_EQ(small[1].left.str() + "*" + small[1].right.str(), "1*4");
  EXPECT_EQ(small[2].left.str() + "*" + small[2].right.str(), "2*3");
  EXPECT_EQ(small[3].left.str() + "*" + small[3].right.str(), "2*4");
  EXPECT_EQ(small[0].shift, 2u);
  EXPECT_EQ(small[3].shift, 0u);

  auto four = build_subtasks(D("1234"), D("5678"));
  EXPECT_EQ(four[0].left.str() + "*" + four[0].right.str(), "12*56");
  EXPECT_EQ(four[1].left.str() + "*" + four[1].right.str(), "12*78");
  EXPECT_EQ(four[2].left.str() + "*" + four[2].right.str(), "34*56");
  EXPECT_EQ(four[3].left.str() + "*" + four[3].right.str(), "34*78");

  EXPECT_THROW(build_subtasks(D("1"), D("34")), TooShort);
}

TEST(MergeProducts, Examples) {
  EXPECT_EQ(merge_products(D("3"), D("4"), D("6"), D("8"), 1, 1).str(), "408");
  EXPECT_EQ(merge_products(D("81"), D("81"), D("81"), D("81"), 1, 1).str(), "9801");
  // 12345 x 67890 = (123*10^2 + 45)(678*10^2 + 90)
  EXPECT_EQ(merge_products(D("83394"), D("11070"), D("30510"), D("4050"), 2, 2).str(),
            "838102050");
}

TEST(MergeProducts, UnevenSplitsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto make = [&] {
      std::string s(2 + rng() % 9, '0');
      for (auto& c : s) c = static_cast<char>('0' + rng() % 10);
      return s;
    };
    const std::string a = make();
    const std::string b = make();
    const auto parts = build_subtasks(DigitString(a), DigitString(b));
    std::vector<DigitString> products;
    for (const auto& p : parts) {
      products.emplace_back(testing::schoolbook_multiply(p.left.str(), p.right.str()));
    }
    const auto merged = merge_products(products[0], products[1], products[2], products[3],
                                       parts[2].left.size(), parts[1].right.size());
    EXPECT_EQ(merged.str(), testing::schoolbook_multiply(a, b)) << a << " * " << b;
  }
}

TEST(ProblemSize, MinLength) {
  EXPECT_EQ(problem_size(D("12345"), D("99")), 2u);
  EXPECT_EQ(problem_size(D("7"), D("7")), 1u);
  EXPECT_EQ(problem_size(D("12345"), D("67890")), 5u);
}

TEST(ExactMultiply, Examples) {
  EXPECT_EQ(exact_multiply(D("0"), D("12345")).str(), "0");
  EXPECT_EQ(exact_multiply(D("1"), D("987654321987654321")).str(), "987654321987654321");
  EXPECT_EQ(exact_multiply(D("12345"), D("67890")).str(), "838102050");
  EXPECT_EQ(exact_multiply(D("99999999"), D("99999999")).str(), "9999999800000001");
  EXPECT_EQ(exact_multiply(D("007"), D("06")).str(), "42");
}

// The schoolbook oracle itself is pinned to repeated addition first.
TEST(ExactMultiply, OracleAgreesWithRepeatedAddition) {
  for (unsigned a = 0; a < 1000; a += 37) {
    for (unsigned b = 0; b < 1000; b += 41) {
      const std::string sa = std::to_string(a);
      ASSERT_EQ(testing::schoolbook_multiply(sa, std::to_string(b)),
                testing::repeated_addition_multiply(sa, b));
      EXPECT_EQ(exact_multiply(DigitString(sa), DigitString(std::to_string(b))).str(),
                testing::repeated_addition_multiply(sa, b));
    }
  }
}

TEST(ExactMultiply, CommutativeWithIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string a(1 + rng() % 40, '0');
    std::string b(1 + rng() % 40, '0');
    for (auto& c : a) c = static_cast<char>('0' + rng() % 10);
    for (auto& c : b) c = static_cast<char>('0' + rng() % 10);
    EXPECT_EQ(exact_multiply(DigitString(a), DigitString(b)),
              exact_multiply(DigitString(b), DigitString(a)));
    EXPECT_EQ(exact_multiply(DigitString(a), D("1")).str(), canonical_digits(a));
    EXPECT_EQ(exact_multiply(DigitString(a), DigitString(b)).str(),
              testing::schoolbook_multiply(a, b));
  }
}

TEST(GenInstances, ShapeAndDeterminism) {
  auto batch = gen_instances(200, 5, 42);
  ASSERT_EQ(batch.size(), 200u);
  for (const auto& inst : batch) {
    EXPECT_EQ(inst.a.size(), 5u);
    EXPECT_EQ(inst.b.size(), 5u);
    EXPECT_NE(inst.a.str()[0], '0');
    EXPECT_EQ(inst.ground_truth.str(), testing::schoolbook_multiply(inst.a.str(), inst.b.str()));
  }
  auto again = gen_instances(200, 5, 42);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    EXPECT_EQ(batch[i].a, again[i].a);
    EXPECT_EQ(batch[i].b, again[i].b);
  }
  auto single = gen_instances(1, 1, 5);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].a.size(), 1u);
  EXPECT_THROW(gen_instances(1, 0, 5), PreconditionViolation);
}

TEST(ExtractFinalNumber, TakesLastDigitRun) {
  EXPECT_EQ(extract_final_number("408"), "408");
  EXPECT_EQ(extract_final_number("12*34 = 0408."), "408");
  EXPECT_EQ(extract_final_number("x = 340, y = 68, so x+y = 408"), "408");
  EXPECT_THROW(extract_final_number("no idea"), AnswerParseError);
}

TEST(MultiplicationAdapter, ParsesDecomposition) {
  MultiplicationAdapter adapter;
  auto input = MultiplicationAdapter::make_input("12345", "67890");
  auto list = adapter.parse_decomposition(input, "123, 45, 678, 90");
  ASSERT_EQ(list.items.size(), 4u);
  EXPECT_EQ(std::get<core::MultiplyOperands>(list.items[1].payload),
            (core::MultiplyOperands{"123", "90"}));
  EXPECT_THROW(adapter.parse_decomposition(input, "123,45"), DecomposeParseError);
  EXPECT_THROW(adapter.parse_decomposition(input, "12,346,678,90"), DecomposeParseError);
  EXPECT_NO_THROW(adapter.parse_decomposition(input, "12,345,678,90"));
}

TEST(MultiplicationAdapter, MergePromptCarriesShifts) {
  MultiplicationAdapter adapter;
  auto input = MultiplicationAdapter::make_input("12", "34");
  auto list = adapter.parse_decomposition(input, "1,2,3,4");
  std::vector<std::string> answers{"3", "4", "6", "8"};
  const auto prompt = adapter.merge_prompt(input, list, answers, "3[SEP]4[SEP]6[SEP]8");
  EXPECT_NE(prompt.find("compute x=3*10^2+4*10^1 and y=6*10^1+8."), std::string::npos) << prompt;
  EXPECT_NE(prompt.find("3[SEP]4[SEP]6[SEP]8"), std::string::npos);
}

}  // namespace
}  // namespace dac::tasks
