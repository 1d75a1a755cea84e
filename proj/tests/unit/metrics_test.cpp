#include "dac/eval/metrics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dac/error.hpp"
#include "support/oracles.hpp"

namespace dac::eval {
namespace {

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("1000", "1001"), 1u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("", ""), 0u);
  EXPECT_EQ(testing::levenshtein_reference("838102050", "838102500"), 2u);
  EXPECT_EQ(levenshtein("838102050", "838102500"), 2u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
}

TEST(Levenshtein, MatchesReferenceAndMetricAxioms) {
  std::mt19937_64 rng(23);
  auto draw = [&] {
    std::string s(rng() % 21, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % 4);
    return s;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    const auto ab = levenshtein(a, b);
    ASSERT_EQ(ab, testing::levenshtein_reference(a, b)) << a << " / " << b;
    ASSERT_EQ(ab, levenshtein(b, a));
    ASSERT_LE(levenshtein(a, c), ab + levenshtein(b, c));
    ASSERT_EQ(levenshtein(a, a), 0u);
  }
}

TEST(ExactMatch, Examples) {
  std::vector<std::string> p{"408"}, t{"408"}, wrong{"409"}, padded{"0408"};
  EXPECT_DOUBLE_EQ(exact_match_accuracy(p, t), 1.0);
  EXPECT_DOUBLE_EQ(exact_match_accuracy(wrong, t), 0.0);
  EXPECT_DOUBLE_EQ(exact_match_accuracy(padded, t), 1.0);
  std::vector<std::string> two{"1", "2"};
  EXPECT_THROW(exact_match_accuracy(two, t), LengthMismatch);
  EXPECT_THROW(exact_match_accuracy({}, {}), EmptyInput);
}

TEST(Classification, DirectFormula) {
  const auto m = classification_report({3, 1, 2, 4});
  EXPECT_DOUBLE_EQ(m.precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 0.6);
  EXPECT_NEAR(m.f1, 0.6667, 1e-4);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.7);
  EXPECT_NEAR(m.g_mean, 0.6708, 1e-4);
  EXPECT_FALSE(m.degenerate);
}

TEST(Classification, PerfectAndDegenerate) {
  const auto perfect = classification_report({5, 0, 0, 7});
  EXPECT_DOUBLE_EQ(perfect.f1, 1.0);
  EXPECT_DOUBLE_EQ(perfect.g_mean, 1.0);
  EXPECT_DOUBLE_EQ(perfect.accuracy, 1.0);
  const auto none = classification_report({0, 0, 3, 2});
  EXPECT_TRUE(none.degenerate);
  EXPECT_DOUBLE_EQ(none.precision, 0.0);
  EXPECT_DOUBLE_EQ(none.f1, 0.0);
  EXPECT_DOUBLE_EQ(none.accuracy, 0.4);
}

TEST(Classification, ReproducesPublishedRows) {
  EXPECT_NEAR(f1_score(0.8322, 0.6364), 0.7212, 1e-4);
  EXPECT_NEAR(g_mean(0.8322, 0.6364), 0.7277, 1e-4);
  EXPECT_NEAR(f1_score(0.6211, 0.6128), 0.6169, 1e-4);
  EXPECT_DOUBLE_EQ(f1_score(0.0, 0.0), 0.0);
}

}  // namespace
}  // namespace dac::eval
