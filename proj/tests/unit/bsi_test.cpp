#include "dac/bsi/bsi.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "dac/error.hpp"
#include "support/oracles.hpp"

namespace dac::bsi {
namespace {

// 1(c0) with children 2(c1), 3(c0).
ColoredTree small_base() {
  return ColoredTree({{2, 3, 0}, {0, 0, 1}, {0, 0, 0}}, 1);
}

TEST(ColoredTree, RejectsMalformedEncodings) {
  EXPECT_THROW(ColoredTree({{2, 0, 0}, {1, 0, 0}}, 1), MalformedTree);  // cycle
  EXPECT_THROW(ColoredTree({{3, 0, 0}, {0, 0, 0}}, 1), MalformedTree);  // out of range
  EXPECT_THROW(ColoredTree({{0, 0, 2}}, 1), MalformedTree);             // color
  EXPECT_THROW(ColoredTree({{2, 2, 0}, {0, 0, 0}}, 1), MalformedTree);  // two parents
  EXPECT_THROW(ColoredTree({{0, 0, 0}, {0, 0, 0}}, 1), MalformedTree);  // unreachable
  EXPECT_THROW(ColoredTree({{0, 0, 0}}, 2), MalformedTree);             // root
  EXPECT_THROW(ColoredTree({}, 1), MalformedTree);
  try {
    ColoredTree({{2, 0, 0}, {0, 0, 7}}, 1);
    FAIL();
  } catch (const MalformedTree& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(ColoredTree, JsonRoundTrip) {
  auto tree = random_tree(9, 4);
  EXPECT_EQ(ColoredTree::from_json(tree.to_json()), tree);
  EXPECT_THROW(ColoredTree::from_json(nlohmann::json::parse(R"({"nodes": [[0, 0]], "root": 1})")),
               MalformedTree);
  EXPECT_THROW(ColoredTree::from_json(nlohmann::json::parse(R"({"root": 1})")), MalformedTree);
}

TEST(Decompose, SplitsPatternRoot) {
  ColoredTree pattern({{0, 2, 1}, {0, 0, 0}}, 1);
  auto [l, r] = bsi_decompose({1, 1, 0}, pattern, small_base());
  EXPECT_EQ(l, (RootVector{0, 1, 0}));
  EXPECT_EQ(r, (RootVector{2, 1, 0}));
  EXPECT_THROW(bsi_decompose({0, 1, 0}, pattern, small_base()), NullPattern);
}

TEST(Tackle, NullAndLeafPatterns) {
  ColoredTree leaf1({{0, 0, 1}}, 1);
  EXPECT_EQ(bsi_tackle({0, 1, 0}, leaf1, small_base()), (IndicatorVector{1, 1, 1, 1}));
  EXPECT_EQ(bsi_tackle({1, 1, 0}, leaf1, small_base()), (IndicatorVector{0, 0, 1, 0}));
  ColoredTree leaf0({{0, 0, 0}}, 1);
  EXPECT_EQ(bsi_tackle({1, 1, 0}, leaf0, small_base()), (IndicatorVector{0, 1, 0, 1}));
  EXPECT_THROW(bsi_tackle({1, 1, 0}, small_base(), small_base()), PreconditionViolation);
}

TEST(Merge, StraightOrCrossed) {
  // Pattern 1(c0) with left child 2(c1) only; base matches it crossed too.
  ColoredTree pattern({{2, 0, 0}, {0, 0, 1}}, 1);
  const auto base = small_base();
  const IndicatorVector left = bsi_tackle({2, 1, 0}, pattern, base);
  const IndicatorVector right = bsi_tackle({0, 1, 0}, pattern, base);
  EXPECT_EQ(bsi_merge({1, 1, 0}, pattern, base, left, right), (IndicatorVector{0, 1, 0, 0}));

  ColoredTree crossed({{0, 2, 0}, {0, 0, 1}}, 1);
  EXPECT_EQ(bsi_solve(crossed, base), (IndicatorVector{0, 1, 0, 0}));
  EXPECT_THROW(bsi_merge({1, 1, 0}, pattern, base, {0, 1}, right), LengthMismatch);
  EXPECT_EQ(bsi_merge({0, 1, 0}, pattern, base, left, right), (IndicatorVector{0, 0, 0, 0}));
}

TEST(Solve, SingleNodePatternIsColorMatch) {
  ColoredTree leaf({{0, 0, 0}}, 1);
  EXPECT_EQ(bsi_solve(leaf, small_base()), (IndicatorVector{0, 1, 0, 1}));
}

TEST(Solve, ExhaustiveAgainstSwapVariantOracle) {
  for (std::size_t pn = 1; pn <= 3; ++pn) {
    const auto patterns = testing::all_colored_trees(pn);
    for (std::size_t bn = 1; bn <= 4; ++bn) {
      for (const auto& base : testing::all_colored_trees(bn)) {
        for (const auto& pattern : patterns) {
          const auto expected = testing::swap_variant_embeds(pattern, base);
          ASSERT_EQ(bsi_solve(pattern, base, Exec::serial), expected);
          ASSERT_EQ(brute_force_embeds(pattern, base), expected);
        }
      }
    }
  }
}

TEST(Solve, RandomTreesAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto pattern = random_tree(1 + seed % 6, seed * 2 + 1);
    const auto base = random_tree(1 + seed % 10, seed * 2 + 2);
    EXPECT_EQ(bsi_solve(pattern, base), testing::swap_variant_embeds(pattern, base)) << seed;
  }
}

TEST(Solve, InvariantUnderColorFlipAndChildSwap) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pattern = random_tree(1 + seed % 5, 1000 + seed);
    const auto base = random_tree(2 + seed % 9, 2000 + seed);
    const auto v = bsi_solve(pattern, base);
    EXPECT_EQ(bsi_solve(pattern.recolored(), base.recolored()), v);
    for (std::size_t i = 1; i <= pattern.size(); ++i) {
      EXPECT_EQ(bsi_solve(pattern.with_children_swapped(i), base), v);
    }
    // Swapping below a base node does not change which base nodes match.
    for (std::size_t i = 1; i <= base.size(); ++i) {
      EXPECT_EQ(bsi_solve(pattern, base.with_children_swapped(i)), v);
    }
  }
}

TEST(Solve, SerialEqualsParallelOnLargeBases) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto base = random_tree(20000, 50 + seed);
    const auto pattern = random_tree(4 + seed, 60 + seed);
    const auto serial = bsi_solve(pattern, base, Exec::serial);
    EXPECT_EQ(bsi_solve(pattern, base, Exec::parallel), serial);
    EXPECT_EQ(brute_force_embeds(pattern, base), serial);
  }
}

TEST(Solve, PatternLargerThanBaseNeverMatches) {
  const auto pattern = random_tree(6, 1);
  const auto base = random_tree(3, 2);
  EXPECT_FALSE(any_match(bsi_solve(pattern, base)));
}

TEST(RandomTree, DeterministicAndValid) {
  EXPECT_EQ(random_tree(50, 7), random_tree(50, 7));
  EXPECT_NE(random_tree(50, 7), random_tree(50, 8));
  for (std::size_t n = 1; n < 40; ++n) EXPECT_EQ(random_tree(n, n).size(), n);
  EXPECT_THROW(random_tree(0, 1), PreconditionViolation);
}

// The oracle's shape enumeration itself is checked against Catalan numbers.
TEST(Oracle, ShapeCountsAreCatalan) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(testing::all_shapes(n).size(), catalan[n]);
}

}  // namespace
}  // namespace dac::bsi
