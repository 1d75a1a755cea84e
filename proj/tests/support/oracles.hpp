#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library code they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dac/bsi/tree.hpp"

namespace dac::testing {

/// Schoolbook multiplication on little-endian digit arrays.
inline std::string schoolbook_multiply(const std::string& a, const std::string& b) {
  std::vector<int> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int da = a[a.size() - 1 - i] - '0';
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += da * (b[b.size() - 1 - j] - '0');
    }
  }
  for (std::size_t k = 0; k + 1 < acc.size(); ++k) {
    acc[k + 1] += acc[k] / 10;
    acc[k] %= 10;
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  std::string out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  return out;
}

/// a·b as b-fold repeated addition of a; only sensible for small b.
inline std::string repeated_addition_multiply(const std::string& a, unsigned b) {
  unsigned long long total = 0;
  const unsigned long long value = std::stoull(a);
  for (unsigned i = 0; i < b; ++i) total += value;
  return std::to_string(total);
}

/// Full (|a|+1)x(|b|+1) edit-distance table.
inline std::size_t levenshtein_reference(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

/// Uncolored binary tree shape as child index pairs; node 1 is the root and
/// nodes are numbered in preorder.
struct Shape {
  std::vector<std::pair<std::size_t, std::size_t>> children;
};

namespace detail {

// Shapes with n nodes whose preorder numbering starts at `first`.
inline std::vector<Shape> shapes_from(std::size_t n, std::size_t first) {
  if (n == 0) return {Shape{}};
  std::vector<Shape> out;
  for (std::size_t left = 0; left < n; ++left) {
    const std::size_t right = n - 1 - left;
    for (const auto& ls : shapes_from(left, first + 1)) {
      for (const auto& rs : shapes_from(right, first + 1 + left)) {
        Shape s;
        s.children.push_back({left ? first + 1 : 0, right ? first + 1 + left : 0});
        s.children.insert(s.children.end(), ls.children.begin(), ls.children.end());
        s.children.insert(s.children.end(), rs.children.begin(), rs.children.end());
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Every ordered binary tree shape with exactly n >= 1 nodes (Catalan(n)).
inline std::vector<Shape> all_shapes(std::size_t n) {
  return detail::shapes_from(n, 1);
}

/// Every 0/1 coloring of every shape with n nodes.
inline std::vector<bsi::ColoredTree> all_colored_trees(std::size_t n) {
  std::vector<bsi::ColoredTree> out;
  for (const auto& shape : all_shapes(n)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bsi::TreeNode> nodes;
      for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back({shape.children[i].first, shape.children[i].second,
                         static_cast<int>((mask >> i) & 1U)});
      }
      out.emplace_back(std::move(nodes), 1);
    }
  }
  return out;
}

namespace detail {

inline bool ordered_contains(std::size_t p, std::size_t b, const bsi::ColoredTree& pattern,
                             const bsi::ColoredTree& base) {
  if (p == 0) return true;
  if (b == 0) return false;
  const auto& pn = pattern.node(p);
  const auto& bn = base.node(b);
  return pn.color == bn.color && ordered_contains(pn.left, bn.left, pattern, base) &&
         ordered_contains(pn.right, bn.right, pattern, base);
}

}  // namespace detail

/// Embedding indicator computed by trying every child-swap variant of the
/// pattern (2^|pattern| of them) against an order-preserving top-down match.
/// Slot 0 follows the same convention as the library: set iff the pattern is
/// empty, which never happens here.
inline std::vector<std::uint8_t> swap_variant_embeds(const bsi::ColoredTree& pattern,
                                                     const bsi::ColoredTree& base) {
  std::vector<std::uint8_t> v(base.size() + 1, 0);
  const std::size_t n = pattern.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bsi::ColoredTree variant = pattern;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) variant = variant.with_children_swapped(i + 1);
    }
    for (std::size_t b = 1; b <= base.size(); ++b) {
      if (detail::ordered_contains(variant.root(), b, variant, base)) v[b] = 1;
    }
  }
  return v;
}

}  // namespace dac::testing
