#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace dac::bsi {

/// One row of the pointer-list encoding. Child indices are 1-based; 0 is
/// the null pointer.
struct TreeNode {
  std::size_t left = 0;
  std::size_t right = 0;
  int color = 0;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Binary tree with 0/1 node colors in pointer-list encoding. Construction
/// validates the encoding: child indices in range, colors binary, every
/// non-root node with exactly one parent, and every node reachable from
/// the root. Violations throw MalformedTree naming the offending node.
class ColoredTree {
 public:
  ColoredTree(std::vector<TreeNode> nodes, std::size_t root);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return root_; }

  /// 1-based access, i in [1, size()].
  const TreeNode& node(std::size_t i) const { return nodes_[i - 1]; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }

  bool has_child(std::size_t i) const {
    return i != 0 && (node(i).left != 0 || node(i).right != 0);
  }

  /// Every color flipped.
  ColoredTree recolored() const;
  /// Children of node i swapped.
  ColoredTree with_children_swapped(std::size_t i) const;

  /// `{"nodes": [[l, r, c], ...], "root": i}`.
  nlohmann::json to_json() const;
  /// Throws MalformedTree on a schema or structural error.
  static ColoredTree from_json(const nlohmann::json& doc);

  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t root_;
};

/// Random binary tree of n nodes: each new node hangs off a uniformly chosen
/// free child slot, colors are fair coins, and node indices are shuffled.
/// Deterministic per seed on every platform.
ColoredTree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace dac::bsi
