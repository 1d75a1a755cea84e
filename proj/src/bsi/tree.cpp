#include "dac/bsi/tree.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <utility>

#include "dac/error.hpp"

namespace dac::bsi {

namespace {

[[noreturn]] void malformed(std::size_t node, const std::string& why) {
  throw MalformedTree("node " + std::to_string(node) + ": " + why);
}

}  // namespace

ColoredTree::ColoredTree(std::vector<TreeNode> nodes, std::size_t root)
    : nodes_(std::move(nodes)), root_(root) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw MalformedTree("tree has no nodes");
  if (root_ < 1 || root_ > n) malformed(root_, "root index out of range [1, " + std::to_string(n) + "]");

  std::vector<std::size_t> parent(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const TreeNode& nd = node(i);
    if (nd.color != 0 && nd.color != 1) malformed(i, "color must be 0 or 1");
    for (std::size_t child : {nd.left, nd.right}) {
      if (child == 0) continue;
      if (child > n) malformed(i, "child index " + std::to_string(child) + " out of range");
      if (parent[child] != 0) malformed(child, "has more than one parent");
      parent[child] = i;
    }
    if (nd.left != 0 && nd.left == nd.right) malformed(i, "both children point to the same node");
  }
  if (parent[root_] != 0) malformed(root_, "root has a parent");

  // n-1 parent links plus full reachability rules out cycles.
  std::vector<std::size_t> stack{root_};
  std::vector<bool> seen(n + 1, false);
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (seen[i]) malformed(i, "cycle detected");
    seen[i] = true;
    ++reached;
    for (std::size_t child : {node(i).left, node(i).right}) {
      if (child != 0) stack.push_back(child);
    }
  }
  if (reached != n) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (!seen[i]) malformed(i, "not reachable from the root");
    }
  }
}

ColoredTree ColoredTree::recolored() const {
  auto nodes = nodes_;
  for (auto& nd : nodes) nd.color = 1 - nd.color;
  return ColoredTree(std::move(nodes), root_);
}

ColoredTree ColoredTree::with_children_swapped(std::size_t i) const {
  auto nodes = nodes_;
  std::swap(nodes.at(i - 1).left, nodes.at(i - 1).right);
  return ColoredTree(std::move(nodes), root_);
}

nlohmann::json ColoredTree::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& nd : nodes_) rows.push_back({nd.left, nd.right, nd.color});
  return {{"nodes", std::move(rows)}, {"root", root_}};
}

ColoredTree ColoredTree::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array() ||
      !doc.contains("root") || !doc["root"].is_number_unsigned()) {
    throw MalformedTree("tree JSON needs {\"nodes\": [[l, r, c], ...], \"root\": i}");
  }
  std::vector<TreeNode> nodes;
  std::size_t index = 0;
  for (const auto& row : doc["nodes"]) {
    ++index;
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() ||
        !row[1].is_number_unsigned() || !row[2].is_number_integer()) {
      malformed(index, "row must be [left, right, color] with non-negative integers");
    }
    nodes.push_back({row[0].get<std::size_t>(), row[1].get<std::size_t>(), row[2].get<int>()});
  }
  return ColoredTree(std::move(nodes), doc["root"].get<std::size_t>());
}

ColoredTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw PreconditionViolation("random_tree needs n >= 1");
  std::mt19937_64 rng(seed);

  // Build in creation order, then relabel with a random permutation.
  std::vector<TreeNode> built(n);
  std::vector<std::pair<std::size_t, bool>> free_slots{{0, false}, {0, true}};
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t pick = rng() % free_slots.size();
    auto [parent, right] = free_slots[pick];
    free_slots[pick] = free_slots.back();
    free_slots.pop_back();
    (right ? built[parent].right : built[parent].left) = i + 1;
    free_slots.push_back({i, false});
    free_slots.push_back({i, true});
  }
  for (auto& nd : built) nd.color = static_cast<int>(rng() & 1U);

  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{1});
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng() % i]);

  std::vector<TreeNode> nodes(n);
  auto relabel = [&](std::size_t old) { return old == 0 ? 0 : label[old - 1]; };
  for (std::size_t i = 0; i < n; ++i) {
    nodes[label[i] - 1] = {relabel(built[i].left), relabel(built[i].right), built[i].color};
  }
  return ColoredTree(std::move(nodes), label[0]);
}

}  // namespace dac::bsi
