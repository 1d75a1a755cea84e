#include "dac/bsi/bsi.hpp"

#include <algorithm>
#include <cstdint>

#include "dac/error.hpp"

namespace dac::bsi {

namespace {

// Below this many base nodes the merge loop stays serial.
constexpr std::size_t kParallelMergeThreshold = 4096;

void check_root(const RootVector& r, const ColoredTree& pattern, const ColoredTree& base) {
  if (r.p_root > pattern.size()) {
    throw PreconditionViolation("pattern root index " + std::to_string(r.p_root) +
                                " out of range");
  }
  if (r.b_root < 1 || r.b_root > base.size()) {
    throw PreconditionViolation("base root index " + std::to_string(r.b_root) + " out of range");
  }
}

IndicatorVector solve_node(const RootVector& r, const ColoredTree& pattern,
                           const ColoredTree& base, Exec exec) {
  auto [r_left, r_right] = bsi_decompose(r, pattern, base);
  auto branch = [&](const RootVector& child) {
    return pattern.has_child(child.p_root) ? solve_node(child, pattern, base, exec)
                                           : bsi_tackle(child, pattern, base);
  };
  const IndicatorVector v_left = branch(r_left);
  const IndicatorVector v_right = branch(r_right);
  return bsi_merge(r, pattern, base, v_left, v_right, exec);
}

bool embeds(std::size_t p, std::size_t b, const ColoredTree& pattern, const ColoredTree& base) {
  if (p == 0) return true;
  if (b == 0) return false;
  const TreeNode& pn = pattern.node(p);
  const TreeNode& bn = base.node(b);
  if (pn.color != bn.color) return false;
  return (embeds(pn.left, bn.left, pattern, base) && embeds(pn.right, bn.right, pattern, base)) ||
         (embeds(pn.left, bn.right, pattern, base) && embeds(pn.right, bn.left, pattern, base));
}

}  // namespace

std::pair<RootVector, RootVector> bsi_decompose(const RootVector& r, const ColoredTree& pattern,
                                                const ColoredTree& base) {
  check_root(r, pattern, base);
  if (r.p_root == 0) throw NullPattern("cannot decompose a null pattern");
  const TreeNode& root = pattern.node(r.p_root);
  return {RootVector{root.left, r.b_root, r.pad}, RootVector{root.right, r.b_root, r.pad}};
}

IndicatorVector bsi_tackle(const RootVector& r, const ColoredTree& pattern,
                           const ColoredTree& base) {
  check_root(r, pattern, base);
  const std::size_t m = base.size();
  IndicatorVector v(m + 1, 1);
  if (r.p_root == 0) return v;
  if (pattern.has_child(r.p_root)) {
    throw PreconditionViolation("tackle needs a pattern of depth at most one");
  }
  v[0] = 0;
  const int color = pattern.node(r.p_root).color;
  for (std::size_t i = 1; i <= m; ++i) {
    if (base.node(i).color != color) v[i] = 0;
  }
  return v;
}

IndicatorVector bsi_merge(const RootVector& r, const ColoredTree& pattern, const ColoredTree& base,
                          const IndicatorVector& v_left, const IndicatorVector& v_right,
                          Exec exec) {
  check_root(r, pattern, base);
  const std::size_t m = base.size();
  if (v_left.size() != m + 1 || v_right.size() != m + 1) {
    throw LengthMismatch("indicator vectors must have length " + std::to_string(m + 1));
  }
  IndicatorVector v(m + 1, 0);
  if (r.p_root == 0) return v;

  const int color = pattern.node(r.p_root).color;
  const auto* nodes = base.nodes().data();
  const auto* vl = v_left.data();
  const auto* vr = v_right.data();
  auto* out = v.data();
  const auto count = static_cast<std::int64_t>(m);
  const bool parallel = exec == Exec::parallel && m >= kParallelMergeThreshold;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t k = 0; k < count; ++k) {
    const TreeNode& nd = nodes[k];
    if (nd.color != color) continue;
    const bool straight = vl[nd.left] != 0 && vr[nd.right] != 0;
    const bool crossed = vl[nd.right] != 0 && vr[nd.left] != 0;
    out[k + 1] = (straight || crossed) ? 1 : 0;
  }
  return v;
}

IndicatorVector bsi_solve(const RootVector& r, const ColoredTree& pattern, const ColoredTree& base,
                          Exec exec) {
  check_root(r, pattern, base);
  if (r.p_root == 0) return bsi_tackle(r, pattern, base);
  return solve_node(r, pattern, base, exec);
}

IndicatorVector bsi_solve(const ColoredTree& pattern, const ColoredTree& base, Exec exec) {
  return bsi_solve(RootVector{pattern.root(), base.root(), 0}, pattern, base, exec);
}

IndicatorVector brute_force_embeds(std::size_t p_root, const ColoredTree& pattern,
                                   const ColoredTree& base) {
  const std::size_t m = base.size();
  IndicatorVector v(m + 1, 0);
  v[0] = p_root == 0 ? 1 : 0;
  for (std::size_t i = 1; i <= m; ++i) v[i] = embeds(p_root, i, pattern, base) ? 1 : 0;
  return v;
}

IndicatorVector brute_force_embeds(const ColoredTree& pattern, const ColoredTree& base) {
  return brute_force_embeds(pattern.root(), pattern, base);
}

bool any_match(const IndicatorVector& v) {
  return std::any_of(v.begin() + (v.empty() ? 0 : 1), v.end(), [](auto x) { return x != 0; });
}

}  // namespace dac::bsi
