#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dac/bsi/tree.hpp"

namespace dac::bsi {

/// Pointer pair into the pattern and base trees plus a zero pad.
struct RootVector {
  std::size_t p_root = 0;  // 0 = null pattern
  std::size_t b_root = 1;
  int pad = 0;

  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Length n'+1 over the base tree. Slot 0 is the null child: it is 1 iff
/// the pattern (sub)tree is null. Slot i >= 1 is 1 iff the pattern embeds
/// at base node i.
using IndicatorVector = std::vector<std::uint8_t>;

enum class Exec { serial, parallel };

/// Left and right child pointers of the pattern root; the base pointer and
/// pad are carried unchanged. Throws NullPattern.
std::pair<RootVector, RootVector> bsi_decompose(const RootVector& r, const ColoredTree& pattern,
                                                const ColoredTree& base);

/// Base case for a pattern of depth at most one. A null pattern embeds
/// everywhere (all ones, null slot included); a leaf matches the base nodes
/// of its color. Throws PreconditionViolation if the pattern root has a child.
IndicatorVector bsi_tackle(const RootVector& r, const ColoredTree& pattern,
                           const ColoredTree& base);

/// v[i] = 1 iff base node i has the pattern root's color and its children
/// match the pattern children straight or crossed. Throws LengthMismatch.
IndicatorVector bsi_merge(const RootVector& r, const ColoredTree& pattern, const ColoredTree& base,
                          const IndicatorVector& v_left, const IndicatorVector& v_right,
                          Exec exec = Exec::parallel);

/// Divide-and-conquer recursion with threshold w = 1: a pattern subtree is
/// split further while its root has a child, otherwise tackled directly.
IndicatorVector bsi_solve(const RootVector& r, const ColoredTree& pattern, const ColoredTree& base,
                          Exec exec = Exec::parallel);

/// bsi_solve from the two trees' own roots.
IndicatorVector bsi_solve(const ColoredTree& pattern, const ColoredTree& base,
                          Exec exec = Exec::parallel);

/// Independent oracle: direct recursive definition of unordered embedding
/// evaluated at every base node.
IndicatorVector brute_force_embeds(const ColoredTree& pattern, const ColoredTree& base);
IndicatorVector brute_force_embeds(std::size_t p_root, const ColoredTree& pattern,
                                   const ColoredTree& base);

/// True iff some base node (slot >= 1) is marked.
bool any_match(const IndicatorVector& v);

}  // namespace dac::bsi
