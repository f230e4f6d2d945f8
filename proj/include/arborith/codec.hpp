#ifndef ARBORITH_CODEC_HPP
#define ARBORITH_CODEC_HPP

#include <cstdint>
#include <vector>

#include "arborith/core.hpp"

namespace arborith {

/// Binary tree in which every node has zero or exactly two children. Stored
/// as a pre-order array: node i's left child is i+1, its right child is
/// right_child(i). Structural equality is plain equality of the arrays.
/// Immutable in practice; all traversals here are iterative, so arbitrarily
/// deep spines (from parsed input) are fine.
class FullBinaryTree {
 public:
  FullBinaryTree() : right_{0} {}  // single leaf

  static FullBinaryTree leaf() { return FullBinaryTree(); }
  static FullBinaryTree node(const FullBinaryTree& left, const FullBinaryTree& right);

  uint32_t node_count() const noexcept { return static_cast<uint32_t>(right_.size()); }
  bool is_leaf(uint32_t i) const { return right_[i] == 0; }
  uint32_t left_child(uint32_t i) const { return i + 1; }
  uint32_t right_child(uint32_t i) const { return right_[i]; }

  friend bool operator==(const FullBinaryTree&, const FullBinaryTree&) = default;

  /// Builder used by parsers and encode; appends nodes in pre-order.
  /// take() validates the two-children-or-none shape.
  class Builder {
   public:
    uint32_t add_leaf();
    uint32_t add_internal();                      // right child patched later
    void set_right(uint32_t node, uint32_t child);
    uint32_t size() const noexcept { return static_cast<uint32_t>(right_.size()); }
    FullBinaryTree take();

   private:
    std::vector<uint32_t> right_;
  };

 private:
  explicit FullBinaryTree(std::vector<uint32_t> right) : right_(std::move(right)) {}

  std::vector<uint32_t> right_;
};

struct TreeStats {
  uint64_t leaves = 0;
  uint64_t internal = 0;
  uint64_t depth = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

TreeStats tree_stats(const FullBinaryTree& tree);

/// One resolved subtree during decode: `node` is the pre-order index (the
/// same ids the DOT renderer uses), `value` the natural it stands for.
struct TraceEntry {
  uint32_t node = 0;
  uint64_t value = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Post-order record of a decode run: children always appear before their
/// parent, and the final entry carries the root's value.
using DecodeTrace = std::vector<TraceEntry>;

// Decode sieves per unrank call; 10^7 keeps adversarial small trees cheap
// while covering every value the bundled reference table reaches.
inline constexpr uint64_t kDefaultDecodeMaxSieveBound = 10'000'000;  // 10^7

/// Tree of n: the number 1 maps to a lone leaf; any other n maps to a node
/// whose left subtree encodes n's type and right subtree encodes n's order.
FullBinaryTree encode(uint64_t n, SieveCache& cache);
FullBinaryTree encode(uint64_t n, const Budget& budget = {});

/// Inverse of encode: leaves are worth 1 and each internal node is the
/// unique number whose type is its left child's value and whose order is
/// its right child's value, resolved upward from the leaves. A budget
/// overrun raises ResourceError tagged with the offending node's index.
uint64_t decode(const FullBinaryTree& tree, SieveCache& cache, DecodeTrace* trace = nullptr);
uint64_t decode(const FullBinaryTree& tree,
                const Budget& budget = Budget{kDefaultDecodeMaxSieveBound},
                DecodeTrace* trace = nullptr);

}  // namespace arborith

#endif
