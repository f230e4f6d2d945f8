#include "arborith/codec.hpp"

#include <limits>
#include <string>

namespace arborith {

namespace {
constexpr uint32_t kPending = std::numeric_limits<uint32_t>::max();
}

FullBinaryTree FullBinaryTree::node(const FullBinaryTree& left, const FullBinaryTree& right) {
  uint64_t total = 1 + uint64_t{left.node_count()} + right.node_count();
  if (total > kPending) throw OverflowError("tree node count exceeds 2^32-1");
  std::vector<uint32_t> merged;
  merged.reserve(total);
  uint32_t right_start = 1 + left.node_count();
  merged.push_back(right_start);
  for (uint32_t r : left.right_) merged.push_back(r == 0 ? 0 : r + 1);
  for (uint32_t r : right.right_) merged.push_back(r == 0 ? 0 : r + right_start);
  return FullBinaryTree(std::move(merged));
}

uint32_t FullBinaryTree::Builder::add_leaf() {
  right_.push_back(0);
  return static_cast<uint32_t>(right_.size() - 1);
}

uint32_t FullBinaryTree::Builder::add_internal() {
  right_.push_back(kPending);
  return static_cast<uint32_t>(right_.size() - 1);
}

void FullBinaryTree::Builder::set_right(uint32_t node, uint32_t child) {
  right_[node] = child;
}

FullBinaryTree FullBinaryTree::Builder::take() {
  if (right_.empty()) throw DomainError("tree builder: no nodes");
  for (uint32_t i = 0; i < right_.size(); i++) {
    uint32_t r = right_[i];
    if (r == kPending || (r != 0 && (r <= i + 1 || r >= right_.size())))
      throw DomainError("tree builder: malformed node layout");
  }
  return FullBinaryTree(std::move(right_));
}

TreeStats tree_stats(const FullBinaryTree& tree) {
  const uint32_t n = tree.node_count();
  TreeStats stats;
  std::vector<uint32_t> depth(n, 0);
  for (uint32_t i = 0; i < n; i++) {
    if (tree.is_leaf(i)) {
      stats.leaves++;
      if (depth[i] > stats.depth) stats.depth = depth[i];
    } else {
      stats.internal++;
      depth[tree.left_child(i)] = depth[i] + 1;   // children follow parent in
      depth[tree.right_child(i)] = depth[i] + 1;  // pre-order, so this is safe
    }
  }
  return stats;
}

FullBinaryTree encode(uint64_t n, SieveCache& cache) {
  if (n == 0) throw DomainError("encode: n must be >= 1");
  FullBinaryTree::Builder out;
  // Explicit work stack: Expand turns a value into a node; Patch records
  // where a finished left subtree's sibling begins.
  struct Item {
    uint64_t value;
    uint32_t patch_node;  // kPending for plain expands
  };
  std::vector<Item> stack{{n, kPending}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.patch_node != kPending) out.set_right(item.patch_node, out.size());
    uint64_t v = item.value;
    if (v == 1) {
      out.add_leaf();
      continue;
    }
    const SieveTable& table = cache.at_least(v);
    uint64_t t = table.type_at(v);
    uint64_t k = table.count_leq(t, v);
    uint32_t idx = out.add_internal();
    stack.push_back({k, idx});       // right subtree, resolved after the left
    stack.push_back({t, kPending});  // left subtree next (pre-order)
  }
  return out.take();
}

FullBinaryTree encode(uint64_t n, const Budget& budget) {
  SieveCache cache(budget);
  return encode(n, cache);
}

uint64_t decode(const FullBinaryTree& tree, SieveCache& cache, DecodeTrace* trace) {
  const uint32_t n = tree.node_count();
  std::vector<uint64_t> value(n, 0);
  // Children sit after their parent in pre-order, so one reverse sweep
  // resolves every node from the terminals upward.
  for (uint32_t i = n; i-- > 0;) {
    if (tree.is_leaf(i)) {
      value[i] = 1;
      continue;
    }
    try {
      value[i] = unrank(value[tree.left_child(i)], value[tree.right_child(i)], cache);
    } catch (ResourceError& e) {
      ResourceError tagged("decode: node n" + std::to_string(i) + ": " + e.what(),
                           e.attempted_bound());
      tagged.set_node_index(i);
      throw tagged;
    }
  }
  if (trace) {
    trace->clear();
    trace->reserve(n);
    // Report in post-order (left, right, parent), the order a by-hand
    // labelling pass would write the values down.
    std::vector<uint32_t> stack{0};
    std::vector<uint32_t> order;
    order.reserve(n);
    while (!stack.empty()) {
      uint32_t i = stack.back();
      stack.pop_back();
      order.push_back(i);
      if (!tree.is_leaf(i)) {
        stack.push_back(tree.left_child(i));   // popped last
        stack.push_back(tree.right_child(i));  // popped first
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) trace->push_back({*it, value[*it]});
  }
  return value[0];
}

uint64_t decode(const FullBinaryTree& tree, const Budget& budget, DecodeTrace* trace) {
  SieveCache cache(budget);
  return decode(tree, cache, trace);
}

}  // namespace arborith
