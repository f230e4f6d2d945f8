#ifndef ARBORITH_TREEIO_HPP
#define ARBORITH_TREEIO_HPP

#include <string>
#include <string_view>

#include "arborith/codec.hpp"

namespace arborith {

// Two text forms for the same trees.
//
// Positional (left child = type, right child = order):
//   tree := "1" | "(" tree SP tree ")"
// Labeled (children tagged, textual order irrelevant):
//   tree  := "1" | "(" child SP child ")"
//   child := ("T:" | "O:") tree
// Canonical output uses single spaces; parsers accept any run of spaces,
// tabs, and newlines between tokens. Labeled input may give the two
// children in either order; the parsed tree always stores the T child on
// the left. All parse failures throw ParseError with a byte offset.

enum class TreeFormat { positional, labeled };

FullBinaryTree parse_positional(std::string_view text);
std::string serialize_positional(const FullBinaryTree& tree);

FullBinaryTree parse_labeled(std::string_view text);
std::string serialize_labeled(const FullBinaryTree& tree);

FullBinaryTree parse_tree(std::string_view text, TreeFormat format);
std::string serialize_tree(const FullBinaryTree& tree, TreeFormat format);

/// Graphviz digraph: node ids n0, n1, ... in pre-order, one edge per
/// parent-child link with label "T" (left) or "O" (right). With `annotate`,
/// every node is labeled with the natural it decodes to, which costs a
/// decode and can therefore raise ResourceError.
std::string render_dot(const FullBinaryTree& tree, bool annotate, SieveCache& cache);
std::string render_dot(const FullBinaryTree& tree, bool annotate = false,
                       const Budget& budget = Budget{kDefaultDecodeMaxSieveBound});

/// Deterministic one-line-per-node drawing. Leaves print "1", internal
/// nodes "*"; children hang below their parent with T/O connectors.
std::string render_ascii(const FullBinaryTree& tree);

}  // namespace arborith

#endif
