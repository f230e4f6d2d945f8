#include "arborith/treeio.hpp"

#include <limits>

namespace arborith {

namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

// Parsers build into a scratch node soup first; a second pass lays the tree
// out in canonical pre-order. Keeps label-order normalization trivial.
struct TmpNode {
  uint32_t left = kNone;
  uint32_t right = kNone;
  bool leaf = false;
};

FullBinaryTree emit_preorder(const std::vector<TmpNode>& nodes, uint32_t root) {
  FullBinaryTree::Builder out;
  struct Item {
    uint32_t tmp;
    uint32_t patch;  // internal node whose right child starts here
  };
  std::vector<Item> stack{{root, kNone}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.patch != kNone) out.set_right(item.patch, out.size());
    const TmpNode& n = nodes[item.tmp];
    if (n.leaf) {
      out.add_leaf();
    } else {
      uint32_t idx = out.add_internal();
      stack.push_back({n.right, idx});
      stack.push_back({n.left, kNone});
    }
  }
  return out.take();
}

struct Parser {
  std::string_view text;
  bool labeled = false;
  size_t pos = 0;
  std::vector<TmpNode> nodes;

  struct Frame {
    uint32_t node;
    int children = 0;
    char first_label = 0;
  };
  std::vector<Frame> frames;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      pos++;
  }

  // Consumes "T:" or "O:", returning the letter. Only called in labeled mode.
  char read_label() {
    char c = text[pos];
    if (c != 'T' && c != 'O') fail("expected 'T:' or 'O:' label");
    if (pos + 1 >= text.size() || text[pos + 1] != ':') {
      pos++;
      fail("malformed label: expected ':'");
    }
    pos += 2;
    return c;
  }

  void attach(uint32_t child) {
    Frame& f = frames.back();
    uint32_t* slot;
    if (labeled) {
      slot = f.first_label == 'T' ? (f.children == 0 ? &nodes[f.node].left : &nodes[f.node].right)
                                  : (f.children == 0 ? &nodes[f.node].right : &nodes[f.node].left);
    } else {
      slot = f.children == 0 ? &nodes[f.node].left : &nodes[f.node].right;
    }
    *slot = child;
    f.children++;
  }

  FullBinaryTree run() {
    uint32_t completed = kNone;
    for (;;) {
      skip_ws();
      if (!frames.empty() && labeled) {
        // Inside a node every subtree is introduced by its label.
        if (pos == text.size()) fail("unexpected end of input: unbalanced '('");
        if (text[pos] != ')') {
          size_t label_at = pos;
          char label = read_label();
          Frame& f = frames.back();
          if (f.children == 0) {
            f.first_label = label;
          } else if (label == f.first_label) {
            pos = label_at;
            fail(std::string("duplicate '") + label + ":' label");
          }
          skip_ws();
        }
      }
      if (pos == text.size()) {
        if (frames.empty() && completed == kNone) fail("empty input");
        fail("unexpected end of input: unbalanced '('");
      }
      char c = text[pos];
      if (c == '1') {
        pos++;
        nodes.push_back({kNone, kNone, true});
        completed = static_cast<uint32_t>(nodes.size() - 1);
      } else if (c == '(') {
        pos++;
        nodes.push_back({});
        frames.push_back({static_cast<uint32_t>(nodes.size() - 1)});
        continue;
      } else if (c == ')' && !frames.empty()) {
        fail(frames.back().children == 1 ? "single-child node: '(' needs exactly two subtrees"
                                         : "empty node: '(' needs exactly two subtrees");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }

      // Bubble finished subtrees into their parents.
      for (;;) {
        if (frames.empty()) {
          skip_ws();
          if (pos != text.size()) fail("trailing characters after tree");
          return emit_preorder(nodes, completed);
        }
        attach(completed);
        if (frames.back().children == 1) break;  // second subtree comes next
        skip_ws();
        if (pos == text.size()) fail("unexpected end of input: unbalanced '('");
        if (text[pos] != ')') fail("expected ')': '(' takes exactly two subtrees");
        pos++;
        completed = frames.back().node;
        frames.pop_back();
      }
    }
  }
};

void append_subtree(std::string& out, const FullBinaryTree& tree, bool labeled) {
  struct Item {
    uint32_t node;
    const char* literal;  // when set, plain text instead of a subtree
  };
  std::vector<Item> stack{{0, nullptr}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.literal) {
      out += item.literal;
      continue;
    }
    if (tree.is_leaf(item.node)) {
      out += '1';
      continue;
    }
    out += '(';
    if (labeled) out += "T:";
    stack.push_back({0, ")"});
    stack.push_back({tree.right_child(item.node), nullptr});
    stack.push_back({0, labeled ? " O:" : " "});
    stack.push_back({tree.left_child(item.node), nullptr});
  }
}

}  // namespace

FullBinaryTree parse_positional(std::string_view text) {
  Parser p;
  p.text = text;
  return p.run();
}

FullBinaryTree parse_labeled(std::string_view text) {
  Parser p;
  p.text = text;
  p.labeled = true;
  return p.run();
}

std::string serialize_positional(const FullBinaryTree& tree) {
  std::string out;
  append_subtree(out, tree, false);
  return out;
}

std::string serialize_labeled(const FullBinaryTree& tree) {
  std::string out;
  append_subtree(out, tree, true);
  return out;
}

FullBinaryTree parse_tree(std::string_view text, TreeFormat format) {
  return format == TreeFormat::positional ? parse_positional(text) : parse_labeled(text);
}

std::string serialize_tree(const FullBinaryTree& tree, TreeFormat format) {
  return format == TreeFormat::positional ? serialize_positional(tree) : serialize_labeled(tree);
}

std::string render_dot(const FullBinaryTree& tree, bool annotate, SieveCache& cache) {
  std::vector<uint64_t> values;
  if (annotate) {
    DecodeTrace trace;
    decode(tree, cache, &trace);
    values.resize(tree.node_count());
    for (const TraceEntry& e : trace) values[e.node] = e.value;
  }
  std::string out = "digraph arborith {\n";
  for (uint32_t i = 0; i < tree.node_count(); i++) {
    out += "  n" + std::to_string(i);
    if (annotate) out += " [label=\"" + std::to_string(values[i]) + "\"]";
    out += ";\n";
  }
  for (uint32_t i = 0; i < tree.node_count(); i++) {
    if (tree.is_leaf(i)) continue;
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(tree.left_child(i)) + " [label=\"T\"];\n";
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(tree.right_child(i)) + " [label=\"O\"];\n";
  }
  out += "}\n";
  return out;
}

std::string render_dot(const FullBinaryTree& tree, bool annotate, const Budget& budget) {
  SieveCache cache(budget);
  return render_dot(tree, annotate, cache);
}

std::string render_ascii(const FullBinaryTree& tree) {
  struct Frame {
    uint32_t node;
    std::string lead;  // printed before this node's symbol
    std::string cont;  // prefix inherited by its children
  };
  std::string out;
  std::vector<Frame> stack{{0, "", ""}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    out += f.lead;
    out += tree.is_leaf(f.node) ? '1' : '*';
    out += '\n';
    if (!tree.is_leaf(f.node)) {
      stack.push_back({tree.right_child(f.node), f.cont + "`-O ", f.cont + "  "});
      stack.push_back({tree.left_child(f.node), f.cont + "|-T ", f.cont + "| "});
    }
  }
  return out;
}

}  // namespace arborith
