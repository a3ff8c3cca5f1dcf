//
// Copyright 2026 The Grafter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef GRAFTER_TREE_H_
#define GRAFTER_TREE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grafter/corpus.h"

namespace grafter {

using NodeId = std::size_t;

struct TreeNode {
  // Category for internal nodes (full label, e.g. "NP-SBJ"); empty for
  // leaves and for the unlabeled root some treebanks emit.
  std::string label;
  Span span;
  std::vector<NodeId> children;
  std::optional<NodeId> parent;
  // Surface text with PTB bracket escapes resolved; leaves only.
  std::string leaf_text;

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Constituency tree stored as an arena. Nodes are in preorder, so the root
// is node 0 and every parent precedes its children.
class ParseTree {
 public:
  ParseTree() = default;
  ParseTree(std::vector<TreeNode> nodes, std::size_t sentence_id);

  NodeId root() const { return 0; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  std::size_t sentence_id() const { return sentence_id_; }
  void set_sentence_id(std::size_t id) { sentence_id_ = id; }

  // Leaf texts in order.
  std::vector<std::string> Leaves() const;
  std::size_t leaf_count() const {
    return nodes_.empty() ? 0 : nodes_[0].span.end;
  }

  // An internal node whose only child is a leaf (a part-of-speech node).
  bool IsPreterminal(NodeId id) const;

  friend bool operator==(const ParseTree&, const ParseTree&) = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t sentence_id_ = 0;
};

// Maps -LRB- -RRB- -LSB- -RSB- -LCB- -RCB- to the bracket they stand for;
// other text is returned unchanged.
std::string UnescapeBracket(std::string_view text);
std::string EscapeBracket(std::string_view text);

// Parses one bracketed tree, e.g. "(S (NP (PRP She)) (VP (VBD fell)))".
// Throws ParseError (with a 1-based column) on unbalanced brackets, empty
// nodes, or trailing input.
ParseTree ParsePtb(std::string_view text);

// Single-line bracketed form; inverse of ParsePtb.
std::string LinearizePtb(const ParseTree& tree);

// One entry per line of a tree file. Blank lines yield nullopt (missing
// parse); so do lines that fail to parse, which are also reported in
// `errors` as (1-based line, message).
struct TreeFile {
  std::vector<std::optional<ParseTree>> trees;
  std::vector<std::pair<std::size_t, std::string>> errors;
};

TreeFile ReadTreeFile(std::string_view text);

}  // namespace grafter

#endif  // GRAFTER_TREE_H_
