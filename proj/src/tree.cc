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

#include "grafter/tree.h"

#include <array>
#include <utility>

#include "grafter/errors.h"

namespace grafter {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 6>
    kBracketEscapes = {{{"-LRB-", "("},
                        {"-RRB-", ")"},
                        {"-LSB-", "["},
                        {"-RSB-", "]"},
                        {"-LCB-", "{"},
                        {"-RCB-", "}"}}};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

void AppendLinearized(const ParseTree& tree, NodeId id, std::string& out) {
  const TreeNode& node = tree.node(id);
  if (node.is_leaf()) {
    out += EscapeBracket(node.leaf_text);
    return;
  }
  out += '(';
  out += node.label;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0 || !node.label.empty()) out += ' ';
    AppendLinearized(tree, node.children[i], out);
  }
  out += ')';
}

}  // namespace

ParseTree::ParseTree(std::vector<TreeNode> nodes, std::size_t sentence_id)
    : nodes_(std::move(nodes)), sentence_id_(sentence_id) {
  std::size_t next_leaf = 0;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    for (NodeId child : nodes_[id].children) nodes_[child].parent = id;
    if (nodes_[id].is_leaf()) {
      nodes_[id].span = {next_leaf, next_leaf + 1};
      ++next_leaf;
    }
  }
  for (NodeId id = nodes_.size(); id-- > 0;) {
    TreeNode& node = nodes_[id];
    if (node.is_leaf()) continue;
    node.span = {nodes_[node.children.front()].span.start,
                 nodes_[node.children.back()].span.end};
  }
}

std::vector<std::string> ParseTree::Leaves() const {
  std::vector<std::string> leaves;
  for (const TreeNode& node : nodes_) {
    if (node.is_leaf()) leaves.push_back(node.leaf_text);
  }
  return leaves;
}

bool ParseTree::IsPreterminal(NodeId id) const {
  const TreeNode& n = node(id);
  return n.children.size() == 1 && node(n.children.front()).is_leaf();
}

std::string UnescapeBracket(std::string_view text) {
  for (const auto& [escaped, literal] : kBracketEscapes) {
    if (text == escaped) return std::string(literal);
  }
  return std::string(text);
}

std::string EscapeBracket(std::string_view text) {
  for (const auto& [escaped, literal] : kBracketEscapes) {
    if (text == literal) return std::string(escaped);
  }
  return std::string(text);
}

ParseTree ParsePtb(std::string_view text) {
  std::vector<TreeNode> nodes;
  std::vector<NodeId> open;
  bool done = false;
  std::size_t i = 0;

  auto read_word = [&] {
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i]) && text[i] != '(' &&
           text[i] != ')') {
      ++i;
    }
    return text.substr(start, i - start);
  };
  auto skip_space = [&] {
    while (i < text.size() && IsSpace(text[i])) ++i;
  };

  skip_space();
  if (i == text.size()) throw ParseError("empty input", 0, 1);

  while (true) {
    skip_space();
    if (i == text.size()) break;
    const std::size_t column = i + 1;
    if (done) throw ParseError("trailing input after tree", 0, column);

    const char c = text[i];
    if (c == '(') {
      ++i;
      const NodeId id = nodes.size();
      if (!open.empty()) nodes[open.back()].children.push_back(id);
      nodes.emplace_back();
      open.push_back(id);
      skip_space();
      if (i < text.size() && text[i] != '(' && text[i] != ')') {
        nodes[id].label = std::string(read_word());
      }
    } else if (c == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'", 0, column);
      if (nodes[open.back()].children.empty()) {
        throw ParseError("node without children", 0, column);
      }
      ++i;
      open.pop_back();
      if (open.empty()) done = true;
    } else {
      if (open.empty()) throw ParseError("expected '('", 0, column);
      TreeNode leaf;
      leaf.leaf_text = UnescapeBracket(read_word());
      nodes[open.back()].children.push_back(nodes.size());
      nodes.push_back(std::move(leaf));
    }
  }
  if (!done) {
    throw ParseError("unbalanced '(': missing ')'", 0, text.size() + 1);
  }
  return ParseTree(std::move(nodes), 0);
}

std::string LinearizePtb(const ParseTree& tree) {
  std::string out;
  if (tree.size() > 0) AppendLinearized(tree, tree.root(), out);
  return out;
}

TreeFile ReadTreeFile(std::string_view text) {
  TreeFile file;
  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    const std::size_t index = line_number++;

    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      file.trees.emplace_back();
      continue;
    }
    try {
      ParseTree tree = ParsePtb(line);
      tree.set_sentence_id(index);
      file.trees.emplace_back(std::move(tree));
    } catch (const ParseError& e) {
      file.errors.emplace_back(index + 1, e.what());
      file.trees.emplace_back();
    }
  }
  return file;
}

}  // namespace grafter
