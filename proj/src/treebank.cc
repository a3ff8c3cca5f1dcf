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

#include "grafter/treebank.h"

#include <algorithm>
#include <stdexcept>

namespace grafter {

namespace {

const std::vector<DonorRef> kNoDonors;

PhraseLabel NodeLabel(const ParseTree& tree, NodeId id) {
  return PhraseLabel(BaseLabel(tree.node(id).label));
}

bool ContainsWholeMention(const Span& span, std::span<const Mention> mentions) {
  return std::any_of(mentions.begin(), mentions.end(),
                     [&](const Mention& m) { return span.Contains(m.span); });
}

}  // namespace

Alignment Align(const ParseTree& tree, const Sentence& sentence) {
  const std::vector<std::string> leaves = tree.Leaves();
  const std::size_t common = std::min(leaves.size(), sentence.tokens.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (UnescapeBracket(leaves[i]) !=
        UnescapeBracket(sentence.tokens[i].text)) {
      return {false, i,
              "leaf '" + leaves[i] + "' != token '" + sentence.tokens[i].text +
                  "' at index " + std::to_string(i)};
    }
  }
  if (leaves.size() != sentence.tokens.size()) {
    return {false, common,
            std::to_string(leaves.size()) + " leaves vs " +
                std::to_string(sentence.tokens.size()) +
                " tokens, diverging at index " + std::to_string(common)};
  }
  return {};
}

bool IsPhrasalNode(const ParseTree& tree, NodeId id) {
  const TreeNode& node = tree.node(id);
  return !node.is_leaf() && !node.label.empty() && !tree.IsPreterminal(id);
}

std::vector<NodeId> EligibleNodes(const ParseTree& tree,
                                  const Sentence& sentence,
                                  const std::set<PhraseLabel>& labels,
                                  bool require_mention_child) {
  const std::vector<Mention> mentions = ExtractMentions(sentence);
  std::vector<NodeId> eligible;
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (id == tree.root() || !IsPhrasalNode(tree, id)) continue;
    if (!labels.contains(NodeLabel(tree, id))) continue;
    const Span& span = tree.node(id).span;
    if (!IsMentionComplete(span, mentions)) continue;
    if (require_mention_child && !ContainsWholeMention(span, mentions)) {
      continue;
    }
    eligible.push_back(id);
  }
  return eligible;
}

const std::vector<DonorRef>& PhraseIndex::Donors(
    const PhraseLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? kNoDonors : it->second;
}

std::size_t PhraseIndex::size() const {
  std::size_t total = 0;
  for (const auto& [label, donors] : entries_) total += donors.size();
  return total;
}

PhraseIndex BuildPhraseIndex(const Corpus& corpus,
                             std::span<const std::optional<ParseTree>> trees,
                             const std::set<PhraseLabel>& labels,
                             const PhraseIndexOptions& options) {
  PhraseIndex index;
  if (labels.empty()) return index;
  for (const Sentence& sentence : corpus.sentences) {
    if (sentence.id >= trees.size() || !trees[sentence.id] ||
        !Align(*trees[sentence.id], sentence)) {
      index.skipped_.push_back(sentence.id);
      continue;
    }
    const ParseTree& tree = *trees[sentence.id];
    const std::vector<Mention> mentions = ExtractMentions(sentence);
    for (NodeId id = 0; id < tree.size(); ++id) {
      if (!IsPhrasalNode(tree, id)) continue;
      PhraseLabel label = NodeLabel(tree, id);
      if (!labels.contains(label)) continue;
      const Span span = tree.node(id).span;
      if (options.require_mention_complete &&
          !IsMentionComplete(span, mentions)) {
        continue;
      }
      DonorRef donor{sentence.id, id, label, span, {}, {}};
      for (std::size_t i = span.start; i < span.end; ++i) {
        donor.tokens.push_back(sentence.tokens[i].text);
        donor.tags.push_back(sentence.tokens[i].tag);
      }
      index.entries_[std::move(label)].push_back(std::move(donor));
    }
  }
  return index;
}

void AddPhraseCounts(const ParseTree& tree, PhraseCountMap& counts) {
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (IsPhrasalNode(tree, id)) {
      ++counts[std::string(BaseLabel(tree.node(id).label))];
    }
  }
}

PhraseCountMap PhraseCounts(std::span<const ParseTree> trees) {
  PhraseCountMap counts;
  for (const ParseTree& tree : trees) AddPhraseCounts(tree, counts);
  return counts;
}

std::vector<Token> Splice(std::span<const Token> tokens, const Span& span,
                          std::span<const std::string> texts,
                          std::span<const Tag> tags) {
  if (span.end > tokens.size() || span.start > span.end ||
      texts.size() != tags.size()) {
    throw std::invalid_argument("splice: bad span or mismatched tags");
  }
  std::vector<Token> out;
  out.reserve(tokens.size() - span.width() + texts.size());
  out.insert(out.end(), tokens.begin(), tokens.begin() + span.start);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out.push_back({texts[i], tags[i]});
  }
  out.insert(out.end(), tokens.begin() + span.end, tokens.end());
  return out;
}

std::vector<Token> Graft(const Sentence& host, const ParseTree& tree,
                         NodeId target, const DonorRef& donor) {
  if (NodeLabel(tree, target) != donor.label) {
    throw std::invalid_argument(
        "graft: target label " + tree.node(target).label +
        " does not match donor label " + donor.label.str());
  }
  return Splice(host.tokens, tree.node(target).span, donor.tokens, donor.tags);
}

}  // namespace grafter
