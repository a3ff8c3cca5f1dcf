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

#ifndef GRAFTER_TREEBANK_H_
#define GRAFTER_TREEBANK_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "grafter/corpus.h"
#include "grafter/phrase_label.h"
#include "grafter/tree.h"

namespace grafter {

struct Alignment {
  bool ok = true;
  // First leaf/token index where the two sequences disagree.
  std::size_t divergent_index = 0;
  std::string message;

  explicit operator bool() const { return ok; }
};

// Compares leaf texts with token texts position by position, resolving PTB
// bracket escapes on both sides.
Alignment Align(const ParseTree& tree, const Sentence& sentence);

// A phrasal node: labeled, internal, not a part-of-speech node.
bool IsPhrasalNode(const ParseTree& tree, NodeId id);

// Non-root phrasal nodes whose base label is in `labels` and whose span does
// not cut through a mention. With `require_mention_child`, the span must also
// contain at least one whole mention. Preorder.
std::vector<NodeId> EligibleNodes(const ParseTree& tree,
                                  const Sentence& sentence,
                                  const std::set<PhraseLabel>& labels,
                                  bool require_mention_child);

// A constituent that can be copied into another sentence.
struct DonorRef {
  std::size_t sentence_id = 0;
  NodeId node = 0;
  PhraseLabel label{""};
  Span span;
  std::vector<std::string> tokens;
  std::vector<Tag> tags;
};

struct PhraseIndexOptions {
  // Off only for raw occurrence counting.
  bool require_mention_complete = true;
};

class PhraseIndex {
 public:
  const std::vector<DonorRef>& Donors(const PhraseLabel& label) const;
  const std::map<PhraseLabel, std::vector<DonorRef>>& entries() const {
    return entries_;
  }
  std::size_t size() const;
  bool empty() const { return entries_.empty(); }

  // Sentences without a tree or whose tree does not align.
  const std::vector<std::size_t>& skipped_sentences() const { return skipped_; }

 private:
  friend PhraseIndex BuildPhraseIndex(const Corpus&,
                                      std::span<const std::optional<ParseTree>>,
                                      const std::set<PhraseLabel>&,
                                      const PhraseIndexOptions&);

  std::map<PhraseLabel, std::vector<DonorRef>> entries_;
  std::vector<std::size_t> skipped_;
};

// Trees are paired with sentences by position. Every phrasal node (root
// included) with a label in `labels` is indexed in sentence order.
PhraseIndex BuildPhraseIndex(const Corpus& corpus,
                             std::span<const std::optional<ParseTree>> trees,
                             const std::set<PhraseLabel>& labels,
                             const PhraseIndexOptions& options = {});

// Occurrences of each base label over phrasal nodes (part-of-speech nodes
// are not counted).
using PhraseCountMap = std::map<std::string, std::size_t>;
void AddPhraseCounts(const ParseTree& tree, PhraseCountMap& counts);
PhraseCountMap PhraseCounts(std::span<const ParseTree> trees);

// Replaces `span` of `tokens` with the given texts and tags.
std::vector<Token> Splice(std::span<const Token> tokens, const Span& span,
                          std::span<const std::string> texts,
                          std::span<const Tag> tags);

// Replaces the span of `target` in `host` with the donor's tokens and tags.
// Throws std::invalid_argument if the base labels differ.
std::vector<Token> Graft(const Sentence& host, const ParseTree& tree,
                         NodeId target, const DonorRef& donor);

}  // namespace grafter

#endif  // GRAFTER_TREEBANK_H_
