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

#ifndef GRAFTER_CORPUS_H_
#define GRAFTER_CORPUS_H_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "grafter/tag.h"

namespace grafter {

struct Token {
  std::string text;
  Tag tag;

  friend bool operator==(const Token&, const Token&) = default;
};

// Half-open token range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t width() const { return end - start; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Sentence {
  std::size_t id = 0;
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Mention {
  std::size_t sentence_id = 0;
  Span span;
  std::string entity_type;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::set<std::string> entity_types;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// An I-X token that does not continue a B-X / I-X token.
struct BioViolation {
  std::size_t sentence_id = 0;
  std::size_t token_index = 0;
  std::string message;
};

std::vector<BioViolation> FindBioViolations(const Sentence& sentence);
bool IsBioValid(std::span<const Token> tokens);
inline bool IsBioValid(const Sentence& sentence) {
  return IsBioValid(sentence.tokens);
}

// Mentions of a BIO-valid sentence, disjoint and sorted by start.
std::vector<Mention> ExtractMentions(const Sentence& sentence);

// True when no mention of `mentions` starts or ends strictly inside `span`
// while extending beyond it.
bool IsMentionComplete(const Span& span, std::span<const Mention> mentions);

std::vector<std::string> TokenTexts(std::span<const Token> tokens);

// Rebuilds `entity_types` and renumbers sentence ids to 0..n-1.
void Renumber(Corpus& corpus);

// The first `count` sentences (all of them if count exceeds the size).
Corpus Slice(const Corpus& corpus, std::size_t count);

// Entity type -> surface token sequences of every mention of that type,
// in corpus order, duplicates retained.
using MentionPool =
    std::map<std::string, std::vector<std::vector<std::string>>>;

MentionPool BuildMentionPool(const Corpus& corpus);

}  // namespace grafter

#endif  // GRAFTER_CORPUS_H_
