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

#include "grafter/corpus.h"

#include <algorithm>

namespace grafter {

namespace {

// The tag an I-X token must follow: B-X or I-X.
bool Continues(const Tag& previous, const Tag& current) {
  return !previous.is_outside() && previous.entity_type == current.entity_type;
}

}  // namespace

std::vector<BioViolation> FindBioViolations(const Sentence& sentence) {
  std::vector<BioViolation> violations;
  const auto& tokens = sentence.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Tag& tag = tokens[i].tag;
    if (tag.kind != TagKind::kO && tag.entity_type.empty()) {
      violations.push_back({sentence.id, i, "tag without entity type"});
      continue;
    }
    if (tag.kind != TagKind::kI) continue;
    if (i == 0 || tokens[i - 1].tag.is_outside()) {
      violations.push_back({sentence.id, i, "I without preceding B"});
    } else if (!Continues(tokens[i - 1].tag, tag)) {
      violations.push_back(
          {sentence.id, i,
           "I-" + tag.entity_type + " follows " + ToString(tokens[i - 1].tag)});
    }
  }
  return violations;
}

bool IsBioValid(std::span<const Token> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Tag& tag = tokens[i].tag;
    if (tag.kind != TagKind::kO && tag.entity_type.empty()) return false;
    if (tag.kind == TagKind::kI &&
        (i == 0 || !Continues(tokens[i - 1].tag, tag))) {
      return false;
    }
  }
  return true;
}

std::vector<Mention> ExtractMentions(const Sentence& sentence) {
  std::vector<Mention> mentions;
  const auto& tokens = sentence.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].tag.kind != TagKind::kB) continue;
    std::size_t end = i + 1;
    while (end < tokens.size() && tokens[end].tag.kind == TagKind::kI) ++end;
    mentions.push_back({sentence.id, {i, end}, tokens[i].tag.entity_type});
    i = end - 1;
  }
  return mentions;
}

bool IsMentionComplete(const Span& span, std::span<const Mention> mentions) {
  return std::all_of(mentions.begin(), mentions.end(), [&](const Mention& m) {
    return span.Contains(m.span) || !span.Overlaps(m.span);
  });
}

std::vector<std::string> TokenTexts(std::span<const Token> tokens) {
  std::vector<std::string> texts;
  texts.reserve(tokens.size());
  for (const Token& token : tokens) texts.push_back(token.text);
  return texts;
}

void Renumber(Corpus& corpus) {
  corpus.entity_types.clear();
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    corpus.sentences[i].id = i;
    for (const Token& token : corpus.sentences[i].tokens) {
      if (!token.tag.is_outside()) {
        corpus.entity_types.insert(token.tag.entity_type);
      }
    }
  }
}

Corpus Slice(const Corpus& corpus, std::size_t count) {
  Corpus sliced;
  const std::size_t n = std::min(count, corpus.sentences.size());
  sliced.sentences.assign(corpus.sentences.begin(),
                          corpus.sentences.begin() + n);
  Renumber(sliced);
  return sliced;
}

MentionPool BuildMentionPool(const Corpus& corpus) {
  MentionPool pool;
  for (const Sentence& sentence : corpus.sentences) {
    for (const Mention& mention : ExtractMentions(sentence)) {
      std::span<const Token> tokens(sentence.tokens);
      pool[mention.entity_type].push_back(
          TokenTexts(tokens.subspan(mention.span.start, mention.span.width())));
    }
  }
  return pool;
}

}  // namespace grafter
