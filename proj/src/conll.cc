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

#include "grafter/conll.h"

#include <vector>

#include "grafter/errors.h"

namespace grafter {

namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

bool IsFieldSeparator(char c) { return c == '\t' || c == ' '; }

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsFieldSeparator(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsFieldSeparator(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

ConllReadResult ReadConllUnchecked(std::string_view text) {
  ConllReadResult result;
  Sentence current;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.id = result.corpus.sentences.size();
    result.corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::vector<std::string_view> fields = SplitFields(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields.front() == kDocStart) continue;
    if (fields.size() < 2) {
      throw ParseError("expected <text>\\t<tag>, found " +
                           std::to_string(fields.size()) + " field",
                       line_number);
    }
    if (fields.size() > 2) ++result.multi_column_lines;
    std::optional<Tag> tag = ParseTag(fields.back());
    if (!tag) {
      throw ParseError("unrecognized tag '" + std::string(fields.back()) + "'",
                       line_number);
    }
    current.tokens.push_back({std::string(fields.front()), std::move(*tag)});
  }
  flush();
  Renumber(result.corpus);
  return result;
}

ConllReadResult ParseConll(std::string_view text, const ConllOptions& options) {
  ConllReadResult result = ReadConllUnchecked(text);
  for (Sentence& sentence : result.corpus.sentences) {
    for (const BioViolation& violation : FindBioViolations(sentence)) {
      if (!options.lenient) {
        throw ValidationError(violation.message + ", sentence " +
                              std::to_string(violation.sentence_id) +
                              " token " +
                              std::to_string(violation.token_index));
      }
      Tag& tag = sentence.tokens[violation.token_index].tag;
      if (tag.entity_type.empty()) {
        throw ValidationError(violation.message + ", sentence " +
                              std::to_string(violation.sentence_id) +
                              " token " +
                              std::to_string(violation.token_index));
      }
      tag.kind = TagKind::kB;
      ++result.repairs;
    }
  }
  return result;
}

std::string WriteConll(const Corpus& corpus) {
  std::string out;
  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& token : sentence.tokens) {
      out += token.text;
      out += '\t';
      out += ToString(token.tag);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace grafter
