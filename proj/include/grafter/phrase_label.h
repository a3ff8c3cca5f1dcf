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

#ifndef GRAFTER_PHRASE_LABEL_H_
#define GRAFTER_PHRASE_LABEL_H_

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace grafter {

// Phrasal category of a constituent. The six categories the augmentation
// grid talks about get their own kind; anything else is kOther and keeps its
// text.
class PhraseLabel {
 public:
  enum class Kind { kNP, kVP, kADJP, kADVP, kPP, kFRAG, kOther };

  explicit PhraseLabel(std::string_view label);

  Kind kind() const { return kind_; }
  const std::string& str() const { return text_; }

  friend bool operator==(const PhraseLabel& a, const PhraseLabel& b) {
    return a.text_ == b.text_;
  }
  friend auto operator<=>(const PhraseLabel& a, const PhraseLabel& b) {
    return a.text_ <=> b.text_;
  }

 private:
  Kind kind_;
  std::string text_;
};

// Strips function tags and co-indices: "NP-SBJ-1" -> "NP", "NP=2" -> "NP".
// Labels that start with '-' ("-NONE-", "-LRB-") are returned unchanged.
std::string_view BaseLabel(std::string_view label);

// Parses a comma-separated list such as "NP,VP,PP". Empty items are skipped.
std::set<PhraseLabel> ParseLabelList(std::string_view list);

// The default constituent set for constituency replacement.
std::set<PhraseLabel> DefaultReplacementLabels();

}  // namespace grafter

#endif  // GRAFTER_PHRASE_LABEL_H_
