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

#include "grafter/phrase_label.h"

namespace grafter {

PhraseLabel::PhraseLabel(std::string_view label) : text_(label) {
  if (label == "NP") {
    kind_ = Kind::kNP;
  } else if (label == "VP") {
    kind_ = Kind::kVP;
  } else if (label == "ADJP") {
    kind_ = Kind::kADJP;
  } else if (label == "ADVP") {
    kind_ = Kind::kADVP;
  } else if (label == "PP") {
    kind_ = Kind::kPP;
  } else if (label == "FRAG") {
    kind_ = Kind::kFRAG;
  } else {
    kind_ = Kind::kOther;
  }
}

std::string_view BaseLabel(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  const std::size_t cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

std::set<PhraseLabel> ParseLabelList(std::string_view list) {
  std::set<PhraseLabel> labels;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) labels.emplace(item);
    pos = comma + 1;
  }
  return labels;
}

std::set<PhraseLabel> DefaultReplacementLabels() {
  return ParseLabelList("NP,VP,ADJP,ADVP,PP");
}

}  // namespace grafter
