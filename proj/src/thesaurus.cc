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

#include "grafter/thesaurus.h"

#include <algorithm>

namespace grafter {

namespace {

std::vector<std::string> SplitOn(std::string_view text, char separator) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(separator, pos);
    if (next == std::string_view::npos) next = text.size();
    parts.emplace_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

}  // namespace

std::string FoldCase(std::string_view text) {
  std::string folded(text);
  for (char& c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return folded;
}

void Thesaurus::Add(std::string_view key, Synonym synonym) {
  std::erase(synonym, std::string());
  std::string folded = FoldCase(key);
  if (synonym.empty() || folded.empty()) return;
  if (synonym.size() == 1 && FoldCase(synonym.front()) == folded) return;
  auto& list = entries_[std::move(folded)];
  if (std::find(list.begin(), list.end(), synonym) == list.end()) {
    list.push_back(std::move(synonym));
  }
}

const std::vector<Thesaurus::Synonym>* Thesaurus::Find(
    std::string_view text) const {
  auto it = entries_.find(FoldCase(text));
  return it == entries_.end() ? nullptr : &it->second;
}

Thesaurus ParseThesaurus(std::string_view text) {
  Thesaurus thesaurus;
  for (std::string line : SplitOn(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    for (std::size_t i = 1; i < fields.size(); ++i) {
      thesaurus.Add(fields[0], SplitOn(fields[i], ' '));
    }
  }
  return thesaurus;
}

}  // namespace grafter
