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

#ifndef GRAFTER_THESAURUS_H_
#define GRAFTER_THESAURUS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grafter {

// ASCII case folding; other bytes pass through.
std::string FoldCase(std::string_view text);

// Case-folded surface form -> synonym token sequences.
class Thesaurus {
 public:
  using Synonym = std::vector<std::string>;

  // Skips empty synonyms and single-token synonyms equal to the key.
  void Add(std::string_view key, Synonym synonym);

  // nullptr when the (case-folded) text has no entry.
  const std::vector<Synonym>* Find(std::string_view text) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Synonym>> entries_;
};

// TSV: `key<TAB>syn1a syn1b<TAB>syn2a ...`, one key per line. Repeated keys
// merge. Blank lines and lines starting with '#' are ignored.
Thesaurus ParseThesaurus(std::string_view text);

}  // namespace grafter

#endif  // GRAFTER_THESAURUS_H_
