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

#include "grafter/tag.h"

namespace grafter {

std::optional<Tag> ParseTag(std::string_view text) {
  if (text == "O") return Tag::Outside();
  if (text.size() < 3 || (text[1] != '-' && text[1] != '_')) {
    return std::nullopt;
  }
  std::string type(text.substr(2));
  if (text[0] == 'B') return Tag::Begin(std::move(type));
  if (text[0] == 'I') return Tag::Inside(std::move(type));
  return std::nullopt;
}

std::string ToString(const Tag& tag) {
  switch (tag.kind) {
    case TagKind::kB:
      return "B-" + tag.entity_type;
    case TagKind::kI:
      return "I-" + tag.entity_type;
    case TagKind::kO:
      break;
  }
  return "O";
}

}  // namespace grafter
