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

#ifndef GRAFTER_TAG_H_
#define GRAFTER_TAG_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace grafter {

enum class TagKind { kB, kI, kO };

// A BIO tag. `entity_type` is nonempty exactly when kind is B or I.
struct Tag {
  TagKind kind = TagKind::kO;
  std::string entity_type;

  static Tag Outside() { return Tag{}; }
  static Tag Begin(std::string type) {
    return Tag{TagKind::kB, std::move(type)};
  }
  static Tag Inside(std::string type) {
    return Tag{TagKind::kI, std::move(type)};
  }

  bool is_outside() const { return kind == TagKind::kO; }

  friend bool operator==(const Tag&, const Tag&) = default;
};

// Parses "O", "B-X", "I-X"; "B_X" and "I_X" are accepted as well.
// Returns nullopt for anything else.
std::optional<Tag> ParseTag(std::string_view text);

// Canonical surface form: "O" or "B-X" / "I-X".
std::string ToString(const Tag& tag);

}  // namespace grafter

#endif  // GRAFTER_TAG_H_
