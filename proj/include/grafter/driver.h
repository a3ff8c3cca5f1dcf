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

#ifndef GRAFTER_DRIVER_H_
#define GRAFTER_DRIVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grafter/augment.h"

namespace grafter {

// What each strategy consumes; only the members the plan's strategy needs
// have to be set.
struct AugmentResources {
  const Thesaurus* thesaurus = nullptr;             // SR
  const MentionPool* mention_pool = nullptr;        // MR
  const FillMaskProvider* provider = nullptr;       // LM
  std::span<const std::optional<ParseTree>> trees;  // CR, by sentence id
  const PhraseIndex* phrase_index = nullptr;        // CR
};

struct CorpusAugmentation {
  // Originals first, then augmentations ordered by (source id, sample index).
  Corpus corpus;
  std::vector<Provenance> provenance;  // one per augmented sentence
  AugmentStats stats;
  std::size_t missing_trees = 0;
  std::size_t unaligned_trees = 0;
};

// Each sentence draws from its own stream derived from (plan.seed, id), so
// the result does not depend on `jobs`. Throws ConfigError before doing any
// work if the plan is invalid or a required resource is missing, and
// ValidationError if an output sentence is not BIO-valid.
CorpusAugmentation AugmentCorpus(const Corpus& corpus,
                                 const AugmentResources& resources,
                                 const AugmentationPlan& plan,
                                 std::size_t jobs = 1);

}  // namespace grafter

#endif  // GRAFTER_DRIVER_H_
