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

#ifndef GRAFTER_AUGMENT_H_
#define GRAFTER_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grafter/corpus.h"
#include "grafter/fillmask.h"
#include "grafter/phrase_label.h"
#include "grafter/random.h"
#include "grafter/thesaurus.h"
#include "grafter/tree.h"
#include "grafter/treebank.h"

namespace grafter {

enum class Strategy { kSynonym, kMention, kLanguageModel, kConstituency };

// "sr", "mr", "lm", "cr".
std::string_view ToString(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);

struct AugmentationPlan {
  Strategy strategy = Strategy::kSynonym;
  // Samples generated per source sentence (k).
  std::size_t num_samples = 1;
  // Per-token (SR) or per-mention (MR) Bernoulli probability.
  double replace_ratio = 0.3;
  // Masked tokens (LM) or replaced constituents (CR) per sample (n).
  std::size_t num_replacements = 1;
  std::set<PhraseLabel> cr_labels = DefaultReplacementLabels();
  bool require_mention_child = true;
  // SR only: leave O tokens alone.
  bool mentions_only = false;
  std::uint64_t seed = 0;
  // Extra draws allowed per sample slot when a draw duplicates the source
  // or an earlier sample.
  std::size_t max_retries = 10;
  // Candidates requested per mask (LM).
  std::size_t top_n = 10;
};

// Throws ConfigError for k == 0, a ratio outside [0, 1], n == 0 for LM/CR,
// an empty CR label set, or top_n == 0.
void ValidatePlan(const AugmentationPlan& plan);

// One replaced region. `source` indexes the original sentence, `output` the
// augmented one.
struct Edit {
  Span source;
  Span output;
  std::string description;
};

struct Provenance {
  std::size_t source_id = 0;
  Strategy strategy = Strategy::kSynonym;
  std::size_t sample_index = 0;
  std::vector<Edit> edits;
};

struct AugmentedSentence {
  std::vector<Token> tokens;
  Provenance provenance;
};

struct AugmentStats {
  std::size_t sentences_skipped = 0;
  std::size_t samples_emitted = 0;
  std::size_t dedup_drops = 0;
  std::size_t provider_failures = 0;
  std::size_t replacements_applied = 0;
  std::size_t grafts_applied = 0;
  // MR mentions left unchanged because no other same-type mention exists.
  std::size_t empty_pool_mentions = 0;
  // CR targets left unchanged because no donor passed the exclusions.
  std::size_t targets_without_donor = 0;

  AugmentStats& operator+=(const AugmentStats& other);
  friend bool operator==(const AugmentStats&, const AugmentStats&) = default;
};

struct AugmentResult {
  std::vector<AugmentedSentence> samples;
  AugmentStats stats;
};

// Tags for a span of `length` tokens that replaces a token tagged `original`:
// B-X -> B-X I-X ..., I-X -> I-X I-X ..., O -> O O ...
std::vector<Tag> ProjectTags(const Tag& original, std::size_t length);

// A single candidate sample before deduplication.
struct Draw {
  std::vector<Token> tokens;
  std::vector<Edit> edits;
};

// One synonym-replacement pass: every token is selected with probability
// `ratio`; selected tokens with a thesaurus entry become a uniformly chosen
// synonym.
Draw DrawSynonymReplacement(const Sentence& sentence,
                            const Thesaurus& thesaurus, double ratio,
                            bool mentions_only, Rng& rng);

AugmentResult AugmentSr(const Sentence& sentence, const Thesaurus& thesaurus,
                        const AugmentationPlan& plan, Rng& rng);

AugmentResult AugmentMr(const Sentence& sentence, const MentionPool& pool,
                        const AugmentationPlan& plan, Rng& rng);

AugmentResult AugmentLm(const Sentence& sentence,
                        const FillMaskProvider& provider,
                        const AugmentationPlan& plan, Rng& rng);

// Up to n span-disjoint targets drawn from the eligible nodes. A drawn node
// nested under an already chosen one is discarded; a drawn node enclosing
// chosen ones replaces them.
std::vector<NodeId> SelectGraftTargets(const ParseTree& tree,
                                       std::vector<NodeId> eligible,
                                       std::size_t count, Rng& rng);

// Uniform donor for `target` among same-label donors from other sentences
// whose text differs from the target span; nullptr if there is none.
const DonorRef* DrawDonor(const PhraseIndex& index, const Sentence& host,
                          const ParseTree& tree, NodeId target, Rng& rng);

AugmentResult AugmentCr(const Sentence& sentence, const ParseTree& tree,
                        const PhraseIndex& index, const AugmentationPlan& plan,
                        Rng& rng);

}  // namespace grafter

#endif  // GRAFTER_AUGMENT_H_
