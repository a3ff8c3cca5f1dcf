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

#include "grafter/augment.h"

#include <algorithm>
#include <functional>

#include "grafter/errors.h"

namespace grafter {

namespace {

std::string Join(std::span<const std::string> texts) {
  std::string out;
  for (const std::string& text : texts) {
    if (!out.empty()) out += ' ';
    out += text;
  }
  return out;
}

std::string SpanText(std::span<const Token> tokens, const Span& span) {
  return Join(TokenTexts(tokens.subspan(span.start, span.width())));
}

bool IsCapitalized(std::string_view text) {
  return !text.empty() && text.front() >= 'A' && text.front() <= 'Z';
}

void Capitalize(std::string& text) {
  if (!text.empty() && text.front() >= 'a' && text.front() <= 'z') {
    text.front() = static_cast<char>(text.front() - 'a' + 'A');
  }
}

bool HasWhitespace(std::string_view text) {
  return text.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

// Draws samples until k distinct non-identity ones are collected or every
// slot has used its retries. `draw` returns nullopt when the attempt failed
// outright (no retry for that slot).
AugmentResult CollectSamples(const Sentence& sentence,
                             const AugmentationPlan& plan,
                             const std::function<std::optional<Draw>()>& draw,
                             AugmentStats stats = {}) {
  AugmentResult result;
  result.stats = stats;
  for (std::size_t slot = 0; slot < plan.num_samples; ++slot) {
    for (std::size_t attempt = 0; attempt <= plan.max_retries; ++attempt) {
      std::optional<Draw> candidate = draw();
      if (!candidate) break;
      const bool duplicate =
          candidate->tokens == sentence.tokens ||
          std::any_of(result.samples.begin(), result.samples.end(),
                      [&](const AugmentedSentence& s) {
                        return s.tokens == candidate->tokens;
                      });
      if (duplicate) {
        ++result.stats.dedup_drops;
        continue;
      }
      if (plan.strategy == Strategy::kConstituency) {
        result.stats.grafts_applied += candidate->edits.size();
      } else {
        result.stats.replacements_applied += candidate->edits.size();
      }
      ++result.stats.samples_emitted;
      result.samples.push_back(
          {std::move(candidate->tokens),
           {sentence.id, plan.strategy, result.samples.size(),
            std::move(candidate->edits)}});
      break;
    }
  }
  return result;
}

void RequireStrategy(const AugmentationPlan& plan, Strategy expected) {
  if (plan.strategy != expected) {
    throw std::invalid_argument(
        "plan strategy is " + std::string(ToString(plan.strategy)) +
        ", expected " + std::string(ToString(expected)));
  }
}

}  // namespace

std::string_view ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSynonym:
      return "sr";
    case Strategy::kMention:
      return "mr";
    case Strategy::kLanguageModel:
      return "lm";
    case Strategy::kConstituency:
      return "cr";
  }
  return "?";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kSynonym, Strategy::kMention,
                     Strategy::kLanguageModel, Strategy::kConstituency}) {
    if (ToString(s) == name) return s;
  }
  return std::nullopt;
}

void ValidatePlan(const AugmentationPlan& plan) {
  if (plan.num_samples == 0) throw ConfigError("k must be at least 1");
  if (!(plan.replace_ratio >= 0.0 && plan.replace_ratio <= 1.0)) {
    throw ConfigError("replace ratio must be in [0, 1]");
  }
  if ((plan.strategy == Strategy::kLanguageModel ||
       plan.strategy == Strategy::kConstituency) &&
      plan.num_replacements == 0) {
    throw ConfigError("n must be at least 1");
  }
  if (plan.strategy == Strategy::kConstituency && plan.cr_labels.empty()) {
    throw ConfigError("constituency replacement needs at least one label");
  }
  if (plan.top_n == 0) throw ConfigError("top_n must be at least 1");
}

AugmentStats& AugmentStats::operator+=(const AugmentStats& other) {
  sentences_skipped += other.sentences_skipped;
  samples_emitted += other.samples_emitted;
  dedup_drops += other.dedup_drops;
  provider_failures += other.provider_failures;
  replacements_applied += other.replacements_applied;
  grafts_applied += other.grafts_applied;
  empty_pool_mentions += other.empty_pool_mentions;
  targets_without_donor += other.targets_without_donor;
  return *this;
}

std::vector<Tag> ProjectTags(const Tag& original, std::size_t length) {
  if (length == 0) throw std::invalid_argument("ProjectTags: length 0");
  if (original.is_outside()) return std::vector<Tag>(length, Tag::Outside());
  std::vector<Tag> tags(length, Tag::Inside(original.entity_type));
  if (original.kind == TagKind::kB) tags.front().kind = TagKind::kB;
  return tags;
}

// --- Synonym replacement ---------------------------------------------------

Draw DrawSynonymReplacement(const Sentence& sentence,
                            const Thesaurus& thesaurus, double ratio,
                            bool mentions_only, Rng& rng) {
  Draw draw;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& token = sentence.tokens[i];
    // One Bernoulli draw per token keeps stream consumption independent of
    // the thesaurus contents.
    const bool selected = rng.Bernoulli(ratio);
    const std::vector<Thesaurus::Synonym>* synonyms =
        (mentions_only && token.tag.is_outside()) ? nullptr
                                                  : thesaurus.Find(token.text);
    if (!selected || synonyms == nullptr || synonyms->empty()) {
      draw.tokens.push_back(token);
      continue;
    }
    Thesaurus::Synonym replacement = (*synonyms)[rng.Uniform(synonyms->size())];
    if (IsCapitalized(token.text)) Capitalize(replacement.front());
    const std::vector<Tag> tags = ProjectTags(token.tag, replacement.size());
    const std::size_t out_start = draw.tokens.size();
    for (std::size_t j = 0; j < replacement.size(); ++j) {
      draw.tokens.push_back({replacement[j], tags[j]});
    }
    draw.edits.push_back(
        {{i, i + 1},
         {out_start, draw.tokens.size()},
         "sr: '" + token.text + "' -> '" + Join(replacement) + "'"});
  }
  return draw;
}

AugmentResult AugmentSr(const Sentence& sentence, const Thesaurus& thesaurus,
                        const AugmentationPlan& plan, Rng& rng) {
  RequireStrategy(plan, Strategy::kSynonym);
  return CollectSamples(sentence, plan, [&]() -> std::optional<Draw> {
    return DrawSynonymReplacement(sentence, thesaurus, plan.replace_ratio,
                                  plan.mentions_only, rng);
  });
}

// --- Mention replacement ---------------------------------------------------

AugmentResult AugmentMr(const Sentence& sentence, const MentionPool& pool,
                        const AugmentationPlan& plan, Rng& rng) {
  RequireStrategy(plan, Strategy::kMention);
  const std::vector<Mention> mentions = ExtractMentions(sentence);
  std::span<const Token> tokens(sentence.tokens);
  std::size_t empty_pool = 0;

  AugmentResult result =
      CollectSamples(sentence, plan, [&]() -> std::optional<Draw> {
        Draw draw;
        std::size_t cursor = 0;
        for (const Mention& mention : mentions) {
          if (!rng.Bernoulli(plan.replace_ratio)) continue;
          const std::vector<std::string> target = TokenTexts(
              tokens.subspan(mention.span.start, mention.span.width()));
          std::vector<const std::vector<std::string>*> choices;
          if (auto it = pool.find(mention.entity_type); it != pool.end()) {
            for (const auto& candidate : it->second) {
              if (candidate != target && !candidate.empty()) {
                choices.push_back(&candidate);
              }
            }
          }
          if (choices.empty()) {
            ++empty_pool;
            continue;
          }
          const std::vector<std::string>& replacement =
              *choices[rng.Uniform(choices.size())];
          draw.tokens.insert(draw.tokens.end(), tokens.begin() + cursor,
                             tokens.begin() + mention.span.start);
          const std::vector<Tag> tags =
              ProjectTags(Tag::Begin(mention.entity_type), replacement.size());
          const std::size_t out_start = draw.tokens.size();
          for (std::size_t j = 0; j < replacement.size(); ++j) {
            draw.tokens.push_back({replacement[j], tags[j]});
          }
          draw.edits.push_back({mention.span,
                                {out_start, draw.tokens.size()},
                                "mr " + mention.entity_type + ": '" +
                                    Join(target) + "' -> '" +
                                    Join(replacement) + "'"});
          cursor = mention.span.end;
        }
        draw.tokens.insert(draw.tokens.end(), tokens.begin() + cursor,
                           tokens.end());
        return draw;
      });
  result.stats.empty_pool_mentions = empty_pool;
  return result;
}

// --- Masked language model replacement -------------------------------------

AugmentResult AugmentLm(const Sentence& sentence,
                        const FillMaskProvider& provider,
                        const AugmentationPlan& plan, Rng& rng) {
  RequireStrategy(plan, Strategy::kLanguageModel);
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].tag.is_outside()) outside.push_back(i);
  }
  if (outside.empty()) {
    AugmentResult skipped;
    skipped.stats.sentences_skipped = 1;
    return skipped;
  }

  std::size_t failures = 0;
  AugmentResult result =
      CollectSamples(sentence, plan, [&]() -> std::optional<Draw> {
        std::vector<std::size_t> positions;
        for (std::size_t pick : rng.SampleWithoutReplacement(
                 outside.size(), plan.num_replacements)) {
          positions.push_back(outside[pick]);
        }
        std::sort(positions.begin(), positions.end());

        MaskRequest request{TokenTexts(sentence.tokens), positions, plan.top_n};
        MaskResponse response;
        try {
          response = provider.Fill(request);
          ValidateResponse(request, response);
        } catch (const ProviderError&) {
          ++failures;
          return std::nullopt;
        }

        Draw draw{sentence.tokens, {}};
        for (std::size_t m = 0; m < positions.size(); ++m) {
          const std::size_t position = positions[m];
          const std::string& original = sentence.tokens[position].text;
          std::vector<const Candidate*> usable;
          double total = 0.0;
          for (const Candidate& c : response.candidates[m]) {
            if (c.text == original || c.text.empty() || HasWhitespace(c.text)) {
              continue;
            }
            usable.push_back(&c);
            total += c.score;
          }
          if (usable.empty()) continue;

          const Candidate* chosen = usable.back();
          if (total > 0.0) {
            double r = rng.UniformReal() * total;
            for (const Candidate* c : usable) {
              if (r < c->score) {
                chosen = c;
                break;
              }
              r -= c->score;
            }
          } else {
            chosen = usable[rng.Uniform(usable.size())];
          }
          draw.tokens[position].text = chosen->text;
          draw.edits.push_back(
              {{position, position + 1},
               {position, position + 1},
               "lm: '" + original + "' -> '" + chosen->text + "'"});
        }
        return draw;
      });
  result.stats.provider_failures = failures;
  return result;
}

// --- Constituency replacement ----------------------------------------------

std::vector<NodeId> SelectGraftTargets(const ParseTree& tree,
                                       std::vector<NodeId> eligible,
                                       std::size_t count, Rng& rng) {
  std::vector<NodeId> chosen;
  while (chosen.size() < count && !eligible.empty()) {
    const std::size_t pick = rng.Uniform(eligible.size());
    const NodeId node = eligible[pick];
    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(pick));
    const Span& span = tree.node(node).span;
    const bool nested_in_chosen =
        std::any_of(chosen.begin(), chosen.end(),
                    [&](NodeId c) { return tree.node(c).span.Contains(span); });
    if (nested_in_chosen) continue;
    std::erase_if(chosen,
                  [&](NodeId c) { return span.Contains(tree.node(c).span); });
    chosen.push_back(node);
  }
  return chosen;
}

const DonorRef* DrawDonor(const PhraseIndex& index, const Sentence& host,
                          const ParseTree& tree, NodeId target, Rng& rng) {
  const TreeNode& node = tree.node(target);
  const std::vector<DonorRef>& donors =
      index.Donors(PhraseLabel(BaseLabel(node.label)));
  if (donors.empty()) return nullptr;

  const std::vector<std::string> target_text =
      TokenTexts(std::span<const Token>(host.tokens)
                     .subspan(node.span.start, node.span.width()));
  auto usable = [&](const DonorRef& d) {
    return d.sentence_id != host.id && d.tokens != target_text;
  };

  // Rejection sampling is uniform over the usable donors; the exact scan
  // below only runs when most donors are excluded.
  constexpr int kRejectionTries = 32;
  for (int i = 0; i < kRejectionTries; ++i) {
    const DonorRef& d = donors[rng.Uniform(donors.size())];
    if (usable(d)) return &d;
  }
  std::vector<const DonorRef*> filtered;
  for (const DonorRef& d : donors) {
    if (usable(d)) filtered.push_back(&d);
  }
  if (filtered.empty()) return nullptr;
  return filtered[rng.Uniform(filtered.size())];
}

AugmentResult AugmentCr(const Sentence& sentence, const ParseTree& tree,
                        const PhraseIndex& index, const AugmentationPlan& plan,
                        Rng& rng) {
  RequireStrategy(plan, Strategy::kConstituency);
  AugmentResult skipped;
  skipped.stats.sentences_skipped = 1;
  if (!Align(tree, sentence)) return skipped;
  const std::vector<NodeId> eligible =
      EligibleNodes(tree, sentence, plan.cr_labels, plan.require_mention_child);
  if (eligible.empty()) return skipped;

  std::size_t without_donor = 0;
  AugmentResult result =
      CollectSamples(sentence, plan, [&]() -> std::optional<Draw> {
        std::vector<std::pair<NodeId, const DonorRef*>> grafts;
        for (NodeId target :
             SelectGraftTargets(tree, eligible, plan.num_replacements, rng)) {
          const DonorRef* donor = DrawDonor(index, sentence, tree, target, rng);
          if (donor == nullptr) {
            ++without_donor;
            continue;
          }
          grafts.emplace_back(target, donor);
        }
        std::sort(grafts.begin(), grafts.end(),
                  [&](const auto& a, const auto& b) {
                    return tree.node(a.first).span.start >
                           tree.node(b.first).span.start;
                  });

        Draw draw{sentence.tokens, {}};
        for (const auto& [target, donor] : grafts) {
          draw.tokens = Splice(draw.tokens, tree.node(target).span,
                               donor->tokens, donor->tags);
        }
        // Output offsets, left to right.
        std::ptrdiff_t shift = 0;
        for (auto it = grafts.rbegin(); it != grafts.rend(); ++it) {
          const auto& [target, donor] = *it;
          const Span& span = tree.node(target).span;
          const std::size_t out_start = span.start + shift;
          draw.edits.push_back({span,
                                {out_start, out_start + donor->tokens.size()},
                                "cr " + donor->label.str() + ": '" +
                                    SpanText(sentence.tokens, span) + "' -> '" +
                                    Join(donor->tokens) + "' (donor sentence " +
                                    std::to_string(donor->sentence_id) + ")"});
          shift += static_cast<std::ptrdiff_t>(donor->tokens.size()) -
                   static_cast<std::ptrdiff_t>(span.width());
        }
        return draw;
      });
  result.stats.targets_without_donor = without_donor;
  return result;
}

}  // namespace grafter
