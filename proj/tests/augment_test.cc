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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "grafter/conll.h"
#include "grafter/errors.h"
#include "support/fuzz.h"
#include "support/oracles.h"

namespace grafter {
namespace {

namespace oracle = testing::oracle;

Sentence MakeSentence(std::vector<std::pair<std::string, std::string>> items,
                      std::size_t id = 0) {
  Sentence sentence{id, {}};
  for (auto& [text, tag] : items) {
    sentence.tokens.push_back({text, *ParseTag(tag)});
  }
  return sentence;
}

std::string Text(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) out += (out.empty() ? "" : " ") + t.text;
  return out;
}

AugmentationPlan Plan(Strategy strategy) {
  AugmentationPlan plan;
  plan.strategy = strategy;
  return plan;
}

std::multiset<std::string> MentionTypes(std::span<const Token> tokens) {
  std::multiset<std::string> types;
  for (const Token& t : tokens) {
    if (t.tag.kind == TagKind::kB) types.insert(t.tag.entity_type);
  }
  return types;
}

void ExpectDistinctAndValid(const Sentence& source,
                            const AugmentResult& result) {
  for (std::size_t i = 0; i < result.samples.size(); ++i) {
    const AugmentedSentence& s = result.samples[i];
    std::vector<Tag> tags;
    for (const Token& t : s.tokens) tags.push_back(t.tag);
    EXPECT_TRUE(oracle::BioValid(tags));
    EXPECT_NE(s.tokens, source.tokens);
    EXPECT_EQ(s.provenance.source_id, source.id);
    EXPECT_EQ(s.provenance.sample_index, i);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_NE(s.tokens, result.samples[j].tokens);
    }
    for (const Edit& e : s.provenance.edits) {
      EXPECT_LE(e.source.end, source.tokens.size());
      EXPECT_LE(e.output.end, s.tokens.size());
      EXPECT_LE(e.source.start, e.source.end);
    }
  }
}

class FixedProvider : public FillMaskProvider {
 public:
  explicit FixedProvider(std::vector<Candidate> candidates)
      : candidates_(std::move(candidates)) {}
  MaskResponse Fill(const MaskRequest& request) const override {
    std::lock_guard<std::mutex> lock(mutex_);
    requests_.push_back(request);
    return MaskResponse{std::vector<std::vector<Candidate>>(
        request.mask_positions.size(), candidates_)};
  }
  std::vector<MaskRequest> requests() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return requests_;
  }

 private:
  std::vector<Candidate> candidates_;
  mutable std::mutex mutex_;
  mutable std::vector<MaskRequest> requests_;
};

class FailingProvider : public FillMaskProvider {
 public:
  MaskResponse Fill(const MaskRequest&) const override {
    throw ProviderError("connection refused");
  }
};

// --- ProjectTags ------------------------------------------------------------

TEST(ProjectTagsTest, Examples) {
  EXPECT_EQ(ProjectTags(Tag::Begin("PROBLEM"), 3),
            (std::vector<Tag>{Tag::Begin("PROBLEM"), Tag::Inside("PROBLEM"),
                              Tag::Inside("PROBLEM")}));
  EXPECT_EQ(ProjectTags(Tag::Inside("TEST"), 2),
            (std::vector<Tag>{Tag::Inside("TEST"), Tag::Inside("TEST")}));
  EXPECT_EQ(ProjectTags(Tag::Outside(), 1), (std::vector<Tag>{Tag::Outside()}));
  EXPECT_THROW(ProjectTags(Tag::Outside(), 0), std::invalid_argument);
}

// --- Synonym replacement ----------------------------------------------------

TEST(AugmentSrTest, ZeroRatioYieldsNothing) {
  Thesaurus thesaurus;
  thesaurus.Add("workup", {"medical", "checkup"});
  const Sentence s = MakeSentence({{"a", "O"}, {"workup", "B-TEST"}});
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.replace_ratio = 0.0;
  plan.num_samples = 5;
  Rng rng(1);
  const AugmentResult result = AugmentSr(s, thesaurus, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.dedup_drops, 5u * (plan.max_retries + 1));
}

TEST(AugmentSrTest, MultiwordSynonymOnMentionStart) {
  Thesaurus thesaurus;
  thesaurus.Add("workup", {"medical", "checkup"});
  const Sentence s = MakeSentence(
      {{"She", "O"}, {"had", "O"}, {"a", "O"}, {"workup", "B-TEST"}});
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.replace_ratio = 1.0;
  Rng rng(1);
  const AugmentResult result = AugmentSr(s, thesaurus, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  const auto& tokens = result.samples[0].tokens;
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[3], (Token{"medical", Tag::Begin("TEST")}));
  EXPECT_EQ(tokens[4], (Token{"checkup", Tag::Inside("TEST")}));
  ASSERT_EQ(result.samples[0].provenance.edits.size(), 1u);
  EXPECT_EQ(result.samples[0].provenance.edits[0].source, (Span{3, 4}));
  EXPECT_EQ(result.samples[0].provenance.edits[0].output, (Span{3, 5}));
}

TEST(AugmentSrTest, InsideTokenProjectsToInside) {
  Thesaurus thesaurus;
  thesaurus.Add("monitor", {"cardiac", "recorder"});
  const Sentence s =
      MakeSentence({{"Holter", "B-TEST"}, {"monitor", "I-TEST"}, {"x", "O"}});
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.replace_ratio = 1.0;
  Rng rng(2);
  const auto result = AugmentSr(s, thesaurus, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(ToString(result.samples[0].tokens[1].tag), "I-TEST");
  EXPECT_EQ(ToString(result.samples[0].tokens[2].tag), "I-TEST");
}

TEST(AugmentSrTest, CapitalizationIsRestored) {
  Thesaurus thesaurus;
  thesaurus.Add("workup", {"medical", "checkup"});
  const Sentence s = MakeSentence({{"Workup", "O"}, {"done", "O"}});
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.replace_ratio = 1.0;
  Rng rng(3);
  const auto result = AugmentSr(s, thesaurus, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(Text(result.samples[0].tokens), "Medical checkup done");
}

TEST(AugmentSrTest, MentionsOnlyLeavesOutsideTokens) {
  Thesaurus thesaurus;
  thesaurus.Add("had", {"underwent"});
  thesaurus.Add("workup", {"examination"});
  const Sentence s = MakeSentence({{"had", "O"}, {"workup", "B-TEST"}});
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.replace_ratio = 1.0;
  plan.mentions_only = true;
  Rng rng(4);
  const auto result = AugmentSr(s, thesaurus, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(Text(result.samples[0].tokens), "had examination");
}

// Every token has an entry, so each position is replaced exactly when its
// Bernoulli draw succeeds.
TEST(AugmentSrTest, PerTokenSelectionIsBernoulli) {
  Thesaurus thesaurus;
  Sentence s;
  for (int i = 0; i < 8; ++i) {
    const std::string word = "w" + std::to_string(i);
    thesaurus.Add(word, {"syn" + std::to_string(i)});
    s.tokens.push_back({word, Tag::Outside()});
  }
  constexpr int kTrials = 10000;
  constexpr double kRatio = 0.3;
  std::vector<int> replaced(s.tokens.size(), 0);
  Rng rng(99);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Draw d = DrawSynonymReplacement(s, thesaurus, kRatio, false, rng);
    for (const Edit& e : d.edits) ++replaced[e.source.start];
  }
  const double sigma = std::sqrt(kTrials * kRatio * (1 - kRatio));
  for (int count : replaced) {
    EXPECT_LE(std::abs(count - kTrials * kRatio), 3 * sigma);
  }
}

TEST(AugmentSrTest, FuzzedOutputsKeepMentionCount) {
  testing::Fuzzer fuzzer(8);
  Thesaurus thesaurus;
  for (const char* w : {"had", "fever", "pain", "knee", "monitor", "MRI"}) {
    thesaurus.Add(w, {"alpha", "beta"});
    thesaurus.Add(w, {"gamma"});
  }
  AugmentationPlan plan = Plan(Strategy::kSynonym);
  plan.num_samples = 5;
  for (std::size_t i = 0; i < 500; ++i) {
    const Sentence s = fuzzer.RandomSentence(i, 1, 15);
    Rng rng = Rng::ForSentence(3, i);
    const AugmentResult result = AugmentSr(s, thesaurus, plan, rng);
    ExpectDistinctAndValid(s, result);
    for (const auto& sample : result.samples) {
      EXPECT_EQ(ExtractMentions({0, sample.tokens}).size(),
                ExtractMentions(s).size());
    }
  }
}

// --- Mention replacement ----------------------------------------------------

TEST(AugmentMrTest, ReplacesWithSameTypeMention) {
  const MentionPool pool = {{"PROBLEM", {{"myelopathy"}, {"C5-6"}}}};
  const Sentence s =
      MakeSentence({{"She", "O"}, {"has", "O"}, {"myelopathy", "B-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kMention);
  plan.replace_ratio = 1.0;
  Rng rng(1);
  const auto result = AugmentMr(s, pool, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(result.samples[0].tokens[2],
            (Token{"C5-6", Tag::Begin("PROBLEM")}));
}

TEST(AugmentMrTest, MultiTokenReplacementIsProjected) {
  const MentionPool pool = {{"TEST", {{"Holter", "monitor"}, {"MRI"}}}};
  const Sentence s = MakeSentence({{"MRI", "B-TEST"}, {"done", "O"}});
  AugmentationPlan plan = Plan(Strategy::kMention);
  plan.replace_ratio = 1.0;
  Rng rng(1);
  const auto result = AugmentMr(s, pool, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(Text(result.samples[0].tokens), "Holter monitor done");
  EXPECT_EQ(ToString(result.samples[0].tokens[1].tag), "I-TEST");
}

TEST(AugmentMrTest, ZeroRatioYieldsNothing) {
  const MentionPool pool = {{"PROBLEM", {{"a"}, {"b"}}}};
  const Sentence s = MakeSentence({{"a", "B-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kMention);
  plan.replace_ratio = 0.0;
  Rng rng(1);
  EXPECT_TRUE(AugmentMr(s, pool, plan, rng).samples.empty());
}

TEST(AugmentMrTest, EmptyPoolAfterExclusionLeavesMention) {
  const MentionPool pool = {{"PROBLEM", {{"COPD"}, {"COPD"}}}};
  const Sentence s = MakeSentence({{"COPD", "B-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kMention);
  plan.replace_ratio = 1.0;
  plan.max_retries = 0;
  Rng rng(1);
  const auto result = AugmentMr(s, pool, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.empty_pool_mentions, 1u);
}

TEST(AugmentMrTest, FuzzedOutputsPreserveEntityTypes) {
  testing::Fuzzer fuzzer(12);
  Corpus corpus;
  for (std::size_t i = 0; i < 300; ++i) {
    corpus.sentences.push_back(fuzzer.RandomSentence(i, 1, 15));
  }
  const MentionPool pool = BuildMentionPool(corpus);
  AugmentationPlan plan = Plan(Strategy::kMention);
  plan.num_samples = 5;
  for (const Sentence& s : corpus.sentences) {
    Rng rng = Rng::ForSentence(1, s.id);
    const auto result = AugmentMr(s, pool, plan, rng);
    ExpectDistinctAndValid(s, result);
    for (const auto& sample : result.samples) {
      EXPECT_EQ(MentionTypes(sample.tokens), MentionTypes(s.tokens));
    }
  }
}

// --- Masked language model replacement -------------------------------------

TEST(AugmentLmTest, AllMentionSentenceYieldsNothing) {
  FixedProvider provider({{"the", 1.0}});
  const Sentence s =
      MakeSentence({{"COPD", "B-PROBLEM"}, {"flare", "I-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  Rng rng(1);
  const auto result = AugmentLm(s, provider, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.sentences_skipped, 1u);
  EXPECT_TRUE(provider.requests().empty());
}

TEST(AugmentLmTest, StubProviderFillsEveryMask) {
  FixedProvider provider({{"the", 1.0}});
  const Sentence s =
      MakeSentence({{"She", "O"}, {"had", "O"}, {"COPD", "B-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  plan.num_replacements = 5;
  Rng rng(1);
  const auto result = AugmentLm(s, provider, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(Text(result.samples[0].tokens), "the the COPD");
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    EXPECT_EQ(result.samples[0].tokens[i].tag, s.tokens[i].tag);
  }
  ASSERT_EQ(provider.requests().size(), 1u);
  EXPECT_EQ(provider.requests()[0].mask_positions,
            (std::vector<std::size_t>{0, 1}));
}

TEST(AugmentLmTest, NeverMasksMentionTokens) {
  FixedProvider provider({{"was", 0.6}, {"she", 0.4}});
  const Sentence s =
      MakeSentence({{"She", "O"}, {"had", "O"}, {"COPD", "B-PROBLEM"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  plan.num_replacements = 1;
  plan.num_samples = 1;
  plan.max_retries = 0;
  Rng rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto result = AugmentLm(s, provider, plan, rng);
    for (const auto& sample : result.samples) {
      EXPECT_EQ(sample.tokens[2], s.tokens[2]);
    }
  }
  for (const MaskRequest& r : provider.requests()) {
    ASSERT_EQ(r.mask_positions.size(), 1u);
    EXPECT_NE(r.mask_positions[0], 2u);
  }
}

TEST(AugmentLmTest, OriginalTokenIsNeverChosen) {
  FixedProvider provider({{"had", 0.9}, {"got", 0.1}});
  const Sentence s = MakeSentence({{"had", "O"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  Rng rng(1);
  const auto result = AugmentLm(s, provider, plan, rng);
  ASSERT_EQ(result.samples.size(), 1u);
  EXPECT_EQ(result.samples[0].tokens[0].text, "got");
}

TEST(AugmentLmTest, SamplingFollowsScores) {
  FixedProvider provider({{"a", 0.75}, {"b", 0.25}});
  const Sentence s = MakeSentence({{"x", "O"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  plan.max_retries = 0;
  Rng rng(17);
  int a = 0;
  constexpr int kTrials = 4000;
  for (int i = 0; i < kTrials; ++i) {
    const auto result = AugmentLm(s, provider, plan, rng);
    a += result.samples.at(0).tokens[0].text == "a" ? 1 : 0;
  }
  const double sigma = std::sqrt(kTrials * 0.75 * 0.25);
  EXPECT_LE(std::abs(a - kTrials * 0.75), 3 * sigma);
}

TEST(AugmentLmTest, ProviderFailureSkipsSample) {
  FailingProvider provider;
  const Sentence s = MakeSentence({{"She", "O"}, {"had", "O"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  plan.num_samples = 3;
  Rng rng(1);
  const auto result = AugmentLm(s, provider, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.provider_failures, 3u);
}

TEST(AugmentLmTest, MalformedResponseCountsAsFailure) {
  FixedProvider provider({{"two words", 1.0}});
  const Sentence s = MakeSentence({{"She", "O"}});
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  Rng rng(1);
  EXPECT_EQ(AugmentLm(s, provider, plan, rng).stats.provider_failures, 1u);
}

TEST(AugmentLmTest, UnigramProviderKeepsTagsAndOutsideOnly) {
  testing::Fuzzer fuzzer(13);
  Corpus corpus;
  for (std::size_t i = 0; i < 200; ++i) {
    corpus.sentences.push_back(fuzzer.RandomSentence(i, 1, 15));
  }
  const UnigramProvider provider(corpus);
  AugmentationPlan plan = Plan(Strategy::kLanguageModel);
  plan.num_samples = 5;
  plan.num_replacements = 3;
  for (const Sentence& s : corpus.sentences) {
    Rng rng = Rng::ForSentence(2, s.id);
    const auto result = AugmentLm(s, provider, plan, rng);
    ExpectDistinctAndValid(s, result);
    for (const auto& sample : result.samples) {
      ASSERT_EQ(sample.tokens.size(), s.tokens.size());
      std::size_t changed = 0;
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        EXPECT_EQ(sample.tokens[i].tag, s.tokens[i].tag);
        if (!s.tokens[i].tag.is_outside()) {
          EXPECT_EQ(sample.tokens[i].text, s.tokens[i].text);
        }
        changed += sample.tokens[i].text != s.tokens[i].text ? 1 : 0;
      }
      EXPECT_LE(changed, plan.num_replacements);
    }
  }
}

// --- Constituency replacement ----------------------------------------------

struct Clinical {
  Corpus corpus;
  TreeFile trees;
};

Clinical LoadClinical() {
  return {
      ParseConll(testing::ReadText(testing::FixturePath("clinical.conll")))
          .corpus,
      ReadTreeFile(testing::ReadText(testing::FixturePath("clinical.trees")))};
}

TEST(AugmentCrTest, NounPhraseReplayOnFixture) {
  const Clinical c = LoadClinical();
  AugmentationPlan plan = Plan(Strategy::kConstituency);
  plan.cr_labels = {PhraseLabel("NP")};
  plan.num_samples = 2;
  plan.num_replacements = 1;
  // Donors come from the first three sentences only.
  const Corpus head = Slice(c.corpus, 3);
  const std::span<const std::optional<ParseTree>> head_trees(
      c.trees.trees.data(), 3);
  const PhraseIndex index = BuildPhraseIndex(head, head_trees, plan.cr_labels);
  Rng rng(7);
  const auto result =
      AugmentCr(c.corpus.sentences[0], *c.trees.trees[0], index, plan, rng);
  std::set<std::string> texts;
  for (const auto& sample : result.samples) texts.insert(Text(sample.tokens));
  EXPECT_EQ(texts, (std::set<std::string>{
                       "Dr. Foutchner will arrange for a T2 signal change",
                       "Dr. Foutchner will arrange for 10 beats"}));
  EXPECT_EQ(result.stats.grafts_applied, 2u);
}

TEST(AugmentCrTest, NoEligibleNodesIsSkipped) {
  const Clinical c = LoadClinical();
  AugmentationPlan plan = Plan(Strategy::kConstituency);
  plan.cr_labels = {PhraseLabel("NP")};
  const PhraseIndex index =
      BuildPhraseIndex(c.corpus, c.trees.trees, plan.cr_labels);
  Rng rng(7);
  // "10 beats ." holds no mention.
  const auto result =
      AugmentCr(c.corpus.sentences[2], *c.trees.trees[2], index, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.sentences_skipped, 1u);
}

TEST(AugmentCrTest, SelectedTargetsAreDisjointAndMaximal) {
  testing::AlignedCorpus data = testing::FuzzAlignedCorpus(71, 300, 1, 12);
  const std::set<PhraseLabel> labels = DefaultReplacementLabels();
  Rng rng(3);
  for (const Sentence& s : data.corpus.sentences) {
    const ParseTree& tree = *data.trees[s.id];
    const auto eligible = EligibleNodes(tree, s, labels, false);
    for (std::size_t n : {1u, 3u, 5u}) {
      const auto chosen = SelectGraftTargets(tree, eligible, n, rng);
      EXPECT_LE(chosen.size(), n);
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        EXPECT_NE(std::find(eligible.begin(), eligible.end(), chosen[i]),
                  eligible.end());
        for (std::size_t j = 0; j < i; ++j) {
          EXPECT_FALSE(
              tree.node(chosen[i]).span.Overlaps(tree.node(chosen[j]).span));
        }
      }
      if (chosen.size() < n) {
        for (NodeId e : eligible) {
          EXPECT_TRUE(std::any_of(chosen.begin(), chosen.end(), [&](NodeId c) {
            return tree.node(c).span.Overlaps(tree.node(e).span);
          }));
        }
      }
    }
  }
}

TEST(AugmentCrTest, FuzzedOutputsKeepHostOutsideTargetsAndLengths) {
  testing::AlignedCorpus data = testing::FuzzAlignedCorpus(72, 300, 1, 12);
  AugmentationPlan plan = Plan(Strategy::kConstituency);
  plan.num_samples = 5;
  plan.num_replacements = 3;
  const PhraseIndex index =
      BuildPhraseIndex(data.corpus, data.trees, plan.cr_labels);
  std::size_t produced = 0;
  for (const Sentence& s : data.corpus.sentences) {
    Rng rng = Rng::ForSentence(4, s.id);
    const auto result = AugmentCr(s, *data.trees[s.id], index, plan, rng);
    ExpectDistinctAndValid(s, result);
    for (const auto& sample : result.samples) {
      ++produced;
      std::size_t expected_length = s.tokens.size();
      std::size_t src = 0;
      std::size_t out = 0;
      std::multiset<std::string> expected_types;
      for (const Edit& e : sample.provenance.edits) {
        expected_length = expected_length - e.source.width() + e.output.width();
        // Host tokens between edits are copied verbatim.
        ASSERT_EQ(e.source.start - src, e.output.start - out);
        for (std::size_t k = 0; k < e.source.start - src; ++k) {
          EXPECT_EQ(sample.tokens[out + k], s.tokens[src + k]);
          if (s.tokens[src + k].tag.kind == TagKind::kB) {
            expected_types.insert(s.tokens[src + k].tag.entity_type);
          }
        }
        for (std::size_t k = e.output.start; k < e.output.end; ++k) {
          if (sample.tokens[k].tag.kind == TagKind::kB) {
            expected_types.insert(sample.tokens[k].tag.entity_type);
          }
        }
        src = e.source.end;
        out = e.output.end;
      }
      for (std::size_t k = 0; src + k < s.tokens.size(); ++k) {
        EXPECT_EQ(sample.tokens[out + k], s.tokens[src + k]);
        if (s.tokens[src + k].tag.kind == TagKind::kB) {
          expected_types.insert(s.tokens[src + k].tag.entity_type);
        }
      }
      EXPECT_EQ(sample.tokens.size(), expected_length);
      EXPECT_EQ(MentionTypes(sample.tokens), expected_types);
    }
  }
  EXPECT_GT(produced, 100u);
}

TEST(AugmentCrTest, DonorsComeFromOtherSentencesWithDifferentText) {
  testing::AlignedCorpus data = testing::FuzzAlignedCorpus(73, 100, 1, 10);
  const std::set<PhraseLabel> labels = DefaultReplacementLabels();
  const PhraseIndex index = BuildPhraseIndex(data.corpus, data.trees, labels);
  Rng rng(9);
  for (const Sentence& s : data.corpus.sentences) {
    const ParseTree& tree = *data.trees[s.id];
    for (NodeId target : EligibleNodes(tree, s, labels, false)) {
      for (int i = 0; i < 5; ++i) {
        const DonorRef* d = DrawDonor(index, s, tree, target, rng);
        if (d == nullptr) continue;
        EXPECT_NE(d->sentence_id, s.id);
        EXPECT_EQ(d->label.str(), BaseLabel(tree.node(target).label));
        const Span span = tree.node(target).span;
        std::vector<std::string> target_text;
        for (std::size_t k = span.start; k < span.end; ++k) {
          target_text.push_back(s.tokens[k].text);
        }
        EXPECT_NE(d->tokens, target_text);
      }
    }
  }
}

TEST(AugmentCrTest, MisalignedTreeIsSkipped) {
  const Clinical c = LoadClinical();
  AugmentationPlan plan = Plan(Strategy::kConstituency);
  const PhraseIndex index =
      BuildPhraseIndex(c.corpus, c.trees.trees, plan.cr_labels);
  Rng rng(1);
  const auto result =
      AugmentCr(c.corpus.sentences[1], *c.trees.trees[0], index, plan, rng);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.stats.sentences_skipped, 1u);
}

// --- Plan validation --------------------------------------------------------

TEST(PlanTest, Validation) {
  AugmentationPlan plan;
  EXPECT_NO_THROW(ValidatePlan(plan));
  plan.num_samples = 0;
  EXPECT_THROW(ValidatePlan(plan), ConfigError);
  plan = {};
  plan.replace_ratio = 1.5;
  EXPECT_THROW(ValidatePlan(plan), ConfigError);
  plan = Plan(Strategy::kConstituency);
  plan.cr_labels.clear();
  EXPECT_THROW(ValidatePlan(plan), ConfigError);
  plan = Plan(Strategy::kLanguageModel);
  plan.num_replacements = 0;
  EXPECT_THROW(ValidatePlan(plan), ConfigError);
}

TEST(StrategyTest, NamesRoundTrip) {
  for (Strategy s : {Strategy::kSynonym, Strategy::kMention,
                     Strategy::kLanguageModel, Strategy::kConstituency}) {
    EXPECT_EQ(ParseStrategy(ToString(s)), s);
  }
  EXPECT_FALSE(ParseStrategy("eda"));
}

}  // namespace
}  // namespace grafter
