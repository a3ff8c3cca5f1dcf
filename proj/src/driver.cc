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

#include "grafter/driver.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "grafter/errors.h"
#include "grafter/log.h"

namespace grafter {

namespace {

void CheckResources(const AugmentResources& resources,
                    const AugmentationPlan& plan) {
  switch (plan.strategy) {
    case Strategy::kSynonym:
      if (resources.thesaurus == nullptr) {
        throw ConfigError("synonym replacement needs a thesaurus");
      }
      break;
    case Strategy::kMention:
      if (resources.mention_pool == nullptr) {
        throw ConfigError("mention replacement needs a mention pool");
      }
      break;
    case Strategy::kLanguageModel:
      if (resources.provider == nullptr) {
        throw ConfigError("language model replacement needs a provider");
      }
      break;
    case Strategy::kConstituency:
      if (resources.phrase_index == nullptr || resources.trees.empty()) {
        throw ConfigError(
            "constituency replacement needs parse trees and a phrase index");
      }
      break;
  }
}

struct SentenceOutcome {
  AugmentResult result;
  bool missing_tree = false;
  bool unaligned = false;
};

SentenceOutcome AugmentOne(const Sentence& sentence,
                           const AugmentResources& resources,
                           const AugmentationPlan& plan) {
  Rng rng = Rng::ForSentence(plan.seed, sentence.id);
  SentenceOutcome outcome;
  switch (plan.strategy) {
    case Strategy::kSynonym:
      outcome.result = AugmentSr(sentence, *resources.thesaurus, plan, rng);
      break;
    case Strategy::kMention:
      outcome.result = AugmentMr(sentence, *resources.mention_pool, plan, rng);
      break;
    case Strategy::kLanguageModel:
      outcome.result = AugmentLm(sentence, *resources.provider, plan, rng);
      break;
    case Strategy::kConstituency: {
      if (sentence.id >= resources.trees.size() ||
          !resources.trees[sentence.id]) {
        outcome.missing_tree = true;
        outcome.result.stats.sentences_skipped = 1;
        break;
      }
      const ParseTree& tree = *resources.trees[sentence.id];
      if (Alignment alignment = Align(tree, sentence); !alignment) {
        LogWarning("sentence " + std::to_string(sentence.id) +
                   " skipped for CR: " + alignment.message);
        outcome.unaligned = true;
        outcome.result.stats.sentences_skipped = 1;
        break;
      }
      outcome.result =
          AugmentCr(sentence, tree, *resources.phrase_index, plan, rng);
      break;
    }
  }
  return outcome;
}

}  // namespace

CorpusAugmentation AugmentCorpus(const Corpus& corpus,
                                 const AugmentResources& resources,
                                 const AugmentationPlan& plan,
                                 std::size_t jobs) {
  ValidatePlan(plan);
  CheckResources(resources, plan);
  const std::size_t n = corpus.sentences.size();
  std::vector<SentenceOutcome> outcomes(n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        outcomes[i] = AugmentOne(corpus.sentences[i], resources, plan);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& thread : threads) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  CorpusAugmentation out;
  out.corpus.sentences = corpus.sentences;
  for (SentenceOutcome& outcome : outcomes) {
    out.stats += outcome.result.stats;
    out.missing_trees += outcome.missing_tree ? 1 : 0;
    out.unaligned_trees += outcome.unaligned ? 1 : 0;
    for (AugmentedSentence& sample : outcome.result.samples) {
      if (!IsBioValid(sample.tokens)) {
        throw ValidationError("augmentation of sentence " +
                              std::to_string(sample.provenance.source_id) +
                              " produced an invalid BIO sequence");
      }
      out.corpus.sentences.push_back({0, std::move(sample.tokens)});
      out.provenance.push_back(std::move(sample.provenance));
    }
  }
  Renumber(out.corpus);
  if (out.stats.empty_pool_mentions > 0) {
    LogInfo(std::to_string(out.stats.empty_pool_mentions) +
            " selected mentions had no same-type replacement");
  }
  if (out.missing_trees > 0) {
    LogInfo(std::to_string(out.missing_trees) +
            " sentences have no parse and were skipped for CR");
  }
  if (out.stats.provider_failures > 0) {
    LogWarning(std::to_string(out.stats.provider_failures) +
               " fill-mask requests failed; those samples were skipped");
  }
  return out;
}

}  // namespace grafter
