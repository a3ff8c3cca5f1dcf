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

#include "grafter/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "grafter/conll.h"
#include "grafter/driver.h"
#include "grafter/errors.h"
#include "grafter/log.h"

namespace grafter::cli {

namespace {

constexpr const char* kProviderUrlEnv = "GRAFTER_FILLMASK_URL";

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path);
  out << contents;
  if (!out.flush()) throw ConfigError("failed writing " + path);
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string JoinLabels(const std::set<PhraseLabel>& labels) {
  std::string out;
  for (const PhraseLabel& label : labels) {
    if (!out.empty()) out += ',';
    out += label.str();
  }
  return out;
}

const char* Bool(bool value) { return value ? "true" : "false"; }

std::string SentenceKey(const Sentence& sentence) {
  std::string key;
  for (const Token& token : sentence.tokens) {
    key += token.text;
    key += '\t';
    key += ToString(token.tag);
    key += '\n';
  }
  return key;
}

}  // namespace

std::string RenderManifest(
    const RunConfig& config,
    const std::vector<std::pair<std::string, std::string>>& counters) {
  const AugmentationPlan& plan = config.plan;
  std::ostringstream out;
  out << "seed=" << plan.seed << '\n';
  out << "config.input=" << config.input_path << '\n';
  out << "config.trees=" << config.trees_path << '\n';
  out << "config.thesaurus=" << config.thesaurus_path << '\n';
  out << "config.provider="
      << (config.provider == ProviderKind::kUnigram ? "unigram" : "http")
      << '\n';
  out << "config.provider_url=" << config.provider_url << '\n';
  out << "config.strategy=" << ToString(plan.strategy) << '\n';
  out << "config.k=" << plan.num_samples << '\n';
  out << "config.ratio=" << FormatDouble(plan.replace_ratio) << '\n';
  out << "config.n=" << plan.num_replacements << '\n';
  out << "config.labels=" << JoinLabels(plan.cr_labels) << '\n';
  out << "config.require_mention_child=" << Bool(plan.require_mention_child)
      << '\n';
  out << "config.mentions_only=" << Bool(plan.mentions_only) << '\n';
  out << "config.max_retries=" << plan.max_retries << '\n';
  out << "config.top_n=" << plan.top_n << '\n';
  out << "config.slice="
      << (config.slice ? std::to_string(*config.slice) : std::string("all"))
      << '\n';
  out << "config.lenient=" << Bool(config.lenient) << '\n';
  for (const auto& [key, value] : counters) {
    out << "counters." << key << '=' << value << '\n';
  }
  return out.str();
}

int RunAugment(const RunConfig& config) {
  const AugmentationPlan& plan = config.plan;
  try {
    ValidatePlan(plan);
    if (config.output_path.empty()) throw ConfigError("--output is required");
    if (config.slice && *config.slice == 0) {
      throw ConfigError("--slice must be at least 1");
    }
    if (config.jobs == 0) throw ConfigError("--jobs must be at least 1");

    ConllReadResult read =
        ParseConll(ReadFile(config.input_path), {.lenient = config.lenient});
    if (read.multi_column_lines > 0) {
      LogWarning(std::to_string(read.multi_column_lines) +
                 " lines had extra columns; only token and tag were kept");
    }
    if (read.repairs > 0) {
      LogWarning(std::to_string(read.repairs) + " I- tags repaired to B-");
    }
    Corpus corpus = config.slice ? Slice(read.corpus, *config.slice)
                                 : std::move(read.corpus);

    AugmentResources resources;
    Thesaurus thesaurus;
    MentionPool pool;
    std::unique_ptr<FillMaskProvider> provider;
    TreeFile trees;
    PhraseIndex index;
    switch (plan.strategy) {
      case Strategy::kSynonym:
        if (config.thesaurus_path.empty()) {
          throw ConfigError("--strategy sr requires --thesaurus");
        }
        thesaurus = ParseThesaurus(ReadFile(config.thesaurus_path));
        resources.thesaurus = &thesaurus;
        break;
      case Strategy::kMention:
        pool = BuildMentionPool(corpus);
        resources.mention_pool = &pool;
        break;
      case Strategy::kLanguageModel:
        if (config.provider == ProviderKind::kUnigram) {
          provider = std::make_unique<UnigramProvider>(corpus);
        } else {
          if (config.provider_url.empty()) {
            throw ConfigError(
                "--strategy lm requires --provider-url (or "
                "GRAFTER_FILLMASK_URL)"
                " or --provider unigram");
          }
          provider = std::make_unique<HttpFillMaskClient>(config.provider_url);
        }
        resources.provider = provider.get();
        break;
      case Strategy::kConstituency:
        if (config.trees_path.empty()) {
          throw ConfigError("--strategy cr requires --trees");
        }
        trees = ReadTreeFile(ReadFile(config.trees_path));
        for (const auto& [line, message] : trees.errors) {
          LogWarning("tree line " + std::to_string(line) + ": " + message);
        }
        if (trees.trees.size() < corpus.sentences.size()) {
          LogWarning("tree file has " + std::to_string(trees.trees.size()) +
                     " lines for " + std::to_string(corpus.sentences.size()) +
                     " sentences");
        }
        index = BuildPhraseIndex(corpus, trees.trees, plan.cr_labels);
        resources.trees = trees.trees;
        resources.phrase_index = &index;
        break;
    }

    CorpusAugmentation result =
        AugmentCorpus(corpus, resources, plan, config.jobs);
    const AugmentStats& stats = result.stats;
    const std::size_t augmented = result.provenance.size();
    std::vector<std::pair<std::string, std::string>> counters = {
        {"input_sentences", std::to_string(corpus.sentences.size())},
        {"augmented_sentences", std::to_string(augmented)},
        {"output_sentences", std::to_string(result.corpus.sentences.size())},
        {"sentences_skipped", std::to_string(stats.sentences_skipped)},
        {"missing_trees", std::to_string(result.missing_trees)},
        {"unaligned_trees", std::to_string(result.unaligned_trees)},
        {"dedup_drops", std::to_string(stats.dedup_drops)},
        {"provider_failures", std::to_string(stats.provider_failures)},
        {"replacements_applied", std::to_string(stats.replacements_applied)},
        {"grafts_applied", std::to_string(stats.grafts_applied)},
        {"empty_pool_mentions", std::to_string(stats.empty_pool_mentions)},
        {"targets_without_donor", std::to_string(stats.targets_without_donor)},
        {"phrase_index_donors", std::to_string(index.size())},
        {"lenient_repairs", std::to_string(read.repairs)},
    };

    const std::string manifest_path = config.manifest_path.empty()
                                          ? config.output_path + ".manifest"
                                          : config.manifest_path;
    WriteFile(config.output_path, WriteConll(result.corpus));
    WriteFile(manifest_path, RenderManifest(config, counters));
    LogInfo("wrote " + std::to_string(result.corpus.sentences.size()) +
            " sentences (" + std::to_string(augmented) + " augmented) to " +
            config.output_path);
    return kExitOk;
  } catch (const ConfigError& e) {
    LogError(e.what());
    return kExitConfig;
  } catch (const ParseError& e) {
    LogError(config.input_path + ": " + e.what());
    return kExitValidation;
  } catch (const ValidationError& e) {
    LogError(config.input_path + ": " + e.what());
    return kExitValidation;
  }
}

StatsTable ComputeStats(const TreeFile& trees,
                        const std::vector<std::size_t>& slices) {
  StatsTable table;
  std::vector<std::size_t> sizes = slices;
  if (sizes.empty()) {
    sizes.push_back(trees.trees.size());
    table.columns.push_back("all");
  } else {
    for (std::size_t size : sizes)
      table.columns.push_back(std::to_string(size));
  }

  std::map<std::string, std::vector<std::size_t>> counts;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    PhraseCountMap slice_counts;
    const std::size_t limit = std::min(sizes[c], trees.trees.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (trees.trees[i]) AddPhraseCounts(*trees.trees[i], slice_counts);
    }
    for (const auto& [label, count] : slice_counts) {
      auto& row = counts[label];
      row.resize(sizes.size(), 0);
      row[c] = count;
    }
  }
  for (auto& [label, row] : counts) table.rows.emplace_back(label, row);
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const auto& a, const auto& b) {
                     return a.second.back() > b.second.back();
                   });
  return table;
}

std::string RenderStatsText(const StatsTable& table) {
  std::size_t label_width = 6;  // "Phrase"
  for (const auto& row : table.rows) {
    label_width = std::max(label_width, row.first.size());
  }
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::size_t width = table.columns[c].size();
    for (const auto& row : table.rows) {
      width = std::max(width, std::to_string(row.second[c]).size());
    }
    widths.push_back(width);
  }
  auto pad_left = [](const std::string& text, std::size_t width) {
    return std::string(width - std::min(width, text.size()), ' ') + text;
  };
  std::ostringstream out;
  out << "Phrase" << std::string(label_width - 6, ' ');
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << "  " << pad_left(table.columns[c], widths[c]);
  }
  out << '\n';
  for (const auto& [label, values] : table.rows) {
    out << label << std::string(label_width - label.size(), ' ');
    for (std::size_t c = 0; c < values.size(); ++c) {
      out << "  " << pad_left(std::to_string(values[c]), widths[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string RenderStatsTsv(const StatsTable& table) {
  std::ostringstream out;
  out << "label";
  for (const std::string& column : table.columns) out << '\t' << column;
  out << '\n';
  for (const auto& [label, values] : table.rows) {
    out << label;
    for (std::size_t value : values) out << '\t' << value;
    out << '\n';
  }
  return out.str();
}

ValidationReport Validate(std::string_view conll_text,
                          const std::optional<std::string>& tree_text,
                          const std::set<PhraseLabel>& labels,
                          bool require_mention_child) {
  ValidationReport report;
  Corpus corpus;
  try {
    corpus = ReadConllUnchecked(conll_text).corpus;
  } catch (const ParseError& e) {
    ++report.violations;
    report.lines.push_back(std::string("parse_error ") + e.what());
    return report;
  }

  std::unordered_map<std::string, std::size_t> first_seen;
  for (const Sentence& sentence : corpus.sentences) {
    for (const BioViolation& v : FindBioViolations(sentence)) {
      ++report.violations;
      report.lines.push_back(
          "bio_violation sentence=" + std::to_string(v.sentence_id) +
          " token=" + std::to_string(v.token_index) + " " + v.message);
    }
    auto [it, inserted] =
        first_seen.emplace(SentenceKey(sentence), sentence.id);
    if (!inserted) {
      ++report.duplicates;
      report.lines.push_back(
          "duplicate sentence=" + std::to_string(sentence.id) +
          " first=" + std::to_string(it->second));
    }
  }

  if (tree_text) {
    const TreeFile trees = ReadTreeFile(*tree_text);
    for (const auto& [line, message] : trees.errors) {
      ++report.tree_parse_errors;
      report.lines.push_back("tree_parse_error line=" + std::to_string(line) +
                             " " + message);
    }
    for (const Sentence& sentence : corpus.sentences) {
      if (sentence.id >= trees.trees.size() || !trees.trees[sentence.id]) {
        continue;
      }
      const ParseTree& tree = *trees.trees[sentence.id];
      if (Alignment a = Align(tree, sentence); !a) {
        ++report.alignment_failures;
        report.lines.push_back(
            "alignment_failure sentence=" + std::to_string(sentence.id) +
            " index=" + std::to_string(a.divergent_index) + " " + a.message);
        continue;
      }
      if (IsBioValid(sentence) &&
          EligibleNodes(tree, sentence, labels, require_mention_child)
              .empty()) {
        ++report.without_eligible_nodes;
        report.lines.push_back("no_eligible_nodes sentence=" +
                               std::to_string(sentence.id));
      }
    }
  }
  return report;
}

std::string RenderReport(const ValidationReport& report) {
  std::ostringstream out;
  for (const std::string& line : report.lines) out << line << '\n';
  out << report.violations << " violations, " << report.alignment_failures
      << " alignment failures, " << report.tree_parse_errors
      << " tree parse errors, " << report.duplicates << " duplicates, "
      << report.without_eligible_nodes << " sentences without eligible nodes\n";
  return out.str();
}

int Main(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Data augmentation for BIO-tagged NER corpora"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Only log errors");

  RunConfig config;
  std::string strategy = "sr";
  std::string labels = "NP,VP,ADJP,ADVP,PP";
  std::string provider = "http";
  bool no_mention_child = false;
  std::size_t slice = 0;
  CLI::App* augment = app.add_subcommand("augment", "Augment a CoNLL corpus");
  augment->add_option("--input,-i", config.input_path, "CoNLL input")
      ->required();
  augment->add_option("--output,-o", config.output_path, "CoNLL output")
      ->required();
  augment->add_option("--manifest", config.manifest_path,
                      "Manifest path (default: <output>.manifest)");
  augment->add_option("--strategy", strategy, "sr, mr, lm or cr")
      ->check(CLI::IsMember({"sr", "mr", "lm", "cr"}));
  augment->add_option("--k", config.plan.num_samples, "Samples per sentence");
  augment->add_option("--ratio", config.plan.replace_ratio,
                      "Replacement probability (sr, mr)");
  augment->add_option("--n", config.plan.num_replacements,
                      "Masked tokens (lm) or replaced phrases (cr) per sample");
  augment->add_option("--labels", labels, "Phrase labels for cr");
  augment->add_option("--seed", config.plan.seed, "Random seed");
  augment->add_option("--slice", slice, "Use only the first N sentences");
  augment->add_option("--jobs", config.jobs, "Worker threads");
  augment->add_flag("--mentions-only", config.plan.mentions_only,
                    "sr: replace only tokens inside mentions");
  augment->add_flag("--no-mention-child", no_mention_child,
                    "cr: do not require a mention inside the target");
  augment->add_flag("--lenient", config.lenient,
                    "Repair stray I- tags instead of failing");
  augment->add_option("--max-retries", config.plan.max_retries,
                      "Redraws per sample after a duplicate");
  augment->add_option("--top-n", config.plan.top_n,
                      "lm: candidates requested per mask");
  augment->add_option("--trees", config.trees_path, "cr: PTB tree file");
  augment->add_option("--thesaurus", config.thesaurus_path, "sr: synonym TSV");
  augment->add_option("--provider", provider, "lm: http or unigram")
      ->check(CLI::IsMember({"http", "unigram"}));
  augment
      ->add_option("--provider-url", config.provider_url,
                   "lm: fill-mask service base URL")
      ->envname(kProviderUrlEnv);

  std::string stats_trees;
  std::vector<std::size_t> stats_slices;
  std::string stats_format = "text";
  CLI::App* stats = app.add_subcommand("stats", "Phrase label counts");
  stats->add_option("--trees", stats_trees, "PTB tree file")->required();
  stats->add_option("--slice", stats_slices, "Slice sizes, e.g. 50,150,500")
      ->delimiter(',');
  stats->add_option("--format", stats_format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::string validate_input;
  std::string validate_trees;
  std::string validate_labels = "NP,VP,ADJP,ADVP,PP";
  bool validate_no_mention_child = false;
  CLI::App* validate = app.add_subcommand("validate", "Audit a corpus");
  validate->add_option("--input,-i", validate_input, "CoNLL input")->required();
  validate->add_option("--trees", validate_trees, "PTB tree file");
  validate->add_option("--labels", validate_labels,
                       "Labels for the eligibility check");
  validate->add_flag("--no-mention-child", validate_no_mention_child,
                     "Do not require a mention inside eligible nodes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (!err.str().empty()) std::cerr << err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (quiet) SetLogLevel(LogLevel::kError);

  if (augment->parsed()) {
    config.plan.strategy = *ParseStrategy(strategy);
    config.plan.cr_labels = ParseLabelList(labels);
    config.plan.require_mention_child = !no_mention_child;
    config.provider =
        provider == "unigram" ? ProviderKind::kUnigram : ProviderKind::kHttp;
    if (augment->count("--slice") > 0) config.slice = slice;
    return RunAugment(config);
  }

  if (stats->parsed()) {
    try {
      const TreeFile trees = ReadTreeFile(ReadFile(stats_trees));
      for (const auto& [line, message] : trees.errors) {
        LogWarning(stats_trees + ":" + std::to_string(line) + ": " + message);
      }
      if (!trees.errors.empty()) {
        LogWarning(std::to_string(trees.errors.size()) +
                   " tree lines failed to parse");
      }
      const StatsTable table = ComputeStats(trees, stats_slices);
      out << (stats_format == "tsv" ? RenderStatsTsv(table)
                                    : RenderStatsText(table));
      return kExitOk;
    } catch (const ConfigError& e) {
      LogError(e.what());
      return kExitConfig;
    }
  }

  try {
    std::optional<std::string> tree_text;
    if (!validate_trees.empty()) tree_text = ReadFile(validate_trees);
    const ValidationReport report =
        Validate(ReadFile(validate_input), tree_text,
                 ParseLabelList(validate_labels), !validate_no_mention_child);
    out << RenderReport(report);
    return report.violations == 0 ? kExitOk : kExitValidation;
  } catch (const ConfigError& e) {
    LogError(e.what());
    return kExitConfig;
  }
}

}  // namespace grafter::cli
