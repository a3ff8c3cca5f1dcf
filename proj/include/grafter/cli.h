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

#ifndef GRAFTER_CLI_H_
#define GRAFTER_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grafter/augment.h"
#include "grafter/treebank.h"

namespace grafter::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitValidation = 3;

enum class ProviderKind { kHttp, kUnigram };

struct RunConfig {
  std::string input_path;
  std::string trees_path;
  std::string thesaurus_path;
  ProviderKind provider = ProviderKind::kHttp;
  std::string provider_url;
  std::string output_path;
  std::string manifest_path;  // defaults to <output>.manifest
  std::optional<std::size_t> slice;
  std::size_t jobs = 1;
  bool lenient = false;
  AugmentationPlan plan;
};

// Runs `augment`. Writes the corpus and the manifest; returns an exit code.
int RunAugment(const RunConfig& config);

// key=value manifest text. Execution-only settings (jobs, output paths) are
// left out so that equivalent runs produce identical manifests.
std::string RenderManifest(
    const RunConfig& config,
    const std::vector<std::pair<std::string, std::string>>& counters);

struct StatsTable {
  std::vector<std::string> columns;  // slice names
  // (label, count per column), sorted by the last column descending, then
  // label.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> rows;
};

// Phrase counts over the first N trees for each slice size; an empty
// `slices` means the whole file. Missing or unparsable lines count toward
// slice positions but contribute nothing.
StatsTable ComputeStats(const TreeFile& trees,
                        const std::vector<std::size_t>& slices);
std::string RenderStatsText(const StatsTable& table);
std::string RenderStatsTsv(const StatsTable& table);

struct ValidationReport {
  std::vector<std::string> lines;
  // Strict violations: malformed CoNLL lines and BIO errors.
  std::size_t violations = 0;
  std::size_t alignment_failures = 0;
  std::size_t tree_parse_errors = 0;
  std::size_t duplicates = 0;
  std::size_t without_eligible_nodes = 0;
};

// Audits a corpus and, when `tree_text` is given, its parses. Sentences whose
// tree is missing or misaligned are not checked for eligible nodes.
ValidationReport Validate(std::string_view conll_text,
                          const std::optional<std::string>& tree_text,
                          const std::set<PhraseLabel>& labels,
                          bool require_mention_child);
std::string RenderReport(const ValidationReport& report);

// Entry point used by the `grafter` binary. `args` excludes the program
// name. Tables and reports go to `out`.
int Main(const std::vector<std::string>& args, std::ostream& out);

}  // namespace grafter::cli

#endif  // GRAFTER_CLI_H_
