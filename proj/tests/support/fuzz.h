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

#ifndef GRAFTER_TESTS_SUPPORT_FUZZ_H_
#define GRAFTER_TESTS_SUPPORT_FUZZ_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grafter/corpus.h"
#include "grafter/tree.h"

namespace grafter::testing {

// Random generators for property tests. They use std::mt19937_64 directly so
// fixtures do not depend on grafter::Rng.
class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : engine_(seed) {}

  std::size_t Int(std::size_t lo, std::size_t hi);  // inclusive
  bool Chance(double p);
  std::mt19937_64& engine() { return engine_; }

  // BIO-valid sentence with between `min_len` and `max_len` tokens.
  Sentence RandomSentence(std::size_t id, std::size_t min_len,
                          std::size_t max_len);

  // Random bracketed tree over the given leaves: a ROOT node over nested
  // phrases, part-of-speech nodes over leaves, occasional unary chains and
  // function-tagged labels.
  std::string RandomTreeText(const std::vector<std::string>& leaves);

  // Tree text over arbitrary leaves, including bracket characters.
  std::string RandomTreeTextAnyLeaves(std::size_t min_leaves,
                                      std::size_t max_leaves);

 private:
  std::string Build(const std::vector<std::string>& leaves, std::size_t start,
                    std::size_t end, int depth);

  std::mt19937_64 engine_;
};

struct AlignedCorpus {
  Corpus corpus;
  std::vector<std::string> tree_lines;
  std::vector<std::optional<ParseTree>> trees;
};

// `count` sentences with aligned random parses.
AlignedCorpus FuzzAlignedCorpus(std::uint64_t seed, std::size_t count,
                                std::size_t min_len, std::size_t max_len);

// Temporary directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path() const { return path_; }
  std::string File(const std::string& name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

void WriteText(const std::string& path, const std::string& text);
std::string ReadText(const std::string& path);

// Path of a checked-in fixture under tests/fixtures.
std::string FixturePath(const std::string& name);

}  // namespace grafter::testing

#endif  // GRAFTER_TESTS_SUPPORT_FUZZ_H_
