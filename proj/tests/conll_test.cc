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

#include "grafter/conll.h"

#include <gtest/gtest.h>

#include "grafter/errors.h"
#include "support/fuzz.h"

namespace grafter {
namespace {

constexpr char kMinimal[] = "She\tO\nhad\tO\nCOPD\tB-PROBLEM\n\n";

TEST(ParseConllTest, MinimalSentence) {
  const Corpus corpus = ParseConll(kMinimal).corpus;
  ASSERT_EQ(corpus.sentences.size(), 1u);
  ASSERT_EQ(corpus.sentences[0].tokens.size(), 3u);
  const auto mentions = ExtractMentions(corpus.sentences[0]);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].span, (Span{2, 3}));
  EXPECT_EQ(mentions[0].entity_type, "PROBLEM");
  EXPECT_EQ(corpus.entity_types, std::set<std::string>{"PROBLEM"});
}

TEST(ParseConllTest, StrictModeRejectsOrphanInside) {
  try {
    ParseConll("flare\tI-PROBLEM\n\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "I without preceding B, sentence 0 token 0");
  }
}

TEST(ParseConllTest, LenientModeRepairsOrphanInside) {
  const ConllReadResult result = ParseConll(
      "x\tO\n\nflare\tI-PROBLEM\nup\tI-PROBLEM\n\n", {.lenient = true});
  EXPECT_EQ(result.repairs, 1u);
  const Sentence& s = result.corpus.sentences[1];
  EXPECT_EQ(s.tokens[0].tag, Tag::Begin("PROBLEM"));
  EXPECT_EQ(s.tokens[1].tag, Tag::Inside("PROBLEM"));
  EXPECT_TRUE(IsBioValid(s));
}

TEST(ParseConllTest, WrongFieldCountReportsLine) {
  try {
    ParseConll("She\tO\nhad\n\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseConllTest, UnknownTagReportsLine) {
  try {
    ParseConll("a\tO\n\nb\tS-PROBLEM\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseConllTest, ToleratesCrlfDocstartAndExtraColumns) {
  const std::string text =
      "-DOCSTART- -X- O O\r\n\r\nShe PRP B-NP O\r\nhad VBD B-VP O\r\n"
      "COPD NN B-NP B_PROBLEM\r\n\r\n\r\n";
  const ConllReadResult result = ParseConll(text);
  EXPECT_EQ(result.multi_column_lines, 3u);
  EXPECT_EQ(WriteConll(result.corpus), kMinimal);
}

TEST(ParseConllTest, TrailingBlankLinesAndMissingFinalNewline) {
  EXPECT_EQ(ParseConll("a\tO\n\n\n\n").corpus.sentences.size(), 1u);
  EXPECT_EQ(ParseConll("a\tO\nb\tO").corpus.sentences[0].tokens.size(), 2u);
}

TEST(WriteConllTest, EmptyCorpus) { EXPECT_EQ(WriteConll(Corpus{}), ""); }

TEST(WriteConllTest, CanonicalForm) {
  EXPECT_EQ(WriteConll(ParseConll(kMinimal).corpus), kMinimal);
}

// A 500-sentence fixture in non-canonical spelling (underscore tags, CRLF,
// space separators, runs of blank lines, document markers) and its
// canonical normalization, built independently of the writer.
TEST(ConllRoundTripTest, FixtureCorpusNormalizes) {
  testing::Fuzzer fuzzer(500);
  std::string raw;
  std::string normalized;
  for (std::size_t i = 0; i < 500; ++i) {
    if (i % 100 == 0) raw += "-DOCSTART-\tO\n\n";
    const Sentence s = fuzzer.RandomSentence(i, 1, 25);
    const bool crlf = i % 7 == 0;
    for (const Token& t : s.tokens) {
      std::string tag = ToString(t.tag);
      std::string raw_tag = tag;
      if (i % 3 == 0 && tag.size() > 1) raw_tag[1] = '_';
      raw +=
          t.text + (i % 5 == 0 ? " " : "\t") + raw_tag + (crlf ? "\r\n" : "\n");
      normalized += t.text + "\t" + tag + "\n";
    }
    raw += i % 11 == 0 ? "\n\n\n" : "\n";
    normalized += "\n";
  }
  const Corpus corpus = ParseConll(raw).corpus;
  EXPECT_EQ(corpus.sentences.size(), 500u);
  EXPECT_EQ(WriteConll(corpus), normalized);
}

TEST(ConllRoundTripTest, ParseInvertsWriteOnRandomCorpora) {
  testing::Fuzzer fuzzer(77);
  for (int trial = 0; trial < 50; ++trial) {
    Corpus corpus;
    const std::size_t n = fuzzer.Int(0, 40);
    for (std::size_t i = 0; i < n; ++i) {
      corpus.sentences.push_back(fuzzer.RandomSentence(i, 1, 12));
    }
    Renumber(corpus);
    const std::string text = WriteConll(corpus);
    EXPECT_EQ(ParseConll(text).corpus, corpus);
    EXPECT_EQ(WriteConll(ParseConll(text).corpus), text);
  }
}

}  // namespace
}  // namespace grafter
