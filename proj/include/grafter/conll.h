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

#ifndef GRAFTER_CONLL_H_
#define GRAFTER_CONLL_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "grafter/corpus.h"

namespace grafter {

// Token-per-line reader/writer. Input lines are `text<TAB>tag` (any run of
// tabs or spaces separates fields); a blank line ends a sentence. With more
// than two columns only the first and the last are kept. `-DOCSTART-` lines
// are dropped. CRLF is tolerated.

struct ConllOptions {
  // Repairs an I-X that does not continue an X mention to B-X instead of
  // failing.
  bool lenient = false;
};

struct ConllReadResult {
  Corpus corpus;
  std::size_t repairs = 0;
  std::size_t multi_column_lines = 0;
};

// Splits the text into sentences without checking BIO validity.
// Throws ParseError on a line with a single field or an unknown tag.
ConllReadResult ReadConllUnchecked(std::string_view text);

// Throws ParseError for malformed lines and, in strict mode, ValidationError
// naming the sentence and token of the first BIO violation.
ConllReadResult ParseConll(std::string_view text,
                           const ConllOptions& options = {});

// Canonical form: `text\ttag\n` per token and "\n" after every sentence.
std::string WriteConll(const Corpus& corpus);

}  // namespace grafter

#endif  // GRAFTER_CONLL_H_
