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

#ifndef GRAFTER_FILLMASK_H_
#define GRAFTER_FILLMASK_H_

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grafter/corpus.h"

namespace grafter {

// Token-level masked prediction request. Mask positions index tokens, not
// subword pieces.
struct MaskRequest {
  std::vector<std::string> tokens;
  std::vector<std::size_t> mask_positions;
  std::size_t top_n = 10;

  friend bool operator==(const MaskRequest&, const MaskRequest&) = default;
};

struct Candidate {
  std::string text;
  double score = 0.0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// One candidate list per requested mask position, in request order.
struct MaskResponse {
  std::vector<std::vector<Candidate>> candidates;

  friend bool operator==(const MaskResponse&, const MaskResponse&) = default;
};

// Throws std::invalid_argument unless positions are strictly increasing and
// in range and top_n >= 1.
void ValidateRequest(const MaskRequest& request);

// Throws ProviderError if `response` breaks the contract for `request`: wrong
// list count, too many candidates, negative or increasing scores, empty or
// whitespace-containing candidates.
void ValidateResponse(const MaskRequest& request, const MaskResponse& response);

// JSON wire format:
//   request  {"tokens": [...], "mask_positions": [...], "top_n": N}
//   response {"candidates": [[{"text": "...", "score": 0.5}, ...], ...]}
std::string ToJson(const MaskRequest& request);
std::string ToJson(const MaskResponse& response);
// Both throw ProviderError on malformed input.
MaskRequest MaskRequestFromJson(std::string_view json);
MaskResponse MaskResponseFromJson(std::string_view json);

class FillMaskProvider {
 public:
  virtual ~FillMaskProvider() = default;

  // Must be safe to call concurrently. Throws ProviderError on failure.
  virtual MaskResponse Fill(const MaskRequest& request) const = 0;
};

// Answers every mask with the most frequent O-tagged tokens of a corpus,
// scored by relative frequency. Ties break lexicographically.
class UnigramProvider : public FillMaskProvider {
 public:
  explicit UnigramProvider(const Corpus& corpus);

  MaskResponse Fill(const MaskRequest& request) const override;

  const std::vector<Candidate>& ranked() const { return ranked_; }

 private:
  std::vector<Candidate> ranked_;
};

// Client for a remote provider speaking the JSON protocol over
// `POST <base_url>/fill`. No retries.
class HttpFillMaskClient : public FillMaskProvider {
 public:
  explicit HttpFillMaskClient(
      std::string base_url,
      std::chrono::milliseconds timeout = std::chrono::seconds(30));

  MaskResponse Fill(const MaskRequest& request) const override;

 private:
  std::string scheme_host_port_;
  std::string path_prefix_;
  std::chrono::milliseconds timeout_;
};

}  // namespace grafter

#endif  // GRAFTER_FILLMASK_H_
