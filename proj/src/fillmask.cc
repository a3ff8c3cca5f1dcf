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

#include "grafter/fillmask.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "grafter/errors.h"
#include "httplib.h"
#include "json.hpp"

namespace grafter {

namespace {

using nlohmann::json;

bool HasWhitespace(std::string_view text) {
  return text.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

}  // namespace

void ValidateRequest(const MaskRequest& request) {
  if (request.top_n == 0) {
    throw std::invalid_argument("top_n must be at least 1");
  }
  for (std::size_t i = 0; i < request.mask_positions.size(); ++i) {
    const std::size_t position = request.mask_positions[i];
    if (position >= request.tokens.size()) {
      throw std::invalid_argument("mask position " + std::to_string(position) +
                                  " out of range");
    }
    if (i > 0 && position <= request.mask_positions[i - 1]) {
      throw std::invalid_argument("mask positions must be strictly increasing");
    }
  }
}

void ValidateResponse(const MaskRequest& request,
                      const MaskResponse& response) {
  if (response.candidates.size() != request.mask_positions.size()) {
    throw ProviderError(
        "expected " + std::to_string(request.mask_positions.size()) +
        " candidate lists, got " + std::to_string(response.candidates.size()));
  }
  for (const auto& list : response.candidates) {
    if (list.size() > request.top_n) {
      throw ProviderError("more than top_n candidates");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].text.empty() || HasWhitespace(list[i].text)) {
        throw ProviderError("candidate '" + list[i].text +
                            "' is not a single token");
      }
      if (!(list[i].score >= 0.0)) throw ProviderError("negative score");
      if (i > 0 && list[i].score > list[i - 1].score) {
        throw ProviderError("scores are not non-increasing");
      }
    }
  }
}

std::string ToJson(const MaskRequest& request) {
  json body = {{"tokens", request.tokens},
               {"mask_positions", request.mask_positions},
               {"top_n", request.top_n}};
  return body.dump();
}

std::string ToJson(const MaskResponse& response) {
  json lists = json::array();
  for (const auto& list : response.candidates) {
    json entries = json::array();
    for (const Candidate& c : list) {
      entries.push_back({{"text", c.text}, {"score", c.score}});
    }
    lists.push_back(std::move(entries));
  }
  return json{{"candidates", std::move(lists)}}.dump();
}

MaskRequest MaskRequestFromJson(std::string_view text) {
  try {
    const json body = json::parse(text);
    MaskRequest request;
    request.tokens = body.at("tokens").get<std::vector<std::string>>();
    request.mask_positions =
        body.at("mask_positions").get<std::vector<std::size_t>>();
    if (body.contains("top_n")) {
      request.top_n = body.at("top_n").get<std::size_t>();
    }
    return request;
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed request: ") + e.what());
  }
}

MaskResponse MaskResponseFromJson(std::string_view text) {
  try {
    const json body = json::parse(text);
    MaskResponse response;
    for (const json& list : body.at("candidates")) {
      std::vector<Candidate> candidates;
      for (const json& entry : list) {
        candidates.push_back({entry.at("text").get<std::string>(),
                              entry.at("score").get<double>()});
      }
      response.candidates.push_back(std::move(candidates));
    }
    return response;
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed response: ") + e.what());
  }
}

UnigramProvider::UnigramProvider(const Corpus& corpus) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const Sentence& sentence : corpus.sentences) {
    for (const Token& token : sentence.tokens) {
      if (!token.tag.is_outside()) continue;
      ++counts[token.text];
      ++total;
    }
  }
  std::vector<std::pair<std::string, std::size_t>> ordered(counts.begin(),
                                                           counts.end());
  std::stable_sort(
      ordered.begin(), ordered.end(),
      [](const auto& a, const auto& b) { return a.second > b.second; });
  ranked_.reserve(ordered.size());
  for (auto& [text, count] : ordered) {
    ranked_.push_back({std::move(text), static_cast<double>(count) /
                                            static_cast<double>(total)});
  }
}

MaskResponse UnigramProvider::Fill(const MaskRequest& request) const {
  ValidateRequest(request);
  const std::size_t n = std::min(request.top_n, ranked_.size());
  const std::vector<Candidate> top(ranked_.begin(), ranked_.begin() + n);
  return MaskResponse{
      std::vector<std::vector<Candidate>>(request.mask_positions.size(), top)};
}

HttpFillMaskClient::HttpFillMaskClient(std::string base_url,
                                       std::chrono::milliseconds timeout)
    : timeout_(timeout) {
  while (!base_url.empty() && base_url.back() == '/') base_url.pop_back();
  std::size_t host_start = base_url.find("://");
  if (host_start == std::string::npos) {
    base_url = "http://" + base_url;
    host_start = 4;
  }
  const std::size_t path_start = base_url.find('/', host_start + 3);
  if (path_start == std::string::npos) {
    scheme_host_port_ = base_url;
  } else {
    scheme_host_port_ = base_url.substr(0, path_start);
    path_prefix_ = base_url.substr(path_start);
  }
}

MaskResponse HttpFillMaskClient::Fill(const MaskRequest& request) const {
  ValidateRequest(request);
  if (request.mask_positions.empty()) return {};

  httplib::Client client(scheme_host_port_);
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  const std::string path = path_prefix_ + "/fill";
  httplib::Result result =
      client.Post(path, ToJson(request), "application/json");
  if (!result) {
    throw ProviderError("POST " + scheme_host_port_ + path +
                        " failed: " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw ProviderError("POST " + scheme_host_port_ + path + " returned " +
                        std::to_string(result->status) + ": " + result->body);
  }
  MaskResponse response = MaskResponseFromJson(result->body);
  ValidateResponse(request, response);
  return response;
}

}  // namespace grafter
