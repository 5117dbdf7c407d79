// Copyright 2026 The lingattack Authors
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

#include "lingattack/remote.h"

#include <charconv>

#include "httplib.h"
#include "json.hpp"
#include "lingattack/error.h"

namespace lingattack {

using nlohmann::json;

Endpoint Endpoint::Parse(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (url.substr(0, kScheme.size()) != kScheme) {
    throw RemoteError("endpoint must start with http://: " + std::string(url));
  }
  std::string_view rest = url.substr(kScheme.size());
  while (!rest.empty() && rest.back() == '/') rest.remove_suffix(1);
  if (rest.find('/') != std::string_view::npos) {
    throw RemoteError("endpoint must not have a path: " + std::string(url));
  }
  Endpoint e;
  const std::size_t colon = rest.rfind(':');
  if (colon == std::string_view::npos) {
    e.host = std::string(rest);
  } else {
    e.host = std::string(rest.substr(0, colon));
    const std::string_view port = rest.substr(colon + 1);
    auto [ptr, ec] =
        std::from_chars(port.data(), port.data() + port.size(), e.port);
    if (ec != std::errc() || ptr != port.data() + port.size() || e.port <= 0 ||
        e.port > 65535) {
      throw RemoteError("bad port in endpoint: " + std::string(url));
    }
  }
  if (e.host.empty()) throw RemoteError("empty host: " + std::string(url));
  return e;
}

// One connection per request, so instances may be shared across threads.
class HttpJsonClient {
 public:
  HttpJsonClient(Endpoint endpoint, std::chrono::milliseconds timeout)
      : endpoint_(std::move(endpoint)), timeout_(timeout) {}

  json Get(const std::string& path) const {
    httplib::Client client = Connect();
    return Decode(path, client.Get(path));
  }

  json Post(const std::string& path, const json& body) const {
    httplib::Client client = Connect();
    return Decode(path, client.Post(path, body.dump(), "application/json"));
  }

 private:
  httplib::Client Connect() const {
    httplib::Client client(endpoint_.host, endpoint_.port);
    const auto sec = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
    const auto usec =
        std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - sec);
    client.set_connection_timeout(sec.count(), usec.count());
    client.set_read_timeout(sec.count(), usec.count());
    client.set_write_timeout(sec.count(), usec.count());
    return client;
  }

  json Decode(const std::string& path, const httplib::Result& result) const {
    const std::string where =
        endpoint_.host + ":" + std::to_string(endpoint_.port) + path;
    if (!result) {
      throw RemoteError(where + ": " + httplib::to_string(result.error()));
    }
    if (result->status != 200) {
      throw RemoteError(where + ": HTTP " + std::to_string(result->status) +
                        ": " + result->body);
    }
    try {
      return json::parse(result->body);
    } catch (const json::parse_error& e) {
      throw RemoteError(where + ": invalid JSON response: " + e.what());
    }
  }

  Endpoint endpoint_;
  std::chrono::milliseconds timeout_;
};

namespace {

template <typename T>
T Field(const json& j, const char* key, const char* what) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw RemoteError(std::string(what) + ": bad or missing '" + key +
                      "': " + e.what());
  }
}

}  // namespace

RemoteClassifierOracle::RemoteClassifierOracle(
    const std::string& url, std::chrono::milliseconds timeout)
    : client_(std::make_unique<HttpJsonClient>(Endpoint::Parse(url), timeout)) {
  const json info = client_->Get("/info");
  num_labels_ = Field<std::size_t>(info, "num_labels", "/info");
  mask_token_ = Field<std::string>(info, "mask_token", "/info");
  if (info.contains("max_concurrency")) {
    max_concurrency_ = Field<int>(info, "max_concurrency", "/info");
  }
  if (num_labels_ == 0) throw RemoteError("/info: num_labels must be > 0");
}

RemoteClassifierOracle::~RemoteClassifierOracle() = default;

std::vector<std::vector<double>> RemoteClassifierOracle::ClassifyBatch(
    const std::vector<std::vector<std::string>>& inputs) {
  const json response = client_->Post("/classify", {{"segments", inputs}});
  auto probs = Field<std::vector<std::vector<double>>>(response, "probs",
                                                       "/classify");
  if (probs.size() != inputs.size()) {
    throw RemoteError("/classify: expected " + std::to_string(inputs.size()) +
                      " rows, got " + std::to_string(probs.size()));
  }
  for (const auto& row : probs) {
    if (row.size() != num_labels_) {
      throw RemoteError("/classify: row has " + std::to_string(row.size()) +
                        " probabilities, expected " +
                        std::to_string(num_labels_));
    }
  }
  return probs;
}

std::vector<double> RemoteClassifierOracle::Classify(
    std::span<const std::string> segments) {
  return ClassifyBatch({std::vector<std::string>(segments.begin(),
                                                 segments.end())})
      .front();
}

RemoteEmbeddingProvider::RemoteEmbeddingProvider(
    const std::string& url, std::chrono::milliseconds timeout)
    : client_(std::make_unique<HttpJsonClient>(Endpoint::Parse(url), timeout)) {
  dimension_ = EmbedSentence("").size();
  try {
    const json info = client_->Get("/info");
    if (info.contains("max_concurrency")) {
      max_concurrency_ = info.at("max_concurrency").get<int>();
    }
  } catch (const std::exception&) {
    // /info is optional for embedding-only servers.
  }
}

RemoteEmbeddingProvider::~RemoteEmbeddingProvider() = default;

Vector RemoteEmbeddingProvider::EmbedSentence(std::string_view text) {
  const json response = client_->Post(
      "/embed/sentence", {{"texts", json::array({std::string(text)})}});
  auto vectors =
      Field<std::vector<Vector>>(response, "vectors", "/embed/sentence");
  if (vectors.size() != 1) {
    throw RemoteError("/embed/sentence: expected 1 vector, got " +
                      std::to_string(vectors.size()));
  }
  if (dimension_ != 0 && vectors[0].size() != dimension_) {
    throw RemoteError("/embed/sentence: dimension changed");
  }
  return std::move(vectors[0]);
}

std::vector<TokenEmbedding> RemoteEmbeddingProvider::EmbedTokens(
    std::string_view text) {
  const json response = client_->Post(
      "/embed/tokens", {{"texts", json::array({std::string(text)})}});
  auto tokens = Field<std::vector<std::vector<std::string>>>(
      response, "tokens", "/embed/tokens");
  auto vectors = Field<std::vector<std::vector<Vector>>>(response, "vectors",
                                                         "/embed/tokens");
  if (tokens.size() != 1 || vectors.size() != 1 ||
      tokens[0].size() != vectors[0].size()) {
    throw RemoteError("/embed/tokens: tokens and vectors do not line up");
  }
  std::vector<TokenEmbedding> out;
  for (std::size_t i = 0; i < tokens[0].size(); ++i) {
    out.push_back({std::move(tokens[0][i]), std::move(vectors[0][i])});
  }
  return out;
}

}  // namespace lingattack
