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

#ifndef LINGATTACK_REMOTE_H_
#define LINGATTACK_REMOTE_H_

// HTTP clients for a model server speaking the JSON wire protocol:
//
//   GET  /info            -> {"num_labels": int, "mask_token": str,
//                             "max_concurrency": int (optional)}
//   POST /classify        {"segments": [[str]]}  -> {"probs": [[num]]}
//   POST /embed/sentence  {"texts": [str]}       -> {"vectors": [[num]]}
//   POST /embed/tokens    {"texts": [str]}
//                         -> {"tokens": [[str]], "vectors": [[[num]]]}
//
// Every transport or protocol failure raises RemoteError.

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/oracle.h"
#include "lingattack/similarity.h"

namespace lingattack {

// "http://host:port" (path-free). Throws RemoteError on other forms.
struct Endpoint {
  std::string host;
  int port = 80;

  static Endpoint Parse(std::string_view url);
};

class HttpJsonClient;

class RemoteClassifierOracle : public ClassifierOracle {
 public:
  // Fetches /info immediately.
  explicit RemoteClassifierOracle(
      const std::string& url,
      std::chrono::milliseconds timeout = std::chrono::seconds(30));
  ~RemoteClassifierOracle() override;

  std::size_t num_labels() const override { return num_labels_; }
  std::string mask_token() const override { return mask_token_; }
  std::vector<double> Classify(std::span<const std::string> segments) override;
  int max_concurrency() const override { return max_concurrency_; }

  // Batched form of Classify: one request for all inputs.
  std::vector<std::vector<double>> ClassifyBatch(
      const std::vector<std::vector<std::string>>& inputs);

 private:
  std::unique_ptr<HttpJsonClient> client_;
  std::size_t num_labels_ = 0;
  std::string mask_token_;
  int max_concurrency_ = 0;
};

class RemoteEmbeddingProvider : public EmbeddingProvider {
 public:
  // Probes /embed/sentence once to learn the dimension.
  explicit RemoteEmbeddingProvider(
      const std::string& url,
      std::chrono::milliseconds timeout = std::chrono::seconds(30));
  ~RemoteEmbeddingProvider() override;

  Vector EmbedSentence(std::string_view text) override;
  std::vector<TokenEmbedding> EmbedTokens(std::string_view text) override;
  std::size_t dimension() const override { return dimension_; }
  int max_concurrency() const override { return max_concurrency_; }

 private:
  std::unique_ptr<HttpJsonClient> client_;
  std::size_t dimension_ = 0;
  int max_concurrency_ = 0;
};

}  // namespace lingattack

#endif  // LINGATTACK_REMOTE_H_
