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

// In-process HTTP server speaking the classify/embed wire protocol,
// backed by the keyword toy oracle and the hashing embedding provider.

#ifndef LINGATTACK_TESTS_STUB_SERVER_H_
#define LINGATTACK_TESTS_STUB_SERVER_H_

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "lingattack/oracle.h"
#include "lingattack/similarity.h"

namespace lingattack::testing {

using nlohmann::json;

// Answers one request; returns a null json for unknown routes.
inline json StubRespond(const std::string& method, const std::string& path,
                        const json& body, ClassifierOracle& oracle,
                        EmbeddingProvider& provider, int max_concurrency = 0) {
  if (method == "GET" && path == "/health") return {{"ok", true}};
  if (method == "GET" && path == "/info") {
    json info = {{"num_labels", oracle.num_labels()},
                 {"mask_token", oracle.mask_token()}};
    if (max_concurrency > 0) info["max_concurrency"] = max_concurrency;
    return info;
  }
  if (method != "POST") return nullptr;
  if (path == "/classify") {
    json probs = json::array();
    for (const json& segs : body.at("segments")) {
      probs.push_back(oracle.Classify(segs.get<std::vector<std::string>>()));
    }
    return {{"probs", probs}};
  }
  if (path == "/embed/sentence") {
    json vectors = json::array();
    for (const json& t : body.at("texts")) {
      vectors.push_back(provider.EmbedSentence(t.get<std::string>()));
    }
    return {{"vectors", vectors}};
  }
  if (path == "/embed/tokens") {
    json tokens = json::array();
    json vectors = json::array();
    for (const json& t : body.at("texts")) {
      json tk = json::array();
      json vs = json::array();
      for (const TokenEmbedding& e : provider.EmbedTokens(t.get<std::string>())) {
        tk.push_back(e.token);
        vs.push_back(e.vector);
      }
      tokens.push_back(std::move(tk));
      vectors.push_back(std::move(vs));
    }
    return {{"tokens", tokens}, {"vectors", vectors}};
  }
  return nullptr;
}

// Runs an httplib server on an ephemeral loopback port.
class HttpTestServer {
 public:
  using Handler =
      std::function<json(const std::string& method, const std::string& path,
                         const json& body, int* status)>;

  explicit HttpTestServer(Handler handler) : handler_(std::move(handler)) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      int status = 200;
      json out;
      try {
        const json body = req.body.empty() ? json() : json::parse(req.body);
        out = handler_(req.method, req.path, body, &status);
        if (out.is_null() && status == 200) status = 404;
      } catch (const std::exception& e) {
        status = 400;
        out = {{"error", e.what()}};
      }
      res.status = status;
      res.set_content(out.dump(), "application/json");
    };
    server_.Get(".*", route);
    server_.Post(".*", route);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~HttpTestServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int port() const { return port_; }
  std::size_t requests() const { return requests_; }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<std::size_t> requests_{0};
};

// Stub model server; oracle/provider calls are serialized because the
// toy implementations are cheap and this keeps fakes simple.
class StubModelServer {
 public:
  StubModelServer(ClassifierOracle& oracle, EmbeddingProvider& provider,
                  int max_concurrency = 0)
      : server_([this, &oracle, &provider, max_concurrency](
                    const std::string& m, const std::string& p, const json& b,
                    int*) {
          std::lock_guard<std::mutex> lock(mu_);
          return StubRespond(m, p, b, oracle, provider, max_concurrency);
        }) {}

  std::string url() const { return server_.url(); }
  std::size_t requests() const { return server_.requests(); }

 private:
  std::mutex mu_;
  HttpTestServer server_;
};

}  // namespace lingattack::testing

#endif  // LINGATTACK_TESTS_STUB_SERVER_H_
