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

// Regenerates the wire-protocol fixtures from the stub models:
//   make_wire_fixtures <weights.tsv> <out_dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "lingattack/oracle.h"
#include "lingattack/similarity.h"
#include "stub_server.h"

namespace {

using nlohmann::json;
using nlohmann::literals::operator""_json;

struct Case {
  const char* name;
  const char* description;
  const char* method;
  const char* path;
  json request;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: make_wire_fixtures <weights.tsv> <out_dir>\n";
    return 1;
  }
  auto oracle = lingattack::LoadKeywordToyOracle(argv[1]);
  lingattack::HashingEmbeddingProvider provider;
  const std::vector<Case> cases = {
      {"health", "liveness probe", "GET", "/health", nullptr},
      {"info", "label count and mask token", "GET", "/info", nullptr},
      {"classify_single", "one sentence with a negative keyword", "POST",
       "/classify", R"({"segments": [["यह फिल्म बेकार थी"]]})"_json},
      {"classify_batch", "two inputs, sentence pairs", "POST", "/classify",
       R"({"segments": [["कहानी अच्छी थी", "फिल्म बढ़िया थी"],
                         ["A B", "थोड़ा ठीक"]]})"_json},
      {"classify_mask", "mask token carries no weight", "POST", "/classify",
       R"({"segments": [["[MASK] अच्छा"]]})"_json},
      {"classify_no_keywords", "text without weighted words", "POST",
       "/classify", R"({"segments": [["xyz"]]})"_json},
      {"embed_sentence", "one sentence vector", "POST", "/embed/sentence",
       R"({"texts": ["यह फिल्म बेकार थी"]})"_json},
      {"embed_sentence_empty", "empty text still has a vector", "POST",
       "/embed/sentence", R"({"texts": [""]})"_json},
      {"embed_tokens", "whitespace tokens and their vectors", "POST",
       "/embed/tokens", R"({"texts": ["वेकार थी"]})"_json},
  };
  const std::filesystem::path out(argv[2]);
  int index = 0;
  for (const Case& c : cases) {
    ++index;
    const json response = lingattack::testing::StubRespond(
        c.method, c.path, c.request, *oracle, provider);
    json fixture = {{"description", c.description},
                    {"method", c.method},
                    {"path", c.path}};
    if (!c.request.is_null()) fixture["request"] = c.request;
    fixture["response"] = response;
    char name[64];
    std::snprintf(name, sizeof(name), "%02d_%s.json", index, c.name);
    std::ofstream file(out / name);
    file << fixture.dump(1) << '\n';
  }
  return 0;
}
