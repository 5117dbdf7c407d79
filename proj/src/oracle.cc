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

#include "lingattack/oracle.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string_view>

#include "lingattack/error.h"
#include "lingattack/text.h"
#include "tsv.h"

namespace lingattack {

std::size_t Argmax(std::span<const double> probs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs.size(); ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  return best;
}

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

KeywordToyOracle::KeywordToyOracle(
    std::map<std::string, double, std::less<>> weights, double bias)
    : weights_(std::move(weights)), bias_(bias) {
  weights_.erase(mask_token());
}

std::vector<double> KeywordToyOracle::Classify(
    std::span<const std::string> segments) {
  std::set<std::string_view> present;
  for (const std::string& segment : segments) {
    for (const TokenSpan& span : TokenSpans(segment)) {
      present.insert(std::string_view(segment).substr(
          span.begin, span.end - span.begin));
    }
  }
  double logit = bias_;
  for (std::string_view word : present) {
    auto it = weights_.find(word);
    if (it != weights_.end()) logit += it->second;
  }
  const double p1 = Logistic(logit);
  return {1.0 - p1, p1};
}

std::unique_ptr<ClassifierOracle> MakeKeywordToyOracle(
    std::map<std::string, double, std::less<>> weights, double bias) {
  return std::make_unique<KeywordToyOracle>(std::move(weights), bias);
}

std::unique_ptr<KeywordToyOracle> LoadKeywordToyOracle(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  internal::TsvReader reader(in, path);
  internal::TsvLine line;
  std::map<std::string, double, std::less<>> weights;
  double bias = 0.0;
  while (reader.Next(line)) {
    reader.ExpectFields(line, 2, 2);
    const std::string& v = line.fields[1];
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      reader.Fail(line, "bad weight '" + v + "'");
    }
    if (line.fields[0] == "bias") {
      bias = value;
    } else {
      weights[NormalizeNfc(line.fields[0])] = value;
    }
  }
  return std::make_unique<KeywordToyOracle>(std::move(weights), bias);
}

}  // namespace lingattack
