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

#ifndef LINGATTACK_ORACLE_H_
#define LINGATTACK_ORACLE_H_

// Black-box victim classifier interface and in-process implementations.

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lingattack {

class ClassifierOracle {
 public:
  virtual ~ClassifierOracle() = default;

  virtual std::size_t num_labels() const = 0;
  virtual std::string mask_token() const = 0;

  // Label probabilities for one input made of `segments` (one for
  // single-sentence tasks, two for sentence-pair tasks).
  virtual std::vector<double> Classify(
      std::span<const std::string> segments) = 0;

  // Maximum concurrent callers; 0 means unlimited.
  virtual int max_concurrency() const { return 0; }
};

// Index of the largest probability; ties resolve to the smaller index.
std::size_t Argmax(std::span<const double> probs);

double Logistic(double x);

// Two-label oracle: p(label 1) = logistic(bias + sum of the weights of the
// distinct whitespace tokens present in any segment). The mask token
// "[MASK]" has weight 0. Thread-safe.
class KeywordToyOracle : public ClassifierOracle {
 public:
  KeywordToyOracle(std::map<std::string, double, std::less<>> weights,
                   double bias);

  std::size_t num_labels() const override { return 2; }
  std::string mask_token() const override { return "[MASK]"; }
  std::vector<double> Classify(std::span<const std::string> segments) override;

  const std::map<std::string, double, std::less<>>& weights() const {
    return weights_;
  }
  double bias() const { return bias_; }

 private:
  std::map<std::string, double, std::less<>> weights_;
  double bias_;
};

std::unique_ptr<ClassifierOracle> MakeKeywordToyOracle(
    std::map<std::string, double, std::less<>> weights, double bias);

// Reads `word<TAB>weight` lines; a `bias` row sets the bias.
std::unique_ptr<KeywordToyOracle> LoadKeywordToyOracle(const std::string& path);

// Forwards to another oracle and counts calls.
class CountingOracle : public ClassifierOracle {
 public:
  explicit CountingOracle(ClassifierOracle& inner) : inner_(inner) {}

  std::size_t num_labels() const override { return inner_.num_labels(); }
  std::string mask_token() const override { return inner_.mask_token(); }
  std::vector<double> Classify(std::span<const std::string> segments) override {
    ++calls_;
    return inner_.Classify(segments);
  }
  int max_concurrency() const override { return inner_.max_concurrency(); }

  std::size_t calls() const { return calls_.load(); }
  void Reset() { calls_ = 0; }

 private:
  ClassifierOracle& inner_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace lingattack

#endif  // LINGATTACK_ORACLE_H_
