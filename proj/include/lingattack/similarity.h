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

#ifndef LINGATTACK_SIMILARITY_H_
#define LINGATTACK_SIMILARITY_H_

// Similarity measures between an original and a perturbed text: sentence
// embedding cosine (the acceptance gate), chrF, BERTScore F1 over token
// embeddings and a phonetic-feature similarity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/resources.h"

namespace lingattack {

using Vector = std::vector<double>;

// 0 when either vector has zero norm.
double Cosine(std::span<const double> a, std::span<const double> b);

// Character n-gram F-beta over n = 1..max_n. Whitespace is removed first.
// Precision and recall are averaged over the n-levels where at least one
// side has n-grams, then combined. Two empty strings score 1.
double Chrf(std::string_view hypothesis, std::string_view reference,
            int max_n = 6, double beta = 2.0);

// Binary articulation vector: one-hot place (5), voiced, aspirated, nasal,
// sibilant, one-hot vowel length (2).
Vector PhoneticFeatureVector(const PhoneticFeatures& f);

double CharPhoneticSimilarity(char32_t a, char32_t b,
                              const PhoneticTable& table);

// Mean per-codepoint similarity for equal lengths; otherwise
// 1 - weighted edit distance / max length.
double PhoneticSimilarity(std::string_view a, std::string_view b,
                          const PhoneticTable& table);

// Greedy-matching BERTScore without idf weighting. Throws
// std::invalid_argument on an empty side or a dimension mismatch.
double BertScoreF1(std::span<const Vector> hypothesis,
                   std::span<const Vector> reference);

struct TokenEmbedding {
  std::string token;
  Vector vector;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual Vector EmbedSentence(std::string_view text) = 0;
  virtual std::vector<TokenEmbedding> EmbedTokens(std::string_view text) = 0;
  virtual std::size_t dimension() const = 0;

  // Maximum concurrent callers; 0 means unlimited.
  virtual int max_concurrency() const { return 0; }
};

// Deterministic offline provider. A text embeds to the normalized sum of
// pseudo-random +-1 vectors keyed by its character 1- to 3-grams, so texts
// that share most n-grams land close together. Thread-safe.
class HashingEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HashingEmbeddingProvider(std::size_t dimension = 256,
                                    uint64_t seed = 0)
      : dimension_(dimension), seed_(seed) {}

  Vector EmbedSentence(std::string_view text) override;
  std::vector<TokenEmbedding> EmbedTokens(std::string_view text) override;
  std::size_t dimension() const override { return dimension_; }

 private:
  std::size_t dimension_;
  uint64_t seed_;
};

struct SimilarityBreakdown {
  double semantic = 0.0;
  double chrf = 0.0;
  double bertscore_f1 = 0.0;
  // Absent when the script has no phonetic table.
  std::optional<double> phonetic;

  bool operator==(const SimilarityBreakdown&) const = default;
};

struct SimilarityOptions {
  double threshold = 0.6;
  int chrf_max_n = 6;
  double chrf_beta = 2.0;
};

struct ConstraintResult {
  bool passed = false;
  SimilarityBreakdown similarity;
};

// Caches the original's embeddings for repeated checks against it.
class ConstraintChecker {
 public:
  // `phonetic` may be null.
  ConstraintChecker(std::string original, EmbeddingProvider& provider,
                    const PhoneticTable* phonetic,
                    const SimilarityOptions& options = {});

  // Passes iff semantic cosine >= threshold. The breakdown is always full.
  ConstraintResult Check(std::string_view adversarial);

 private:
  std::string original_;
  EmbeddingProvider& provider_;
  const PhoneticTable* phonetic_;
  SimilarityOptions options_;
  Vector sentence_;
  std::vector<Vector> tokens_;
};

ConstraintResult PassesConstraints(std::string_view original,
                                   std::string_view adversarial,
                                   EmbeddingProvider& provider,
                                   const PhoneticTable* phonetic = nullptr,
                                   const SimilarityOptions& options = {});

}  // namespace lingattack

#endif  // LINGATTACK_SIMILARITY_H_
