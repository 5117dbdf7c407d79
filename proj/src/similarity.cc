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

#include "lingattack/similarity.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "lingattack/rng.h"
#include "lingattack/text.h"

namespace lingattack {
namespace {

std::u32string StripWhitespace(std::string_view text) {
  std::u32string out;
  for (char32_t c : ToCodepoints(text)) {
    if (!u_isUWhiteSpace(static_cast<UChar32>(c))) out.push_back(c);
  }
  return out;
}

std::map<std::u32string_view, int> NgramCounts(std::u32string_view s,
                                               std::size_t n) {
  std::map<std::u32string_view, int> counts;
  for (std::size_t i = 0; i + n <= s.size(); ++i) ++counts[s.substr(i, n)];
  return counts;
}

// Adds the +-1 pseudo-random vector keyed by `key` into `acc`.
void AccumulateHashed(std::string_view key, uint64_t seed, Vector& acc) {
  const uint64_t h = SplitMix64(Fnv1a64(key) ^ seed);
  uint64_t bits = 0;
  for (std::size_t d = 0; d < acc.size(); ++d) {
    if (d % 64 == 0) bits = SplitMix64(h + d / 64);
    acc[d] += (bits >> (d % 64)) & 1 ? 1.0 : -1.0;
  }
}

Vector HashedEmbedding(std::string_view text, std::size_t dimension,
                       uint64_t seed) {
  std::u32string cps = U" " + ToCodepoints(NormalizeNfc(text)) + U" ";
  Vector v(dimension, 0.0);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
      AccumulateHashed(ToUtf8(std::u32string_view(cps).substr(i, n)),
                       seed + n, v);
    }
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

}  // namespace

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cosine of vectors with different dimensions");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
}

double Chrf(std::string_view hypothesis, std::string_view reference, int max_n,
            double beta) {
  if (max_n < 1) throw std::invalid_argument("chrF max_n must be >= 1");
  const std::u32string hyp = StripWhitespace(hypothesis);
  const std::u32string ref = StripWhitespace(reference);
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  int levels = 0;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(max_n); ++n) {
    const std::size_t hyp_total = hyp.size() >= n ? hyp.size() - n + 1 : 0;
    const std::size_t ref_total = ref.size() >= n ? ref.size() - n + 1 : 0;
    if (hyp_total == 0 && ref_total == 0) continue;
    ++levels;
    if (hyp_total == 0 || ref_total == 0) continue;
    const auto hyp_counts = NgramCounts(hyp, n);
    const auto ref_counts = NgramCounts(ref, n);
    std::size_t matches = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) {
        matches += static_cast<std::size_t>(std::min(count, it->second));
      }
    }
    precision_sum += static_cast<double>(matches) / hyp_total;
    recall_sum += static_cast<double>(matches) / ref_total;
  }
  if (levels == 0) return 1.0;
  const double p = precision_sum / levels;
  const double r = recall_sum / levels;
  if (p + r == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

Vector PhoneticFeatureVector(const PhoneticFeatures& f) {
  Vector v(11, 0.0);
  if (f.place != Place::kNone) v[static_cast<std::size_t>(f.place)] = 1.0;
  v[5] = f.voiced;
  v[6] = f.aspirated;
  v[7] = f.nasal;
  v[8] = f.sibilant;
  if (f.vowel_length == VowelLength::kShort) v[9] = 1.0;
  if (f.vowel_length == VowelLength::kLong) v[10] = 1.0;
  return v;
}

double CharPhoneticSimilarity(char32_t a, char32_t b,
                              const PhoneticTable& table) {
  if (a == b) return 1.0;
  const PhoneticFeatures* fa = table.Find(a);
  const PhoneticFeatures* fb = table.Find(b);
  if (fa == nullptr || fb == nullptr) return 0.0;
  return Cosine(PhoneticFeatureVector(*fa), PhoneticFeatureVector(*fb));
}

double PhoneticSimilarity(std::string_view a, std::string_view b,
                          const PhoneticTable& table) {
  const std::u32string x = ToCodepoints(a);
  const std::u32string y = ToCodepoints(b);
  if (x.empty() && y.empty()) return 1.0;
  if (x.size() == y.size()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += CharPhoneticSimilarity(x[i], y[i], table);
    }
    return sum / static_cast<double>(x.size());
  }
  std::vector<double> prev(y.size() + 1);
  std::vector<double> cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<double>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const double sub =
          prev[j - 1] + 1.0 - CharPhoneticSimilarity(x[i - 1], y[j - 1], table);
      cur[j] = std::min({sub, prev[j] + 1.0, cur[j - 1] + 1.0});
    }
    std::swap(prev, cur);
  }
  const double longest = static_cast<double>(std::max(x.size(), y.size()));
  return std::clamp(1.0 - prev[y.size()] / longest, 0.0, 1.0);
}

double BertScoreF1(std::span<const Vector> hypothesis,
                   std::span<const Vector> reference) {
  if (hypothesis.empty() || reference.empty()) {
    throw std::invalid_argument("BERTScore needs non-empty token sequences");
  }
  auto greedy = [](std::span<const Vector> from, std::span<const Vector> to) {
    double sum = 0.0;
    for (const Vector& f : from) {
      double best = -1.0;
      for (const Vector& t : to) best = std::max(best, Cosine(f, t));
      sum += best;
    }
    return sum / static_cast<double>(from.size());
  };
  const double recall = greedy(reference, hypothesis);
  const double precision = greedy(hypothesis, reference);
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Vector HashingEmbeddingProvider::EmbedSentence(std::string_view text) {
  return HashedEmbedding(text, dimension_, seed_);
}

std::vector<TokenEmbedding> HashingEmbeddingProvider::EmbedTokens(
    std::string_view text) {
  std::vector<TokenEmbedding> out;
  for (std::string& token : SplitWords(text)) {
    Vector v = HashedEmbedding(token, dimension_, seed_ ^ 0x746f6b656eULL);
    out.push_back({std::move(token), std::move(v)});
  }
  return out;
}

ConstraintChecker::ConstraintChecker(std::string original,
                                     EmbeddingProvider& provider,
                                     const PhoneticTable* phonetic,
                                     const SimilarityOptions& options)
    : original_(std::move(original)),
      provider_(provider),
      phonetic_(phonetic),
      options_(options) {
  if (options_.threshold < 0.0 || options_.threshold > 1.0) {
    throw std::invalid_argument("similarity threshold must be in [0, 1]");
  }
  sentence_ = provider_.EmbedSentence(original_);
  for (TokenEmbedding& t : provider_.EmbedTokens(original_)) {
    tokens_.push_back(std::move(t.vector));
  }
}

ConstraintResult ConstraintChecker::Check(std::string_view adversarial) {
  ConstraintResult result;
  SimilarityBreakdown& s = result.similarity;
  s.semantic = Cosine(sentence_, provider_.EmbedSentence(adversarial));
  s.chrf = Chrf(adversarial, original_, options_.chrf_max_n,
                options_.chrf_beta);
  std::vector<Vector> adv_tokens;
  for (TokenEmbedding& t : provider_.EmbedTokens(adversarial)) {
    adv_tokens.push_back(std::move(t.vector));
  }
  if (adv_tokens.empty() || tokens_.empty()) {
    s.bertscore_f1 = adv_tokens.empty() && tokens_.empty() ? 1.0 : 0.0;
  } else {
    s.bertscore_f1 = BertScoreF1(adv_tokens, tokens_);
  }
  if (phonetic_ != nullptr) {
    s.phonetic = PhoneticSimilarity(original_, adversarial, *phonetic_);
  }
  result.passed = s.semantic >= options_.threshold;
  return result;
}

ConstraintResult PassesConstraints(std::string_view original,
                                   std::string_view adversarial,
                                   EmbeddingProvider& provider,
                                   const PhoneticTable* phonetic,
                                   const SimilarityOptions& options) {
  ConstraintChecker checker(std::string(original), provider, phonetic,
                            options);
  return checker.Check(adversarial);
}

}  // namespace lingattack
