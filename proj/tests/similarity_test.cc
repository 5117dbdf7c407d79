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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "testing.h"

namespace lingattack {
namespace {

using testing::SharedBundle;

const PhoneticTable& Dev() {
  return *SharedBundle().Phonetic(ScriptId::kDevanagari);
}

// Every text gets its own axis, so distinct texts are orthogonal.
class OrthogonalProvider : public EmbeddingProvider {
 public:
  Vector EmbedSentence(std::string_view text) override {
    Vector v(64, 0.0);
    v[std::hash<std::string_view>{}(text) % 64] = 1.0;
    return v;
  }
  std::vector<TokenEmbedding> EmbedTokens(std::string_view text) override {
    return {{std::string(text), EmbedSentence(text)}};
  }
  std::size_t dimension() const override { return 64; }
};

TEST(CosineTest, Basics) {
  EXPECT_DOUBLE_EQ(Cosine(Vector{1, 0}, Vector{0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(Cosine(Vector{2, 0}, Vector{3, 0}), 1.0);
  EXPECT_DOUBLE_EQ(Cosine(Vector{0, 0}, Vector{1, 0}), 0.0);
  EXPECT_THROW(Cosine(Vector{1}, Vector{1, 0}), std::invalid_argument);
}

TEST(ChrfTest, IdentityAndDisjoint) {
  EXPECT_EQ(Chrf("अब", "अब"), 1.0);
  EXPECT_EQ(Chrf("ab", "cd"), 0.0);
  EXPECT_EQ(Chrf("", ""), 1.0);
  EXPECT_EQ(Chrf("abc", ""), 0.0);
}

TEST(ChrfTest, HandEnumeratedPair) {
  // Unigram 3/4, bigram 2/3, trigram 1/2, 4-gram 0/1; higher orders empty
  // on both sides. Precision equals recall so F is their common mean.
  const double expected = (3.0 / 4 + 2.0 / 3 + 1.0 / 2 + 0.0) / 4;
  EXPECT_NEAR(Chrf("abcd", "abce"), expected, 1e-12);
  EXPECT_NEAR(testing::ChrfOracle("abcd", "abce"), expected, 1e-12);
}

TEST(ChrfTest, IgnoresWhitespace) {
  EXPECT_EQ(Chrf("a b c", "abc"), 1.0);
}

TEST(ChrfTest, MatchesOracleOnRandomPairs) {
  std::mt19937 gen(3);
  const std::u32string alphabet = U"abकखा ";
  std::uniform_int_distribution<int> len(0, 9);
  std::uniform_int_distribution<int> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 200; ++i) {
    std::u32string a, b;
    for (int n = len(gen); n > 0; --n) a += alphabet[pick(gen)];
    for (int n = len(gen); n > 0; --n) b += alphabet[pick(gen)];
    const std::string x = ToUtf8(a), y = ToUtf8(b);
    for (double beta : {1.0, 2.0}) {
      EXPECT_NEAR(Chrf(x, y, 6, beta), testing::ChrfOracle(x, y, 6, beta),
                  1e-12)
          << x << " | " << y;
    }
  }
}

TEST(PhoneticTest, Identity) {
  for (const char* w : {"बेकार", "abc", "", "क्ष"}) {
    EXPECT_EQ(PhoneticSimilarity(w, w, Dev()), 1.0);
  }
}

TEST(PhoneticTest, DisjointFeatures) {
  // Velar consonant vs short vowel share no feature dimension.
  EXPECT_EQ(PhoneticSimilarity("क", "अ", Dev()), 0.0);
  // No features at all on one side.
  EXPECT_EQ(PhoneticSimilarity("क", "x", Dev()), 0.0);
}

TEST(PhoneticTest, BaVersusBha) {
  const auto ba = testing::HandFeatureVector(4, true, false, false, false, -1);
  const auto bha = testing::HandFeatureVector(4, true, true, false, false, -1);
  const double pos = testing::HandCosine(ba, bha);
  EXPECT_NEAR(pos, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(CharPhoneticSimilarity(0x092C, 0x092D, Dev()), pos, 1e-12);
  EXPECT_NEAR(PhoneticSimilarity("बेकार", "भेकार", Dev()), (4 + pos) / 5,
              1e-12);
}

TEST(PhoneticTest, FeatureVectorLayout) {
  EXPECT_EQ(PhoneticFeatureVector(*Dev().Find(0x092D)),
            testing::HandFeatureVector(4, true, true, false, false, -1));
  EXPECT_EQ(PhoneticFeatureVector(*Dev().Find(0x0906)),
            testing::HandFeatureVector(-1, false, false, false, false, 1));
  EXPECT_EQ(PhoneticFeatureVector(*Dev().Find(0x0937)),
            testing::HandFeatureVector(2, false, false, false, true, -1));
}

TEST(PhoneticTest, UnequalLengthsUseEditDistance) {
  // One deletion out of four codepoints.
  EXPECT_NEAR(PhoneticSimilarity("कमला", "कमल", Dev()), 0.75, 1e-12);
  EXPECT_EQ(PhoneticSimilarity("", "क", Dev()), 0.0);
}

TEST(BertScoreTest, Basics) {
  const std::vector<Vector> a = {{1, 0}, {0, 1}};
  EXPECT_DOUBLE_EQ(BertScoreF1(a, a), 1.0);
  EXPECT_DOUBLE_EQ(BertScoreF1(std::vector<Vector>{{1, 0}},
                               std::vector<Vector>{{0, 1}}),
                   0.0);
  EXPECT_THROW(BertScoreF1({}, a), std::invalid_argument);
  EXPECT_THROW(BertScoreF1(a, {}), std::invalid_argument);
}

TEST(BertScoreTest, TwoByTwo) {
  // Precision: hyp (.6,.8) best .6, hyp (0,1) best 0 -> .3.
  // Recall: both ref (1,0) best .6 -> .6. F1 = 2*.3*.6/.9 = .4.
  const std::vector<Vector> hyp = {{0.6, 0.8}, {0, 1}};
  const std::vector<Vector> ref = {{1, 0}, {1, 0}};
  EXPECT_NEAR(BertScoreF1(hyp, ref), 0.4, 1e-12);
}

TEST(HashingProviderTest, DeterministicUnitVectors) {
  HashingEmbeddingProvider p;
  const Vector a = p.EmbedSentence("यह फिल्म बेकार थी");
  EXPECT_EQ(a, p.EmbedSentence("यह फिल्म बेकार थी"));
  EXPECT_EQ(a.size(), p.dimension());
  double n = 0;
  for (double x : a) n += x * x;
  EXPECT_NEAR(n, 1.0, 1e-12);
  const auto tokens = p.EmbedTokens("यह फिल्म");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[1].token, "फिल्म");
  EXPECT_NE(HashingEmbeddingProvider(256, 1).EmbedSentence("x"),
            p.EmbedSentence("x"));
}

TEST(HashingProviderTest, SingleEditStaysClose) {
  HashingEmbeddingProvider p;
  const double c = Cosine(p.EmbedSentence("यह फिल्म बेकार थी"),
                          p.EmbedSentence("यह फिल्म वेकार थी"));
  EXPECT_GT(c, 0.6);
  EXPECT_LT(c, 1.0);
}

TEST(ConstraintsTest, IdentityPasses) {
  HashingEmbeddingProvider p;
  const auto r =
      PassesConstraints("यह फिल्म बेकार थी", "यह फिल्म बेकार थी", p, &Dev());
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.similarity.semantic, 1.0, 1e-12);
  EXPECT_EQ(r.similarity.chrf, 1.0);
  EXPECT_NEAR(r.similarity.bertscore_f1, 1.0, 1e-12);
  EXPECT_EQ(r.similarity.phonetic, 1.0);
}

TEST(ConstraintsTest, OrthogonalFails) {
  OrthogonalProvider p;
  const auto r = PassesConstraints("abc", "abd", p);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.similarity.semantic, 0.0);
  EXPECT_FALSE(r.similarity.phonetic.has_value());
}

TEST(ConstraintsTest, ZeroThresholdAlwaysPasses) {
  OrthogonalProvider p;
  SimilarityOptions o;
  o.threshold = 0.0;
  EXPECT_TRUE(PassesConstraints("abc", "xyz", p, nullptr, o).passed);
  o.threshold = 1.5;
  EXPECT_THROW(PassesConstraints("abc", "xyz", p, nullptr, o),
               std::invalid_argument);
}

TEST(ConstraintsTest, CheckerMatchesFreeFunction) {
  HashingEmbeddingProvider p;
  ConstraintChecker checker("यह फिल्म बेकार थी", p, &Dev());
  for (const char* adv : {"यह फिल्म वेकार थी", "यह फ़िल्म बेकार थी", "कुछ"}) {
    const auto a = checker.Check(adv);
    const auto b = PassesConstraints("यह फिल्म बेकार थी", adv, p, &Dev());
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.similarity, b.similarity);
  }
}

}  // namespace
}  // namespace lingattack
