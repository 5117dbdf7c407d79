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

#include "lingattack/attack.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "lingattack/harness.h"
#include "testing.h"

namespace lingattack {
namespace {

using testing::SharedBundle;

double Logit(double p) { return std::log(p / (1 - p)); }

std::size_t Attempted(const AttackOutcome& o) {
  std::size_t n = 0;
  for (const WordTrace& t : o.trace) n += t.queried;
  return n;
}

AttackConfig Kinds(std::string_view spec) {
  AttackConfig c;
  c.kinds = ParseKinds(spec);
  return c;
}

TEST(ToyOracleTest, Values) {
  KeywordToyOracle empty({}, 0.0);
  const std::vector<std::string> any = {"कुछ भी"};
  EXPECT_EQ(empty.Classify(any), (std::vector<double>{0.5, 0.5}));

  KeywordToyOracle toy({{"A", 2.0}}, -1.0);
  const std::vector<std::string> a = {"A"};
  const std::vector<std::string> none = {"B C"};
  EXPECT_NEAR(toy.Classify(a)[1], 1 / (1 + std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(toy.Classify(none)[1], 1 / (1 + std::exp(1.0)), 1e-15);
  // Repeats count once; the mask token never carries weight.
  const std::vector<std::string> twice = {"A A", "A"};
  EXPECT_EQ(toy.Classify(twice), toy.Classify(a));
  KeywordToyOracle masked({{"[MASK]", 5.0}}, 0.0);
  const std::vector<std::string> m = {"[MASK]"};
  EXPECT_EQ(masked.Classify(m)[1], 0.5);
}

TEST(ToyOracleTest, Argmax) {
  EXPECT_EQ(Argmax(std::vector<double>{0.5, 0.5}), 0u);
  EXPECT_EQ(Argmax(std::vector<double>{0.2, 0.3, 0.3}), 1u);
  EXPECT_NEAR(Logistic(0.0), 0.5, 0);
}

TEST(ImportanceTest, HandComputedKeywordExample) {
  // p(pos) = 0.9 with "A" present and 0.2 without.
  KeywordToyOracle toy({{"A", Logit(0.9) - Logit(0.2)}}, Logit(0.2));
  const std::vector<std::string> s = {"A B"};
  const auto scores = ImportanceScores(s, 0, toy);
  ASSERT_EQ(scores.size(), 2u);
  EXPECT_NEAR(scores[0].score, 1.4, 1e-12);
  EXPECT_EQ(scores[0].masked_label, 0u);
  EXPECT_NEAR(scores[1].score, 0.0, 1e-12);
  EXPECT_EQ(scores[1].masked_label, 1u);
}

TEST(ImportanceTest, MatchesBruteForceOnPairs) {
  KeywordToyOracle toy({{"a", 1.5}, {"b", -0.7}, {"c", 0.2}, {"d", -2.0}},
                       0.1);
  const std::vector<std::string> s = {"a b c d", "c a"};
  CountingOracle counted(toy);
  const auto scores = ImportanceScores(s, 0, counted);
  EXPECT_EQ(counted.calls(), 5u);
  const auto ref = testing::BruteForceImportance(s, 0, toy);
  ASSERT_EQ(scores.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_NEAR(scores[i].score, ref[i], 1e-12);
  }
}

TEST(ImportanceTest, Errors) {
  KeywordToyOracle toy({}, 0.0);
  const std::vector<std::string> s = {"a"};
  EXPECT_THROW(ImportanceScores(s, 1, toy), ValidationError);
  const std::vector<std::string> blank = {"  "};
  EXPECT_THROW(ImportanceScores(blank, 0, toy), ValidationError);
}

class GreedyAttackTest : public ::testing::Test {
 protected:
  // Label 0 exactly when the keyword is present.
  KeywordToyOracle keyword_{{{"बेकार", -3.0}}, 1.0};
  HashingEmbeddingProvider provider_;
  const std::vector<std::string> sentence_ = {"यह फिल्म बेकार थी"};
};

TEST_F(GreedyAttackTest, ConfusableFlipsKeyword) {
  CountingOracle counted(keyword_);
  const AttackOutcome o = GreedyAttack(sentence_, 0, counted, Kinds("ortho"),
                                       SharedBundle(), provider_);
  EXPECT_EQ(o.status, AttackStatus::kSuccess);
  EXPECT_EQ(o.adversarial_segments[0], "यह फिल्म वेकार थी");
  EXPECT_EQ(o.perturbed_word_indices, std::vector<std::size_t>{2});
  EXPECT_EQ(o.final_label, 1u);
  ASSERT_FALSE(o.trace.empty());
  EXPECT_EQ(o.trace[0].word_index, 2u);
  EXPECT_EQ(o.trace[0].decision, WordDecision::kFlipped);
  EXPECT_EQ(o.trace[0].chosen_kind, PerturbationKind::kOrthoConfusable);
  EXPECT_NEAR(o.trace[0].p_y_before, 1.0 - 1.0 / (1.0 + std::exp(2.0)), 1e-12);
  EXPECT_NEAR(o.trace[0].p_y_after, 1.0 - 1.0 / (1.0 + std::exp(-1.0)),
              1e-12);
  EXPECT_EQ(o.queries_used, 1 + 4 + 1u);
  EXPECT_EQ(o.queries_used, counted.calls());
  EXPECT_GE(o.similarity.semantic, 0.6);
  EXPECT_LT(o.similarity.chrf, 1.0);
  ASSERT_TRUE(o.similarity.phonetic.has_value());
}

TEST_F(GreedyAttackTest, EmptyPoolsFail) {
  CountingOracle counted(keyword_);
  const AttackOutcome o = GreedyAttack(sentence_, 0, counted, Kinds(""),
                                       SharedBundle(), provider_);
  EXPECT_EQ(o.status, AttackStatus::kFailed);
  EXPECT_EQ(o.adversarial_segments, o.original_segments);
  EXPECT_TRUE(o.perturbed_word_indices.empty());
  EXPECT_EQ(o.queries_used, 1 + 4u);
  EXPECT_EQ(o.pools_generated, 4u);
  EXPECT_EQ(o.candidates_generated, 0u);
  for (const WordTrace& t : o.trace) {
    EXPECT_EQ(t.decision, WordDecision::kNoCandidates);
  }
  EXPECT_NEAR(o.similarity.semantic, 1.0, 1e-12);
}

TEST_F(GreedyAttackTest, MisclassifiedIsSkipped) {
  CountingOracle counted(keyword_);
  const AttackOutcome o = GreedyAttack(sentence_, 1, counted, Kinds("ortho"),
                                       SharedBundle(), provider_);
  EXPECT_EQ(o.status, AttackStatus::kSkippedOriginalMisclassified);
  EXPECT_EQ(o.queries_used, 1u);
  EXPECT_EQ(counted.calls(), 1u);
  EXPECT_TRUE(o.trace.empty());
}

TEST_F(GreedyAttackTest, CommitsReductionThenFlips) {
  // Each keyword lowers the logit by one; two must go before the label
  // changes.
  KeywordToyOracle toy({{"बेकार", -1.0}, {"खराब", -1.0}, {"घटिया", -1.0}},
                       1.5);
  const std::vector<std::string> s = {"बेकार खराब घटिया"};
  CountingOracle counted(toy);
  const AttackOutcome o = GreedyAttack(s, 0, counted, Kinds("ortho"),
                                       SharedBundle(), provider_);
  ASSERT_EQ(o.status, AttackStatus::kSuccess);
  ASSERT_EQ(o.trace.size(), 2u);
  EXPECT_EQ(o.trace[0].word_index, 0u);  // equal scores: smaller index first
  EXPECT_EQ(o.trace[0].decision, WordDecision::kCommitted);
  EXPECT_LT(o.trace[0].p_y_after, o.trace[0].p_y_before);
  EXPECT_EQ(o.trace[1].word_index, 1u);
  EXPECT_EQ(o.trace[1].decision, WordDecision::kFlipped);
  EXPECT_EQ(o.perturbed_word_indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(o.adversarial_segments[0], "वेकार खराव घटिया");
  EXPECT_EQ(o.queries_used, 1 + 3 + Attempted(o));
  EXPECT_EQ(o.queries_used, counted.calls());
}

TEST_F(GreedyAttackTest, NoReductionLeavesWordAlone) {
  // Weightless words: every candidate leaves p_y unchanged.
  KeywordToyOracle toy({}, -1.0);
  const std::vector<std::string> s = {"बेकार खराब"};
  const AttackOutcome o = GreedyAttack(s, 0, toy, Kinds("phono,ortho"),
                                       SharedBundle(), provider_);
  EXPECT_EQ(o.status, AttackStatus::kFailed);
  EXPECT_EQ(o.adversarial_segments, o.original_segments);
  for (const WordTrace& t : o.trace) {
    EXPECT_EQ(t.decision, WordDecision::kNoReduction);
    EXPECT_EQ(t.queried, t.passed_constraints);
    EXPECT_GT(t.queried, 0u);
  }
}

TEST_F(GreedyAttackTest, QueryAccountingWithRandomKinds) {
  KeywordToyOracle toy({{"फिल्म", 0.4}, {"थी", -0.3}}, 0.2);
  AttackConfig config = Kinds("phono,ortho,rand");
  config.k_per_position = 2;
  config.seed = 11;
  CountingOracle counted(toy);
  const AttackOutcome o =
      GreedyAttack(sentence_, 1, counted, config, SharedBundle(), provider_);
  ASSERT_NE(o.status, AttackStatus::kSkippedOriginalMisclassified);
  EXPECT_EQ(o.queries_used, 1 + o.word_count + Attempted(o));
  EXPECT_EQ(o.queries_used, counted.calls());
  std::size_t pools = 0;
  for (const WordTrace& t : o.trace) {
    EXPECT_LE(t.queried, t.pool_size);
    pools += t.pool_size;
  }
  EXPECT_EQ(pools, o.candidates_generated);
}

TEST_F(GreedyAttackTest, Deterministic) {
  KeywordToyOracle toy({{"फिल्म", 0.4}, {"थी", -0.3}}, 0.2);
  AttackConfig config = Kinds("rand");
  config.k_per_position = 3;
  config.seed = 5;
  const auto a =
      GreedyAttack(sentence_, 1, toy, config, SharedBundle(), provider_);
  const auto b =
      GreedyAttack(sentence_, 1, toy, config, SharedBundle(), provider_);
  EXPECT_EQ(OutcomeToJson(a), OutcomeToJson(b));
  config.seed = 6;
  const auto c =
      GreedyAttack(sentence_, 1, toy, config, SharedBundle(), provider_);
  EXPECT_EQ(c.word_count, a.word_count);
}

TEST_F(GreedyAttackTest, MaxCandidatesCapsPool) {
  AttackConfig config = Kinds("phono,ortho");
  config.max_candidates_per_word = 1;
  KeywordToyOracle toy({}, -1.0);
  const AttackOutcome o =
      GreedyAttack(sentence_, 0, toy, config, SharedBundle(), provider_);
  for (const WordTrace& t : o.trace) EXPECT_LE(t.pool_size, 1u);
}

TEST_F(GreedyAttackTest, SentencePairAttacksTargetOnly) {
  KeywordToyOracle toy({{"बेकार", -3.0}}, 1.0);
  const std::vector<std::string> pair = {"कहानी अच्छी थी", "यह फिल्म बेकार थी"};
  AttackConfig config = Kinds("ortho");
  config.target_segment = 1;
  const AttackOutcome o =
      GreedyAttack(pair, 0, toy, config, SharedBundle(), provider_);
  EXPECT_EQ(o.status, AttackStatus::kSuccess);
  EXPECT_EQ(o.adversarial_segments[0], pair[0]);
  EXPECT_EQ(o.adversarial_segments[1], "यह फिल्म वेकार थी");
  config.target_segment = 2;
  EXPECT_THROW(GreedyAttack(pair, 0, toy, config, SharedBundle(), provider_),
               ValidationError);
}

TEST_F(GreedyAttackTest, MissingScriptRejected) {
  std::vector<ScriptRecord> records;
  for (const ScriptRecord& r : ScriptTable::Builtin().Records()) {
    if (r.script == ScriptId::kDevanagari) records.push_back(r);
  }
  const ResourceBundle dev_only =
      BuildBundle(ScriptTable::FromRecords(records),
                  SharedBundle().phonetic.contains(ScriptId::kDevanagari)
                      ? std::map<ScriptId, PhoneticTable>{
                            {ScriptId::kDevanagari,
                             *SharedBundle().Phonetic(ScriptId::kDevanagari)}}
                      : std::map<ScriptId, PhoneticTable>{},
                  {}, {});
  const std::vector<std::string> bengali = {"ছবিটা খারাপ"};
  EXPECT_THROW(GreedyAttack(bengali, 0, keyword_, Kinds("phono"), dev_only,
                            provider_),
               ValidationError);
}

TEST_F(GreedyAttackTest, GoldLabelRange) {
  EXPECT_THROW(GreedyAttack(sentence_, 2, keyword_, Kinds("phono"),
                            SharedBundle(), provider_),
               ValidationError);
}

TEST(DominantScriptTest, Counts) {
  EXPECT_EQ(DominantScript("abc"), std::nullopt);
  EXPECT_EQ(DominantScript("ক a कख"), ScriptId::kDevanagari);
  EXPECT_EQ(DominantScript("ছবিটা"), ScriptId::kBengaliAssamese);
}

}  // namespace
}  // namespace lingattack
