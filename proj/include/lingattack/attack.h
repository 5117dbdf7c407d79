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

#ifndef LINGATTACK_ATTACK_H_
#define LINGATTACK_ATTACK_H_

// Two-step black-box attack on one segment of an input.
//
// Step 1 ranks the words of the target segment by how much masking each
// one moves the classifier:
//
//   I(w_i) = (p_y(W) - p_y(W\w_i)) + [y != y'] (p_y'(W\w_i) - p_y'(W))
//
// where y is the clean prediction, W\w_i replaces w_i with the oracle's
// mask token and y' is the prediction on W\w_i.
//
// Step 2 walks the words by decreasing importance. Each word's candidate
// pool is filtered by the semantic-similarity gate and every survivor is
// queried. A label-flipping survivor (highest semantic similarity first)
// is committed and ends the attack; otherwise the survivor that lowers
// p_y the most is committed and the walk continues.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lingattack/error.h"
#include "lingattack/oracle.h"
#include "lingattack/perturb.h"
#include "lingattack/resources.h"
#include "lingattack/similarity.h"

namespace lingattack {

struct WordImportance {
  std::size_t word_index = 0;
  double score = 0.0;
  std::size_t masked_label = 0;
};

// Makes exactly 1 + (word count) oracle calls. Throws ValidationError when
// the target segment is missing or has no words.
std::vector<WordImportance> ImportanceScores(
    std::span<const std::string> segments, std::size_t target,
    ClassifierOracle& oracle);

struct AttackConfig {
  KindSet kinds;
  std::size_t target_segment = 0;
  double threshold = 0.6;
  uint64_t seed = 0;
  std::size_t k_per_position = 1;
  std::optional<std::size_t> max_candidates_per_word;
  // Detected from the target segment when unset.
  std::optional<ScriptId> script;
  // Synonym lexicon language.
  std::string language;
  int chrf_max_n = 6;
  double chrf_beta = 2.0;
};

enum class AttackStatus { kSuccess, kFailed, kSkippedOriginalMisclassified };
std::string_view AttackStatusName(AttackStatus status);

enum class WordDecision {
  kFlipped,        // committed a label-changing candidate
  kCommitted,      // committed the largest p_y reduction
  kNoReduction,    // survivors queried, none lowered p_y
  kNoCandidates,   // empty pool or nothing passed the gate
};
std::string_view WordDecisionName(WordDecision decision);

struct WordTrace {
  std::size_t word_index = 0;
  double importance = 0.0;
  std::size_t pool_size = 0;
  std::size_t passed_constraints = 0;
  std::size_t queried = 0;
  WordDecision decision = WordDecision::kNoCandidates;
  std::optional<std::string> chosen;
  std::optional<PerturbationKind> chosen_kind;
  double p_y_before = 0.0;
  double p_y_after = 0.0;
};

struct AttackOutcome {
  AttackStatus status = AttackStatus::kFailed;
  std::vector<std::string> original_segments;
  std::vector<std::string> adversarial_segments;
  std::size_t target_segment = 0;
  std::size_t gold_label = 0;
  // Clean prediction y.
  std::size_t original_label = 0;
  std::size_t final_label = 0;
  std::vector<std::size_t> perturbed_word_indices;
  std::size_t word_count = 0;
  std::size_t queries_used = 0;
  // Number of pools built and their total size.
  std::size_t pools_generated = 0;
  std::size_t candidates_generated = 0;
  SimilarityBreakdown similarity;
  std::vector<WordImportance> importance;
  std::vector<WordTrace> trace;
};

// Raised when the oracle or provider fails mid-attack; carries the state
// reached so far.
class AttackInterrupted : public Error {
 public:
  AttackInterrupted(const std::string& what, AttackOutcome partial,
                    bool remote_failure)
      : Error(what),
        partial_(std::move(partial)),
        remote_failure_(remote_failure) {}

  const AttackOutcome& partial() const { return partial_; }
  bool remote_failure() const { return remote_failure_; }

 private:
  AttackOutcome partial_;
  bool remote_failure_;
};

// Segments are NFC-normalized before anything else. Throws
// ValidationError on a bad target segment, gold label or missing script
// resources; AttackInterrupted on oracle/provider failure.
AttackOutcome GreedyAttack(std::span<const std::string> segments,
                           std::size_t gold_label, ClassifierOracle& oracle,
                           const AttackConfig& config,
                           const ResourceBundle& bundle,
                           EmbeddingProvider& provider);

// Most frequent Indic script among the codepoints of `text`.
std::optional<ScriptId> DominantScript(std::string_view text);

}  // namespace lingattack

#endif  // LINGATTACK_ATTACK_H_
