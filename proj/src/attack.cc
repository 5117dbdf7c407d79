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

#include <algorithm>
#include <array>
#include <numeric>

#include "lingattack/text.h"

namespace lingattack {
namespace {

std::string Compose(std::string_view original,
                    const std::vector<TokenSpan>& spans,
                    const std::vector<std::string>& words) {
  std::string out;
  std::size_t at = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    out.append(original.substr(at, spans[i].begin - at));
    out.append(words[i]);
    at = spans[i].end;
  }
  out.append(original.substr(at));
  return out;
}

std::vector<double> Query(ClassifierOracle& oracle,
                          std::span<const std::string> segments,
                          std::size_t& queries) {
  std::vector<double> probs = oracle.Classify(segments);
  ++queries;  // answered queries only
  if (probs.size() != oracle.num_labels()) {
    throw RemoteError("oracle returned " + std::to_string(probs.size()) +
                      " probabilities, expected " +
                      std::to_string(oracle.num_labels()));
  }
  return probs;
}

void CheckTarget(std::span<const std::string> segments, std::size_t target) {
  if (target >= segments.size()) {
    throw ValidationError("target segment " + std::to_string(target) +
                          " out of range for " +
                          std::to_string(segments.size()) + " segment(s)");
  }
}

// Step 1 given the clean probabilities.
std::vector<WordImportance> ScoreWords(std::span<const std::string> segments,
                                       std::size_t target,
                                       std::span<const double> clean,
                                       ClassifierOracle& oracle,
                                       std::size_t& queries) {
  const std::string& text = segments[target];
  const std::vector<TokenSpan> spans = TokenSpans(text);
  const std::size_t y = Argmax(clean);
  const std::string mask = oracle.mask_token();
  std::vector<std::string> masked(segments.begin(), segments.end());
  std::vector<WordImportance> scores;
  scores.reserve(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    masked[target] = ReplaceToken(text, spans, i, mask);
    std::vector<double> p;
    try {
      p = Query(oracle, masked, queries);
    } catch (const RemoteError& e) {
      throw RemoteError(std::string(e.what()) + " (while masking word " +
                        std::to_string(i) + ")");
    }
    const std::size_t y_bar = Argmax(p);
    double score = clean[y] - p[y];
    if (y_bar != y) score += p[y_bar] - clean[y_bar];
    scores.push_back({i, score, y_bar});
  }
  return scores;
}

}  // namespace

std::string_view AttackStatusName(AttackStatus status) {
  switch (status) {
    case AttackStatus::kSuccess:
      return "success";
    case AttackStatus::kFailed:
      return "failed";
    case AttackStatus::kSkippedOriginalMisclassified:
      return "skipped";
  }
  return "failed";
}

std::string_view WordDecisionName(WordDecision decision) {
  switch (decision) {
    case WordDecision::kFlipped:
      return "flipped";
    case WordDecision::kCommitted:
      return "committed";
    case WordDecision::kNoReduction:
      return "no_reduction";
    case WordDecision::kNoCandidates:
      return "no_candidates";
  }
  return "no_candidates";
}

std::optional<ScriptId> DominantScript(std::string_view text) {
  std::array<std::size_t, kNumScripts> counts{};
  for (char32_t c : ToCodepoints(text)) {
    if (auto s = DetectScript(c)) ++counts[static_cast<std::size_t>(*s)];
  }
  auto it = std::max_element(counts.begin(), counts.end());
  if (*it == 0) return std::nullopt;
  return static_cast<ScriptId>(it - counts.begin());
}

std::vector<WordImportance> ImportanceScores(
    std::span<const std::string> segments, std::size_t target,
    ClassifierOracle& oracle) {
  CheckTarget(segments, target);
  if (TokenSpans(segments[target]).empty()) {
    throw ValidationError("target segment has no words");
  }
  std::size_t queries = 0;
  const std::vector<double> clean = Query(oracle, segments, queries);
  return ScoreWords(segments, target, clean, oracle, queries);
}

AttackOutcome GreedyAttack(std::span<const std::string> segments,
                           std::size_t gold_label, ClassifierOracle& oracle,
                           const AttackConfig& config,
                           const ResourceBundle& bundle,
                           EmbeddingProvider& provider) {
  AttackOutcome out;
  out.target_segment = config.target_segment;
  out.gold_label = gold_label;
  for (const std::string& s : segments) {
    out.original_segments.push_back(NormalizeNfc(s));
  }
  out.adversarial_segments = out.original_segments;
  CheckTarget(out.original_segments, config.target_segment);
  if (gold_label >= oracle.num_labels()) {
    throw ValidationError("gold label " + std::to_string(gold_label) +
                          " out of range for " +
                          std::to_string(oracle.num_labels()) + " labels");
  }
  const std::string& original = out.original_segments[config.target_segment];
  const ScriptId script = config.script.value_or(
      DominantScript(original).value_or(ScriptId::kDevanagari));
  bundle.RequireScript(script);

  const std::vector<TokenSpan> spans = TokenSpans(original);
  out.word_count = spans.size();

  try {
    const std::vector<double> clean =
        Query(oracle, out.original_segments, out.queries_used);
    const std::size_t y = Argmax(clean);
    out.original_label = y;
    out.final_label = y;
    if (y != gold_label) {
      out.status = AttackStatus::kSkippedOriginalMisclassified;
      out.similarity.semantic = 1.0;
      out.similarity.chrf = 1.0;
      out.similarity.bertscore_f1 = 1.0;
      return out;
    }
    out.status = AttackStatus::kFailed;
    if (spans.empty()) return out;

    out.importance = ScoreWords(out.original_segments, config.target_segment,
                                clean, oracle, out.queries_used);
    std::vector<std::size_t> order(spans.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return out.importance[a].score > out.importance[b].score;
                     });

    SimilarityOptions sim_options;
    sim_options.threshold = config.threshold;
    sim_options.chrf_max_n = config.chrf_max_n;
    sim_options.chrf_beta = config.chrf_beta;
    ConstraintChecker checker(original, provider, bundle.Phonetic(script),
                              sim_options);
    PoolOptions pool_options;
    pool_options.script = script;
    pool_options.language = config.language;
    pool_options.k_per_position = config.k_per_position;
    Rng rng(config.seed);

    std::vector<std::string> words = SplitWords(original);
    const std::vector<std::string> original_words = words;
    std::vector<std::string> query_segments = out.original_segments;
    double p_y = clean[y];
    bool succeeded = false;
    SimilarityBreakdown best_flip_similarity;

    for (std::size_t index : order) {
      WordTrace trace;
      trace.word_index = index;
      trace.importance = out.importance[index].score;
      trace.p_y_before = p_y;
      trace.p_y_after = p_y;

      std::vector<Candidate> pool = CandidatePool(
          original_words[index], config.kinds, bundle, pool_options, rng);
      if (config.max_candidates_per_word &&
          pool.size() > *config.max_candidates_per_word) {
        pool.resize(*config.max_candidates_per_word);
      }
      trace.pool_size = pool.size();
      ++out.pools_generated;
      out.candidates_generated += pool.size();

      std::optional<std::size_t> flip;
      SimilarityBreakdown flip_similarity;
      std::size_t flip_label = y;
      double flip_p_y = p_y;
      std::optional<std::size_t> best;
      double best_p_y = p_y;

      for (std::size_t c = 0; c < pool.size(); ++c) {
        words[index] = pool[c].word;
        const std::string adversarial = Compose(original, spans, words);
        const ConstraintResult gate = checker.Check(adversarial);
        if (!gate.passed) continue;
        ++trace.passed_constraints;
        query_segments[config.target_segment] = adversarial;
        const std::vector<double> p =
            Query(oracle, query_segments, out.queries_used);
        ++trace.queried;
        const std::size_t label = Argmax(p);
        if (label != y) {
          if (!flip || gate.similarity.semantic > flip_similarity.semantic) {
            flip = c;
            flip_similarity = gate.similarity;
            flip_label = label;
            flip_p_y = p[y];
          }
        } else if (p[y] < best_p_y) {
          best = c;
          best_p_y = p[y];
        }
      }
      words[index] = original_words[index];

      auto commit = [&](std::size_t c, WordDecision decision) {
        words[index] = pool[c].word;
        out.perturbed_word_indices.push_back(index);
        trace.decision = decision;
        trace.chosen = pool[c].word;
        trace.chosen_kind = pool[c].kind;
        query_segments[config.target_segment] =
            Compose(original, spans, words);
        out.adversarial_segments = query_segments;
      };

      if (flip) {
        commit(*flip, WordDecision::kFlipped);
        out.final_label = flip_label;
        trace.p_y_after = flip_p_y;
        best_flip_similarity = flip_similarity;
        succeeded = true;
        out.trace.push_back(trace);
        break;
      }
      if (best) {
        commit(*best, WordDecision::kCommitted);
        p_y = best_p_y;
        trace.p_y_after = p_y;
      } else {
        trace.decision = trace.passed_constraints == 0
                             ? WordDecision::kNoCandidates
                             : WordDecision::kNoReduction;
        query_segments[config.target_segment] =
            Compose(original, spans, words);
      }
      out.trace.push_back(trace);
    }

    std::sort(out.perturbed_word_indices.begin(),
              out.perturbed_word_indices.end());
    if (succeeded) {
      out.status = AttackStatus::kSuccess;
      out.similarity = best_flip_similarity;
    } else {
      out.status = AttackStatus::kFailed;
      out.similarity =
          checker.Check(out.adversarial_segments[config.target_segment])
              .similarity;
    }
    return out;
  } catch (const Error& e) {
    const bool remote = dynamic_cast<const RemoteError*>(&e) != nullptr;
    throw AttackInterrupted(e.what(), out, remote);
  }
}

}  // namespace lingattack
