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

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "lingattack/harness.h"

namespace lingattack {
namespace {

using nlohmann::ordered_json;

ordered_json OptionalNumber(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json SimilarityJson(const SimilarityBreakdown& s) {
  ordered_json j;
  j["semantic"] = s.semantic;
  j["chrf"] = s.chrf;
  j["bertscore_f1"] = s.bertscore_f1;
  j["phonetic"] = OptionalNumber(s.phonetic);
  return j;
}

ordered_json OutcomeJsonValue(const AttackOutcome& o) {
  ordered_json j;
  j["status"] = AttackStatusName(o.status);
  j["target_segment"] = o.target_segment;
  j["gold_label"] = o.gold_label;
  j["original_label"] = o.original_label;
  j["final_label"] = o.final_label;
  j["original_segments"] = o.original_segments;
  j["adversarial_segments"] = o.adversarial_segments;
  j["perturbed_word_indices"] = o.perturbed_word_indices;
  j["word_count"] = o.word_count;
  j["queries_used"] = o.queries_used;
  j["pools_generated"] = o.pools_generated;
  j["candidates_generated"] = o.candidates_generated;
  j["similarity"] = SimilarityJson(o.similarity);
  ordered_json importance = ordered_json::array();
  for (const WordImportance& w : o.importance) {
    importance.push_back({{"word_index", w.word_index},
                          {"score", w.score},
                          {"masked_label", w.masked_label}});
  }
  j["importance"] = std::move(importance);
  ordered_json trace = ordered_json::array();
  for (const WordTrace& t : o.trace) {
    ordered_json tj;
    tj["word_index"] = t.word_index;
    tj["importance"] = t.importance;
    tj["pool_size"] = t.pool_size;
    tj["passed_constraints"] = t.passed_constraints;
    tj["queried"] = t.queried;
    tj["decision"] = WordDecisionName(t.decision);
    tj["chosen"] = t.chosen ? ordered_json(*t.chosen) : ordered_json(nullptr);
    tj["chosen_kind"] = t.chosen_kind ? ordered_json(KindName(*t.chosen_kind))
                                      : ordered_json(nullptr);
    tj["p_y_before"] = t.p_y_before;
    tj["p_y_after"] = t.p_y_after;
    trace.push_back(std::move(tj));
  }
  j["trace"] = std::move(trace);
  return j;
}

ordered_json RowJson(const MetricsRow& r) {
  ordered_json j;
  j["language"] = r.language;
  j["perturbation"] = r.perturbation;
  j["target_segment"] = r.target_segment;
  j["original_accuracy"] = r.original_accuracy;
  j["after_attack_accuracy"] = r.after_attack_accuracy;
  j["pct_perturbed_words"] = r.pct_perturbed_words;
  j["semantic_similarity"] = r.semantic_similarity;
  j["overlap_similarity"] = r.overlap_similarity;
  j["bertscore_similarity"] = r.bertscore_similarity;
  j["phonetic_similarity"] = OptionalNumber(r.phonetic_similarity);
  j["avg_candidates_per_word"] = r.avg_candidates_per_word;
  j["avg_word_length"] = r.avg_word_length;
  j["avg_query_number"] = r.avg_query_number;
  j["avg_sentence_length"] = r.avg_sentence_length;
  j["n"] = r.n;
  j["attacked"] = r.attacked;
  j["succeeded"] = r.succeeded;
  j["skipped"] = r.skipped;
  return j;
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string OutcomeToJson(const AttackOutcome& outcome) {
  return OutcomeJsonValue(outcome).dump(2);
}

std::string ReportToJson(const EvalReport& report) {
  const AttackConfig& a = report.config.attack;
  ordered_json j;
  j["schema"] = 1;
  j["conventions"] = {
      {"original_accuracy", "clean-correct / N"},
      {"after_attack_accuracy",
       "still-correct after attack / N; skipped count as incorrect, failed "
       "attacks as correct"},
      {"pct_perturbed_words", "mean over successful attacks"},
      {"similarity", "means over successful attacks"},
      {"avg_query_number", "mean over attacked (non-skipped) examples"},
      {"avg_candidates_per_word", "total pool size / pools built"},
      {"lengths", "clean target segments; words are whitespace tokens, "
                  "length in codepoints"},
      {"n", "examples that completed; errored examples are listed apart"},
  };
  ordered_json config;
  config["perturbation"] = report.config.perturbation_label;
  config["kinds"] = FormatKinds(a.kinds);
  config["target_segment"] = a.target_segment;
  config["threshold"] = a.threshold;
  config["seed"] = a.seed;
  config["k_per_position"] = a.k_per_position;
  config["max_candidates_per_word"] =
      a.max_candidates_per_word ? ordered_json(*a.max_candidates_per_word)
                                : ordered_json(nullptr);
  config["chrf_max_n"] = a.chrf_max_n;
  config["chrf_beta"] = a.chrf_beta;
  j["config"] = std::move(config);
  j["complete"] = report.complete();

  ordered_json metrics = ordered_json::array();
  for (const MetricsRow& r : report.rows) metrics.push_back(RowJson(r));
  j["metrics"] = std::move(metrics);

  ordered_json outcomes = ordered_json::array();
  ordered_json errors = ordered_json::array();
  for (const ExampleRecord& r : report.records) {
    if (r.outcome) {
      ordered_json o;
      o["id"] = r.id;
      o["language"] = r.language;
      o["script"] = ScriptName(r.script);
      ordered_json outcome = OutcomeJsonValue(*r.outcome);
      for (auto& [key, value] : outcome.items()) o[key] = std::move(value);
      outcomes.push_back(std::move(o));
    }
    if (r.error) {
      ordered_json e;
      e["id"] = r.id;
      e["message"] = *r.error;
      e["remote"] = r.remote_error;
      if (r.partial) {
        e["queries_used"] = r.partial->queries_used;
        e["perturbed_word_indices"] = r.partial->perturbed_word_indices;
      }
      errors.push_back(std::move(e));
    }
  }
  j["outcomes"] = std::move(outcomes);
  j["errors"] = std::move(errors);
  return j.dump(2) + "\n";
}

std::string ReportToCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "language,perturbation,target_segment,original_accuracy,"
         "after_attack_accuracy,pct_perturbed_words,semantic_similarity,"
         "overlap_similarity,bertscore_similarity,phonetic_similarity,"
         "avg_candidates_per_word,avg_word_length,avg_query_number,"
         "avg_sentence_length,n,attacked,succeeded,skipped\n";
  for (const MetricsRow& r : report.rows) {
    out << CsvField(r.language) << ',' << CsvField(r.perturbation) << ','
        << r.target_segment
        << ',' << Fixed(r.original_accuracy) << ','
        << Fixed(r.after_attack_accuracy) << ','
        << Fixed(r.pct_perturbed_words) << ','
        << Fixed(r.semantic_similarity) << ','
        << Fixed(r.overlap_similarity) << ','
        << Fixed(r.bertscore_similarity) << ','
        << (r.phonetic_similarity ? Fixed(*r.phonetic_similarity) : "-")
        << ',' << Fixed(r.avg_candidates_per_word) << ','
        << Fixed(r.avg_word_length) << ',' << Fixed(r.avg_query_number) << ','
        << Fixed(r.avg_sentence_length) << ',' << r.n << ',' << r.attacked
        << ',' << r.succeeded << ',' << r.skipped << '\n';
  }
  return out.str();
}

}  // namespace lingattack
