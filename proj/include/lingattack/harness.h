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

#ifndef LINGATTACK_HARNESS_H_
#define LINGATTACK_HARNESS_H_

// Attack campaigns over a dataset and the metrics reported for them.
//
// Denominators:
//   original_accuracy      clean-correct / N
//   after_attack_accuracy  still-correct after the attack / N; skipped
//                          examples count as incorrect, failed attacks as
//                          correct
//   pct_perturbed_words    mean over successful attacks
//   similarity means       mean over successful attacks
//   avg_query_number       mean over attacked (non-skipped) examples
//   avg_candidates_per_word  total pool size / pools built
//   avg_word_length        codepoints per word over clean target segments
//   avg_sentence_length    words per clean target segment
// N counts examples that completed; errored examples are reported apart.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/attack.h"

namespace lingattack {

struct Example {
  std::string id;
  std::vector<std::string> segments;
  std::size_t gold_label = 0;
  std::string language;
  ScriptId script = ScriptId::kDevanagari;
};

// JSONL, one object per line:
//   {"id": str, "segments": [str, ...], "gold_label": int,
//    "language": str, "script": str}
// Throws ParseError naming the line on malformed records, ValidationError
// on duplicate ids or inconsistent segment counts.
std::vector<Example> ParseDataset(std::istream& in, std::string_view source);
std::vector<Example> LoadDataset(const std::filesystem::path& path);

struct MetricsRow {
  std::string language;
  std::string perturbation;
  std::size_t target_segment = 0;
  double original_accuracy = 0.0;
  double after_attack_accuracy = 0.0;
  double pct_perturbed_words = 0.0;
  double semantic_similarity = 0.0;
  double overlap_similarity = 0.0;
  double bertscore_similarity = 0.0;
  std::optional<double> phonetic_similarity;
  double avg_candidates_per_word = 0.0;
  double avg_word_length = 0.0;
  double avg_query_number = 0.0;
  double avg_sentence_length = 0.0;
  std::size_t n = 0;
  std::size_t attacked = 0;
  std::size_t succeeded = 0;
  std::size_t skipped = 0;
};

struct EvalConfig {
  AttackConfig attack;
  // Row label, e.g. "Phono"; defaults to the kind list.
  std::string perturbation_label;
};

struct ExampleRecord {
  std::string id;
  std::string language;
  ScriptId script = ScriptId::kDevanagari;
  // Set when the attack completed.
  std::optional<AttackOutcome> outcome;
  // Set when the attack was interrupted; `partial` holds the state reached.
  std::optional<std::string> error;
  bool remote_error = false;
  std::optional<AttackOutcome> partial;
};

struct EvalReport {
  EvalConfig config;
  // Sorted by id.
  std::vector<ExampleRecord> records;
  // One row per language (sorted), then the pooled "all" row.
  std::vector<MetricsRow> rows;

  bool complete() const;
  bool has_remote_error() const;
};

// Reference implementation: one example after another.
EvalReport RunEvalSerial(const std::vector<Example>& dataset,
                         ClassifierOracle& oracle, EmbeddingProvider& provider,
                         const ResourceBundle& bundle,
                         const EvalConfig& config);

// Worker pool over examples (OpenMP). `parallelism` is capped by the
// oracle's and provider's declared concurrency. Produces the same report as
// RunEvalSerial.
EvalReport RunEval(const std::vector<Example>& dataset,
                   ClassifierOracle& oracle, EmbeddingProvider& provider,
                   const ResourceBundle& bundle, const EvalConfig& config,
                   int parallelism);

std::vector<MetricsRow> AggregateMetrics(
    const std::vector<ExampleRecord>& records, const EvalConfig& config);

// Report serialization. JSON carries "schema": 1, the denominator
// conventions, the config, every per-example outcome and the metric rows.
std::string ReportToJson(const EvalReport& report);
// One MetricsRow per line, columns in result-table order.
std::string ReportToCsv(const EvalReport& report);
std::string OutcomeToJson(const AttackOutcome& outcome);

// Seeded uniform sample of `n` successful (original, adversarial) target
// segments in shuffled order, as TSV with a header. Throws ValidationError
// when fewer than `n` attacks succeeded.
std::string HumanEvalSampleTsv(const EvalReport& report, std::size_t n,
                               uint64_t seed);
void ExportHumanEvalSample(const EvalReport& report, std::size_t n,
                           uint64_t seed,
                           const std::filesystem::path& path);

}  // namespace lingattack

#endif  // LINGATTACK_HARNESS_H_
