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

#include "lingattack/harness.h"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lingattack/error.h"
#include "lingattack/rng.h"
#include "lingattack/text.h"

namespace lingattack {
namespace {

using nlohmann::json;

// Sums for one MetricsRow.
struct Accumulator {
  std::size_t n = 0;
  std::size_t clean_correct = 0;
  std::size_t after_correct = 0;
  std::size_t attacked = 0;
  std::size_t succeeded = 0;
  std::size_t skipped = 0;
  double pct_perturbed = 0.0;
  double semantic = 0.0;
  double chrf = 0.0;
  double bertscore = 0.0;
  double phonetic = 0.0;
  std::size_t phonetic_n = 0;
  std::size_t queries = 0;
  std::size_t candidates = 0;
  std::size_t pools = 0;
  std::size_t word_chars = 0;
  std::size_t words = 0;

  void Add(const AttackOutcome& o) {
    ++n;
    const std::vector<std::string> clean_words =
        SplitWords(o.original_segments.at(o.target_segment));
    words += clean_words.size();
    for (const std::string& w : clean_words) {
      word_chars += ToCodepoints(w).size();
    }
    candidates += o.candidates_generated;
    pools += o.pools_generated;
    if (o.status == AttackStatus::kSkippedOriginalMisclassified) {
      ++skipped;
      return;
    }
    ++clean_correct;
    ++attacked;
    queries += o.queries_used;
    if (o.status == AttackStatus::kFailed) {
      ++after_correct;
      return;
    }
    ++succeeded;
    if (o.word_count > 0) {
      pct_perturbed += 100.0 * static_cast<double>(o.perturbed_word_indices.size()) /
                       static_cast<double>(o.word_count);
    }
    semantic += o.similarity.semantic;
    chrf += o.similarity.chrf;
    bertscore += o.similarity.bertscore_f1;
    if (o.similarity.phonetic) {
      phonetic += *o.similarity.phonetic;
      ++phonetic_n;
    }
  }

  MetricsRow Row(const std::string& language, const EvalConfig& config) const {
    auto ratio = [](double num, std::size_t den) {
      return den == 0 ? 0.0 : num / static_cast<double>(den);
    };
    MetricsRow r;
    r.language = language;
    r.perturbation = config.perturbation_label.empty()
                         ? FormatKinds(config.attack.kinds)
                         : config.perturbation_label;
    r.target_segment = config.attack.target_segment;
    r.original_accuracy = ratio(static_cast<double>(clean_correct), n);
    r.after_attack_accuracy = ratio(static_cast<double>(after_correct), n);
    r.pct_perturbed_words = ratio(pct_perturbed, succeeded);
    r.semantic_similarity = ratio(semantic, succeeded);
    r.overlap_similarity = ratio(chrf, succeeded);
    r.bertscore_similarity = ratio(bertscore, succeeded);
    if (phonetic_n > 0) r.phonetic_similarity = phonetic / phonetic_n;
    r.avg_candidates_per_word = ratio(static_cast<double>(candidates), pools);
    r.avg_word_length = ratio(static_cast<double>(word_chars), words);
    r.avg_query_number = ratio(static_cast<double>(queries), attacked);
    r.avg_sentence_length = ratio(static_cast<double>(words), n);
    r.n = n;
    r.attacked = attacked;
    r.succeeded = succeeded;
    r.skipped = skipped;
    return r;
  }
};

void Validate(const std::vector<Example>& dataset, ClassifierOracle& oracle,
              const ResourceBundle& bundle, const EvalConfig& config) {
  std::set<ScriptId> scripts;
  for (const Example& e : dataset) {
    if (config.attack.target_segment >= e.segments.size()) {
      throw ValidationError("example " + e.id + " has no segment " +
                            std::to_string(config.attack.target_segment));
    }
    if (e.gold_label >= oracle.num_labels()) {
      throw ValidationError("example " + e.id + " has gold label " +
                            std::to_string(e.gold_label) + " but the oracle has " +
                            std::to_string(oracle.num_labels()) + " labels");
    }
    scripts.insert(e.script);
  }
  for (ScriptId s : scripts) bundle.RequireScript(s);
}

ExampleRecord AttackOne(const Example& e, ClassifierOracle& oracle,
                        EmbeddingProvider& provider,
                        const ResourceBundle& bundle,
                        const EvalConfig& config) {
  ExampleRecord record;
  record.id = e.id;
  record.language = e.language;
  record.script = e.script;
  AttackConfig attack = config.attack;
  attack.seed = DeriveSeed(config.attack.seed, e.id);
  attack.script = e.script;
  attack.language = e.language;
  try {
    record.outcome =
        GreedyAttack(e.segments, e.gold_label, oracle, attack, bundle, provider);
  } catch (const AttackInterrupted& err) {
    record.error = err.what();
    record.remote_error = err.remote_failure();
    record.partial = err.partial();
  } catch (const std::exception& err) {
    record.error = err.what();
    record.remote_error = dynamic_cast<const RemoteError*>(&err) != nullptr;
  }
  return record;
}

EvalReport Finish(std::vector<ExampleRecord> records,
                  const EvalConfig& config) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ExampleRecord& a, const ExampleRecord& b) {
                     return a.id < b.id;
                   });
  EvalReport report;
  report.config = config;
  report.rows = AggregateMetrics(records, config);
  report.records = std::move(records);
  return report;
}

std::string TsvField(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::vector<Example> ParseDataset(std::istream& in, std::string_view source) {
  std::vector<Example> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  std::optional<std::size_t> segment_count;
  while (std::getline(in, line)) {
    ++number;
    const std::string where = std::string(source) + ":" + std::to_string(number);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(where + ": invalid JSON: " + e.what());
    }
    auto require = [&](const char* key) -> const json& {
      if (!record.is_object() || !record.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
      }
      return record.at(key);
    };
    Example e;
    try {
      e.id = require("id").get<std::string>();
      if (!require("segments").is_array()) {
        throw ParseError(where + ": segments must be an array");
      }
      for (const json& s : require("segments")) {
        e.segments.push_back(NormalizeNfc(s.get<std::string>()));
      }
      const json& label = require("gold_label");
      if (!label.is_number_integer() || label.get<long long>() < 0) {
        throw ParseError(where + ": gold_label must be a non-negative integer");
      }
      e.gold_label = label.get<std::size_t>();
      e.language = require("language").get<std::string>();
      const std::string script = require("script").get<std::string>();
      auto id = ParseScriptName(script);
      if (!id) throw ParseError(where + ": unknown script '" + script + "'");
      e.script = *id;
    } catch (const json::exception& ex) {
      throw ParseError(where + ": " + ex.what());
    }
    if (e.segments.empty()) {
      throw ParseError(where + ": segments must be non-empty");
    }
    if (segment_count && *segment_count != e.segments.size()) {
      throw ValidationError(where + ": inconsistent segment count (" +
                            std::to_string(e.segments.size()) + " vs " +
                            std::to_string(*segment_count) + ")");
    }
    segment_count = e.segments.size();
    if (!ids.insert(e.id).second) {
      throw ValidationError(where + ": duplicate id '" + e.id + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Example> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return ParseDataset(in, path.string());
}

bool EvalReport::complete() const {
  return std::none_of(records.begin(), records.end(),
                      [](const ExampleRecord& r) { return r.error.has_value(); });
}

bool EvalReport::has_remote_error() const {
  return std::any_of(records.begin(), records.end(),
                     [](const ExampleRecord& r) { return r.remote_error; });
}

std::vector<MetricsRow> AggregateMetrics(
    const std::vector<ExampleRecord>& records, const EvalConfig& config) {
  std::map<std::string, Accumulator> by_language;
  Accumulator all;
  for (const ExampleRecord& r : records) {
    if (!r.outcome) continue;
    by_language[r.language].Add(*r.outcome);
    all.Add(*r.outcome);
  }
  std::vector<MetricsRow> rows;
  for (const auto& [language, acc] : by_language) {
    rows.push_back(acc.Row(language, config));
  }
  rows.push_back(all.Row("all", config));
  return rows;
}

EvalReport RunEvalSerial(const std::vector<Example>& dataset,
                         ClassifierOracle& oracle, EmbeddingProvider& provider,
                         const ResourceBundle& bundle,
                         const EvalConfig& config) {
  Validate(dataset, oracle, bundle, config);
  std::vector<ExampleRecord> records;
  records.reserve(dataset.size());
  for (const Example& e : dataset) {
    records.push_back(AttackOne(e, oracle, provider, bundle, config));
  }
  return Finish(std::move(records), config);
}

EvalReport RunEval(const std::vector<Example>& dataset,
                   ClassifierOracle& oracle, EmbeddingProvider& provider,
                   const ResourceBundle& bundle, const EvalConfig& config,
                   int parallelism) {
  int jobs = std::max(1, parallelism);
  for (int cap : {oracle.max_concurrency(), provider.max_concurrency()}) {
    if (cap > 0) jobs = std::min(jobs, cap);
  }
  if (jobs == 1) {
    return RunEvalSerial(dataset, oracle, provider, bundle, config);
  }
  Validate(dataset, oracle, bundle, config);
  std::vector<ExampleRecord> records(dataset.size());
  const auto n = static_cast<std::ptrdiff_t>(dataset.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    records[i] = AttackOne(dataset[i], oracle, provider, bundle, config);
  }
  return Finish(std::move(records), config);
}

std::string HumanEvalSampleTsv(const EvalReport& report, std::size_t n,
                               uint64_t seed) {
  std::vector<const ExampleRecord*> successes;
  for (const ExampleRecord& r : report.records) {
    if (r.outcome && r.outcome->status == AttackStatus::kSuccess) {
      successes.push_back(&r);
    }
  }
  if (successes.size() < n) {
    throw ValidationError("requested " + std::to_string(n) +
                          " human-evaluation pairs but only " +
                          std::to_string(successes.size()) +
                          " attacks succeeded");
  }
  Rng rng(seed);
  std::vector<std::size_t> picks =
      SampleWithoutReplacement(rng, successes.size(), n);
  Shuffle(rng, picks);
  std::ostringstream out;
  out << "id\toriginal\tadversarial\n";
  for (std::size_t p : picks) {
    const AttackOutcome& o = *successes[p]->outcome;
    out << TsvField(successes[p]->id) << '\t'
        << TsvField(o.original_segments[o.target_segment]) << '\t'
        << TsvField(o.adversarial_segments[o.target_segment]) << '\n';
  }
  return out.str();
}

void ExportHumanEvalSample(const EvalReport& report, std::size_t n,
                           uint64_t seed, const std::filesystem::path& path) {
  const std::string tsv = HumanEvalSampleTsv(report, n, seed);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << tsv;
}

}  // namespace lingattack
