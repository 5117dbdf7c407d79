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

#include "lingattack/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lingattack/attack.h"
#include "lingattack/error.h"
#include "lingattack/harness.h"
#include "lingattack/perturb.h"
#include "lingattack/remote.h"
#include "lingattack/resources.h"
#include "lingattack/script.h"
#include "lingattack/similarity.h"
#include "lingattack/text.h"

#ifndef LINGATTACK_DEFAULT_RESOURCE_DIR
#define LINGATTACK_DEFAULT_RESOURCE_DIR "data/resources"
#endif

namespace lingattack {
namespace {

struct GlobalOptions {
  std::string resources;
  uint64_t seed = 0;
  bool include_optional = false;
};

struct SourceOptions {
  std::string oracle_url;
  std::string toy_oracle;
  double toy_bias = 0.0;
  std::string provider_url;
  bool stub_provider = false;
};

struct AttackOptions {
  std::string kinds = "phono,ortho";
  std::size_t target = 0;
  double threshold = 0.6;
  std::size_t k_per_position = 1;
  std::optional<std::size_t> max_candidates;
  std::string script;
  std::string language;
};

ScriptId RequireScriptName(const std::string& name) {
  auto s = ParseScriptName(name);
  if (!s) throw CLI::ValidationError("unknown script '" + name + "'");
  return *s;
}

std::string ResourceDir(const GlobalOptions& g) {
  if (!g.resources.empty()) return g.resources;
  if (const char* env = std::getenv("RESOURCE_DIR"); env && *env) return env;
  return LINGATTACK_DEFAULT_RESOURCE_DIR;
}

ResourceBundle Bundle(const GlobalOptions& g, std::ostream& err) {
  LoadOptions options;
  options.include_optional = g.include_optional;
  ResourceBundle bundle = LoadBundle(ResourceDir(g), options);
  for (const std::string& w : bundle.warnings) err << "warning: " << w << '\n';
  return bundle;
}

void AddSourceFlags(CLI::App* cmd, SourceOptions& s, bool needs_oracle) {
  if (needs_oracle) {
    auto* url = cmd->add_option("--oracle-url", s.oracle_url,
                                "Remote classifier, http://host:port");
    auto* toy = cmd->add_option("--toy-oracle", s.toy_oracle,
                                "Keyword weight TSV for the built-in toy oracle");
    url->excludes(toy);
    toy->excludes(url);
    cmd->add_option("--toy-bias", s.toy_bias, "Toy oracle bias");
  }
  auto* purl = cmd->add_option("--provider-url", s.provider_url,
                               "Remote embedding provider, http://host:port");
  auto* stub = cmd->add_flag("--stub-provider", s.stub_provider,
                             "Use the built-in hashing embedding provider "
                             "(default)");
  purl->excludes(stub);
  stub->excludes(purl);
}

std::unique_ptr<ClassifierOracle> MakeOracle(const SourceOptions& s) {
  if (!s.oracle_url.empty()) {
    return std::make_unique<RemoteClassifierOracle>(s.oracle_url);
  }
  if (s.toy_oracle.empty()) {
    throw CLI::ValidationError("one of --oracle-url or --toy-oracle is required");
  }
  auto toy = LoadKeywordToyOracle(s.toy_oracle);
  if (s.toy_bias != 0.0) {
    toy = std::make_unique<KeywordToyOracle>(toy->weights(), s.toy_bias);
  }
  return toy;
}

std::unique_ptr<EmbeddingProvider> MakeProvider(const SourceOptions& s) {
  if (!s.provider_url.empty()) {
    return std::make_unique<RemoteEmbeddingProvider>(s.provider_url);
  }
  return std::make_unique<HashingEmbeddingProvider>();
}

void AddAttackFlags(CLI::App* cmd, AttackOptions& a) {
  cmd->add_option("--kinds", a.kinds, "Perturbation kinds or groups")
      ->capture_default_str();
  cmd->add_option("--target", a.target, "Index of the segment to attack")
      ->capture_default_str();
  cmd->add_option("--threshold", a.threshold, "Semantic similarity gate")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--k", a.k_per_position,
                  "Random samples per position")
      ->capture_default_str();
  cmd->add_option("--max-candidates", a.max_candidates,
                  "Cap on candidates per word");
}

AttackConfig ToConfig(const AttackOptions& a, const GlobalOptions& g) {
  AttackConfig config;
  config.kinds = ParseKinds(a.kinds);
  config.target_segment = a.target;
  config.threshold = a.threshold;
  config.seed = g.seed;
  config.k_per_position = a.k_per_position;
  config.max_candidates_per_word = a.max_candidates;
  if (!a.script.empty()) config.script = RequireScriptName(a.script);
  config.language = a.language;
  return config;
}

nlohmann::ordered_json BreakdownJson(const ConstraintResult& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed;
  j["semantic"] = r.similarity.semantic;
  j["chrf"] = r.similarity.chrf;
  j["bertscore_f1"] = r.similarity.bertscore_f1;
  j["phonetic"] = r.similarity.phonetic
                      ? nlohmann::ordered_json(*r.similarity.phonetic)
                      : nlohmann::ordered_json(nullptr);
  return j;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << contents;
}

EvalReport UnreachableReport(const std::vector<Example>& dataset,
                             const EvalConfig& config,
                             const std::string& message) {
  EvalReport report;
  report.config = config;
  for (const Example& ex : dataset) {
    ExampleRecord r;
    r.id = ex.id;
    r.language = ex.language;
    r.script = ex.script;
    r.error = message;
    r.remote_error = true;
    report.records.push_back(std::move(r));
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const ExampleRecord& a, const ExampleRecord& b) {
              return a.id < b.id;
            });
  report.rows = AggregateMetrics(report.records, config);
  return report;
}

std::string CodepointList(const std::u32string& cps) {
  std::string out;
  for (char32_t c : cps) {
    if (!out.empty()) out += ' ';
    out += "U+" + HexCodepoint(c);
  }
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Linguistic adversarial attacks on Indic text classifiers",
               "lingattack"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--resources", g.resources,
                 "Resource bundle directory (default: $RESOURCE_DIR)");
  app.add_option("--seed", g.seed, "Seed for all randomness")
      ->capture_default_str();
  app.add_flag("--include-optional", g.include_optional,
               "Load phonetic rows flagged optional");

  // perturb
  auto* perturb = app.add_subcommand("perturb", "Print the candidate pool");
  std::string word;
  std::string perturb_kinds = "phono,ortho";
  std::string perturb_script;
  std::string perturb_language;
  std::size_t perturb_k = 1;
  perturb->add_option("word", word)->required();
  perturb->add_option("--kinds", perturb_kinds)->capture_default_str();
  perturb->add_option("--script", perturb_script);
  perturb->add_option("--language", perturb_language,
                      "Synonym lexicon language");
  perturb->add_option("--k", perturb_k)->capture_default_str();

  // translit
  auto* translit = app.add_subcommand("translit", "Transliterate text");
  std::string translit_text, from, to;
  translit->add_option("text", translit_text)->required();
  translit->add_option("--from", from)->required();
  translit->add_option("--to", to)->required();

  // sim
  auto* sim = app.add_subcommand("sim", "Similarity breakdown of two texts");
  std::string sim_a, sim_b, sim_script;
  double sim_threshold = 0.6;
  SourceOptions sim_sources;
  sim->add_option("original", sim_a)->required();
  sim->add_option("adversarial", sim_b)->required();
  sim->add_option("--script", sim_script);
  sim->add_option("--threshold", sim_threshold)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  AddSourceFlags(sim, sim_sources, /*needs_oracle=*/false);

  // attack
  auto* attack = app.add_subcommand("attack", "Attack one input");
  std::vector<std::string> attack_text;
  std::string attack_file;
  std::size_t attack_label = 0;
  SourceOptions attack_sources;
  AttackOptions attack_options;
  auto* text_opt = attack->add_option(
      "--text", attack_text, "Input segment (repeat for sentence pairs)");
  auto* file_opt =
      attack->add_option("--file", attack_file, "File with one segment per line");
  text_opt->excludes(file_opt);
  file_opt->excludes(text_opt);
  attack->add_option("--label", attack_label, "Gold label")->required();
  attack->add_option("--script", attack_options.script);
  attack->add_option("--language", attack_options.language);
  AddAttackFlags(attack, attack_options);
  AddSourceFlags(attack, attack_sources, /*needs_oracle=*/true);

  // eval
  auto* eval = app.add_subcommand("eval", "Run an attack campaign");
  std::string dataset_path, out_prefix, perturbation_label;
  int jobs = 1;
  std::size_t human_eval_n = 0;
  std::string human_eval_out;
  SourceOptions eval_sources;
  AttackOptions eval_options;
  eval->add_option("--dataset", dataset_path, "Dataset JSONL")->required();
  eval->add_option("--out", out_prefix,
                   "Output prefix; writes PREFIX.json and PREFIX.csv")
      ->required();
  eval->add_option("--jobs", jobs, "Parallel workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--name", perturbation_label,
                   "Perturbation label for the metric rows");
  eval->add_option("--human-eval", human_eval_n,
                   "Export this many successful pairs for annotation");
  eval->add_option("--human-eval-out", human_eval_out,
                   "Annotation sample path (default PREFIX.human.tsv)");
  AddAttackFlags(eval, eval_options);
  AddSourceFlags(eval, eval_sources, /*needs_oracle=*/true);

  // resources validate
  auto* resources = app.add_subcommand("resources", "Resource bundle tools");
  resources->require_subcommand(1);
  auto* validate = resources->add_subcommand("validate", "Load and check");
  std::vector<std::string> require_scripts;
  validate->add_option("--require", require_scripts,
                       "Scripts that must be covered");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (perturb->parsed()) {
      const ResourceBundle bundle = Bundle(g, err);
      const std::string w = NormalizeNfc(word);
      PoolOptions options;
      options.script = perturb_script.empty()
                           ? DominantScript(w).value_or(ScriptId::kDevanagari)
                           : RequireScriptName(perturb_script);
      options.language = perturb_language;
      options.k_per_position = perturb_k;
      bundle.RequireScript(options.script);
      Rng rng(g.seed);
      for (const Candidate& c :
           CandidatePool(w, ParseKinds(perturb_kinds), bundle, options, rng)) {
        out << c.word << '\t' << KindName(c.kind) << '\t'
            << c.position.akshara << '\t' << c.position.codepoint << '\t'
            << CodepointList(c.replaced) << " -> "
            << CodepointList(c.replacement) << '\n';
      }
    } else if (translit->parsed()) {
      out << TransliterateText(translit_text, RequireScriptName(from),
                               RequireScriptName(to))
          << '\n';
    } else if (sim->parsed()) {
      const ResourceBundle bundle = Bundle(g, err);
      auto provider = MakeProvider(sim_sources);
      const std::string a = NormalizeNfc(sim_a);
      const std::string b = NormalizeNfc(sim_b);
      const ScriptId script =
          sim_script.empty() ? DominantScript(a).value_or(ScriptId::kDevanagari)
                             : RequireScriptName(sim_script);
      SimilarityOptions options;
      options.threshold = sim_threshold;
      out << BreakdownJson(PassesConstraints(a, b, *provider,
                                             bundle.Phonetic(script), options))
                 .dump(2)
          << '\n';
    } else if (attack->parsed()) {
      std::vector<std::string> segments = attack_text;
      if (!attack_file.empty()) {
        std::ifstream in(attack_file);
        if (!in) throw ParseError("cannot open " + attack_file);
        for (std::string line; std::getline(in, line);) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          segments.push_back(line);
        }
      }
      if (segments.empty()) {
        throw CLI::ValidationError("one of --text or --file is required");
      }
      const ResourceBundle bundle = Bundle(g, err);
      auto oracle = MakeOracle(attack_sources);
      auto provider = MakeProvider(attack_sources);
      const AttackOutcome outcome =
          GreedyAttack(segments, attack_label, *oracle,
                       ToConfig(attack_options, g), bundle, *provider);
      out << OutcomeToJson(outcome) << '\n';
    } else if (eval->parsed()) {
      const ResourceBundle bundle = Bundle(g, err);
      const std::vector<Example> dataset = LoadDataset(dataset_path);
      EvalConfig config;
      config.attack = ToConfig(eval_options, g);
      config.perturbation_label = perturbation_label;
      EvalReport report;
      bool unreachable = false;
      try {
        auto oracle = MakeOracle(eval_sources);
        auto provider = MakeProvider(eval_sources);
        report = RunEval(dataset, *oracle, *provider, bundle, config, jobs);
      } catch (const RemoteError& e) {
        // Endpoint unreachable before any attack ran: every example is
        // reported as errored so the manifest still lists them.
        report = UnreachableReport(dataset, config, e.what());
        err << "error: " << e.what() << '\n';
        unreachable = true;
      }
      WriteFile(out_prefix + ".json", ReportToJson(report));
      WriteFile(out_prefix + ".csv", ReportToCsv(report));
      if (human_eval_n > 0) {
        ExportHumanEvalSample(
            report, human_eval_n, g.seed,
            human_eval_out.empty() ? out_prefix + ".human.tsv"
                                   : human_eval_out);
      }
      if (unreachable) return kExitRemote;
      out << ReportToCsv(report);
      if (!report.complete()) {
        std::size_t failed = 0;
        for (const ExampleRecord& r : report.records) failed += r.error ? 1 : 0;
        err << "error: " << failed
            << " example(s) did not complete; partial report written\n";
        return report.has_remote_error() ? kExitRemote : kExitData;
      }
    } else if (validate->parsed()) {
      const ResourceBundle bundle = Bundle(g, err);
      for (const std::string& s : require_scripts) {
        bundle.RequireScript(RequireScriptName(s));
      }
      for (ScriptId s : bundle.scripts.Scripts()) {
        const PhoneticTable* p = bundle.Phonetic(s);
        out << ScriptName(s) << "\tphonetic=" << (p ? p->size() : 0) << '\n';
      }
      out << "confusables=" << bundle.confusables.entries().size()
          << "\tsynonyms=" << bundle.synonyms.size() << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AttackInterrupted& e) {
    err << "error: " << e.what() << '\n';
    return e.remote_failure() ? kExitRemote : kExitData;
  } catch (const RemoteError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRemote;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace lingattack
