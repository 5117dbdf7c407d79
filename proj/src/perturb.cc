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

#include "lingattack/perturb.h"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "lingattack/akshara.h"
#include "lingattack/error.h"
#include "lingattack/text.h"

namespace lingattack {
namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "vowel_length", "homorganic", "aspiration", "voicing", "sibilant",
    "confusable",   "conjunct_swap", "random",  "synonym",
};

// Codepoints of one word plus the codepoint -> akshara map.
struct WordView {
  std::u32string cps;
  std::vector<std::size_t> akshara_of;

  explicit WordView(std::string_view word) : cps(ToCodepoints(word)) {
    akshara_of = AksharaIndexOfCodepoints(SegmentAksharas(
        std::u32string_view(cps)));
  }

  bool InScript(std::size_t i, ScriptId script) const {
    return DetectScript(cps[i]) == script;
  }

  Candidate Substitute(std::size_t i, char32_t replacement,
                       PerturbationKind kind) const {
    std::u32string edited = cps;
    edited[i] = replacement;
    return Candidate{ToUtf8(edited), {akshara_of[i], i}, kind,
                     std::u32string(1, cps[i]),
                     std::u32string(1, replacement)};
  }
};

template <typename OptionsFn>
std::vector<Candidate> PerPosition(std::string_view word, ScriptId script,
                                   PerturbationKind kind, OptionsFn options) {
  const WordView w(word);
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < w.cps.size(); ++i) {
    if (!w.InScript(i, script)) continue;
    for (char32_t r : options(w.cps[i])) {
      if (r != w.cps[i]) out.push_back(w.Substitute(i, r, kind));
    }
  }
  return out;
}

bool IsRandomEligible(CharClass c) {
  return c == CharClass::kIndependentVowel ||
         c == CharClass::kDependentVowelSign || c == CharClass::kConsonant;
}

}  // namespace

std::string_view KindName(PerturbationKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

KindSet ParseKinds(std::string_view spec) {
  KindSet kinds;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view name = spec.substr(start, comma - start);
    start = comma + 1;
    if (name.empty()) continue;
    if (name == "phono") {
      kinds.insert({PerturbationKind::kVowelLength,
                    PerturbationKind::kHomorganic,
                    PerturbationKind::kSibilant});
      continue;
    }
    if (name == "ortho") {
      kinds.insert({PerturbationKind::kOrthoConfusable,
                    PerturbationKind::kConjunctSwap});
      continue;
    }
    if (name == "rand") {
      kinds.insert(PerturbationKind::kRandomSameClass);
      continue;
    }
    auto it = std::find(kKindNames.begin(), kKindNames.end(), name);
    if (it == kKindNames.end()) {
      throw ParseError("unknown perturbation kind '" + std::string(name) + "'");
    }
    kinds.insert(static_cast<PerturbationKind>(it - kKindNames.begin()));
  }
  return kinds;
}

std::string FormatKinds(const KindSet& kinds) {
  std::string out;
  for (PerturbationKind k : kinds) {
    if (!out.empty()) out += ',';
    out += KindName(k);
  }
  return out;
}

std::vector<char32_t> HomorganicOptions(char32_t codepoint,
                                        const PhoneticTable& table,
                                        HomorganicMode mode) {
  std::vector<char32_t> out;
  const PhoneticFeatures* f = table.Find(codepoint);
  if (f == nullptr || !f->IsVarga() || f->nasal) return out;
  for (const auto& [offset, g] : table.entries()) {
    const char32_t cp = table.CodepointAt(offset);
    if (cp == codepoint || !g.IsVarga() || g.nasal || g.place != f->place) {
      continue;
    }
    switch (mode) {
      case HomorganicMode::kAll:
        break;
      case HomorganicMode::kAspirationFlip:
        if (g.voiced != f->voiced || g.aspirated == f->aspirated) continue;
        break;
      case HomorganicMode::kVoicingFlip:
        if (g.aspirated != f->aspirated || g.voiced == f->voiced) continue;
        break;
    }
    out.push_back(cp);
  }
  return out;
}

std::vector<char32_t> SibilantOptions(char32_t codepoint,
                                      const PhoneticTable& table) {
  std::vector<char32_t> out;
  const PhoneticFeatures* f = table.Find(codepoint);
  if (f == nullptr || !f->sibilant) return out;
  for (const auto& [offset, g] : table.entries()) {
    const char32_t cp = table.CodepointAt(offset);
    if (cp != codepoint && g.sibilant) out.push_back(cp);
  }
  return out;
}

std::vector<char32_t> RandomOptions(char32_t codepoint, ScriptId script,
                                    const ScriptTable& scripts) {
  std::vector<char32_t> out;
  if (DetectScript(codepoint) != script) return out;
  auto cls = scripts.Lookup(codepoint);
  if (!cls || !IsRandomEligible(*cls)) return out;
  for (char32_t cp : scripts.Members(script, *cls)) {
    // Composition-excluded letters (e.g. U+0958) never occur in NFC text.
    if (cp != codepoint && IsNfc(std::u32string_view(&cp, 1))) {
      out.push_back(cp);
    }
  }
  return out;
}

std::vector<Candidate> VowelLengthCandidates(std::string_view word,
                                             const PhoneticTable& table) {
  return PerPosition(word, table.script(), PerturbationKind::kVowelLength,
                     [&](char32_t c) {
                       std::vector<char32_t> out;
                       const PhoneticFeatures* f = table.Find(c);
                       if (f != nullptr && f->length_partner) {
                         out.push_back(table.CodepointAt(*f->length_partner));
                       }
                       return out;
                     });
}

std::vector<Candidate> HomorganicCandidates(std::string_view word,
                                            const PhoneticTable& table,
                                            HomorganicMode mode) {
  PerturbationKind kind = PerturbationKind::kHomorganic;
  if (mode == HomorganicMode::kAspirationFlip) {
    kind = PerturbationKind::kAspirationFlip;
  } else if (mode == HomorganicMode::kVoicingFlip) {
    kind = PerturbationKind::kVoicingFlip;
  }
  return PerPosition(word, table.script(), kind, [&](char32_t c) {
    return HomorganicOptions(c, table, mode);
  });
}

std::vector<Candidate> SibilantCandidates(std::string_view word,
                                          const PhoneticTable& table) {
  return PerPosition(word, table.script(), PerturbationKind::kSibilant,
                     [&](char32_t c) { return SibilantOptions(c, table); });
}

std::vector<Candidate> ConfusableCandidates(std::string_view word,
                                            const ConfusableTable& table,
                                            ScriptId script) {
  return PerPosition(word, script, PerturbationKind::kOrthoConfusable,
                     [&](char32_t c) {
                       std::vector<char32_t> out;
                       if (const auto* alts = table.Alternatives(c)) {
                         for (char32_t a : *alts) {
                           if (DetectScript(a) == script) out.push_back(a);
                         }
                       }
                       return out;
                     });
}

std::vector<Candidate> ConjunctSwapCandidates(std::string_view word,
                                              ScriptId script,
                                              const ScriptTable& scripts) {
  const WordView w(word);
  std::vector<Candidate> out;
  auto is = [&](std::size_t i, CharClass c) {
    return w.InScript(i, script) && scripts.Classify(w.cps[i]) == c;
  };
  // Only the main virama joins consonants; Malayalam's vertical and
  // circular bar viramas do not.
  const char32_t virama = BlockBase(script) + 0x4D;
  for (std::size_t i = 0; i + 2 < w.cps.size(); ++i) {
    if (!is(i, CharClass::kConsonant) || w.cps[i + 1] != virama ||
        !is(i + 2, CharClass::kConsonant) || w.cps[i] == w.cps[i + 2]) {
      continue;
    }
    std::u32string edited = w.cps;
    std::swap(edited[i], edited[i + 2]);
    out.push_back(Candidate{ToUtf8(edited),
                            {w.akshara_of[i], i},
                            PerturbationKind::kConjunctSwap,
                            w.cps.substr(i, 3),
                            edited.substr(i, 3)});
  }
  return out;
}

std::vector<Candidate> RandomCandidates(std::string_view word,
                                        ScriptId script,
                                        const ScriptTable& scripts, Rng& rng,
                                        std::size_t k_per_position) {
  const WordView w(word);
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < w.cps.size(); ++i) {
    const std::vector<char32_t> options =
        RandomOptions(w.cps[i], script, scripts);
    if (options.empty()) continue;
    std::vector<std::size_t> picks =
        SampleWithoutReplacement(rng, options.size(), k_per_position);
    std::sort(picks.begin(), picks.end());
    for (std::size_t p : picks) {
      out.push_back(
          w.Substitute(i, options[p], PerturbationKind::kRandomSameClass));
    }
  }
  return out;
}

std::vector<Candidate> SynonymCandidates(std::string_view word,
                                         const SynonymLexicon& lexicon,
                                         std::string_view language) {
  std::vector<Candidate> out;
  const auto* synonyms = lexicon.Lookup(language, word);
  if (synonyms == nullptr) return out;
  const std::u32string original = ToCodepoints(word);
  for (const std::string& s : *synonyms) {
    if (s == word) continue;
    out.push_back(Candidate{s, {0, 0}, PerturbationKind::kSynonym, original,
                            ToCodepoints(s)});
  }
  return out;
}

std::vector<Candidate> CandidatePool(std::string_view word,
                                     const KindSet& kinds,
                                     const ResourceBundle& bundle,
                                     const PoolOptions& options, Rng& rng) {
  std::vector<Candidate> all;
  auto append = [&all](std::vector<Candidate> more) {
    all.insert(all.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  const PhoneticTable* phonetic = bundle.Phonetic(options.script);
  for (PerturbationKind kind : kinds) {
    switch (kind) {
      case PerturbationKind::kVowelLength:
        if (phonetic) append(VowelLengthCandidates(word, *phonetic));
        break;
      case PerturbationKind::kHomorganic:
        if (phonetic) {
          append(HomorganicCandidates(word, *phonetic, HomorganicMode::kAll));
        }
        break;
      case PerturbationKind::kAspirationFlip:
        if (phonetic) {
          append(HomorganicCandidates(word, *phonetic,
                                      HomorganicMode::kAspirationFlip));
        }
        break;
      case PerturbationKind::kVoicingFlip:
        if (phonetic) {
          append(HomorganicCandidates(word, *phonetic,
                                      HomorganicMode::kVoicingFlip));
        }
        break;
      case PerturbationKind::kSibilant:
        if (phonetic) append(SibilantCandidates(word, *phonetic));
        break;
      case PerturbationKind::kOrthoConfusable:
        append(ConfusableCandidates(word, bundle.confusables, options.script));
        break;
      case PerturbationKind::kConjunctSwap:
        append(ConjunctSwapCandidates(word, options.script, bundle.scripts));
        break;
      case PerturbationKind::kRandomSameClass:
        append(RandomCandidates(word, options.script, bundle.scripts, rng,
                                options.k_per_position));
        break;
      case PerturbationKind::kSynonym:
        if (!options.language.empty()) {
          append(SynonymCandidates(word, bundle.synonyms, options.language));
        }
        break;
    }
  }

  std::stable_sort(all.begin(), all.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return std::tie(a.position.codepoint, a.replacement,
                                     a.kind) <
                            std::tie(b.position.codepoint, b.replacement,
                                     b.kind);
                   });
  std::map<std::string_view, PerturbationKind> best_kind;
  for (const Candidate& c : all) {
    auto [it, inserted] = best_kind.try_emplace(c.word, c.kind);
    if (!inserted && c.kind < it->second) it->second = c.kind;
  }
  std::vector<Candidate> pool;
  std::set<std::string_view> seen;
  for (const Candidate& c : all) {
    if (c.word == word || best_kind.at(c.word) != c.kind) continue;
    if (seen.insert(c.word).second) pool.push_back(c);
  }
  return pool;
}

}  // namespace lingattack
