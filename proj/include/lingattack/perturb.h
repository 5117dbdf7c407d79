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

#ifndef LINGATTACK_PERTURB_H_
#define LINGATTACK_PERTURB_H_

// Single-edit candidate generation for one word.
//
// Phonological: short/long vowel swap, homorganic consonant (same varga,
// nasals excluded) with aspiration-only and voicing-only sub-modes, and
// sibilant swap. Orthographic: visually confusable character and conjunct
// constituent swap. Baselines: random same-class letter and whole-word
// synonym.
//
// Every generator edits only codepoints of the given script and returns
// candidates that differ from the input word.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/resources.h"
#include "lingattack/rng.h"
#include "lingattack/script.h"

namespace lingattack {

enum class PerturbationKind : uint8_t {
  kVowelLength,
  kHomorganic,
  kAspirationFlip,
  kVoicingFlip,
  kSibilant,
  kOrthoConfusable,
  kConjunctSwap,
  kRandomSameClass,
  kSynonym,
};

using KindSet = std::set<PerturbationKind>;

std::string_view KindName(PerturbationKind kind);

// Comma-separated kind names or group names:
//   phono = vowel_length,homorganic,sibilant
//   ortho = confusable,conjunct_swap
//   rand  = random
// Throws ParseError on an unknown name.
KindSet ParseKinds(std::string_view spec);
std::string FormatKinds(const KindSet& kinds);

struct EditPosition {
  std::size_t akshara = 0;
  std::size_t codepoint = 0;

  bool operator==(const EditPosition&) const = default;
};

struct Candidate {
  std::string word;
  EditPosition position;
  PerturbationKind kind = PerturbationKind::kVowelLength;
  std::u32string replaced;
  std::u32string replacement;

  bool operator==(const Candidate&) const = default;
};

enum class HomorganicMode { kAll, kAspirationFlip, kVoicingFlip };

// Per-codepoint option sets, ascending. Exposed for table-level checks.
std::vector<char32_t> HomorganicOptions(char32_t codepoint,
                                        const PhoneticTable& table,
                                        HomorganicMode mode);
std::vector<char32_t> SibilantOptions(char32_t codepoint,
                                      const PhoneticTable& table);
std::vector<char32_t> RandomOptions(char32_t codepoint, ScriptId script,
                                    const ScriptTable& scripts);

std::vector<Candidate> VowelLengthCandidates(std::string_view word,
                                             const PhoneticTable& table);
std::vector<Candidate> HomorganicCandidates(std::string_view word,
                                            const PhoneticTable& table,
                                            HomorganicMode mode);
std::vector<Candidate> SibilantCandidates(std::string_view word,
                                          const PhoneticTable& table);
std::vector<Candidate> ConfusableCandidates(std::string_view word,
                                            const ConfusableTable& table,
                                            ScriptId script);
std::vector<Candidate> ConjunctSwapCandidates(
    std::string_view word, ScriptId script,
    const ScriptTable& scripts = ScriptTable::Builtin());
std::vector<Candidate> RandomCandidates(std::string_view word,
                                        ScriptId script,
                                        const ScriptTable& scripts, Rng& rng,
                                        std::size_t k_per_position = 1);
std::vector<Candidate> SynonymCandidates(std::string_view word,
                                         const SynonymLexicon& lexicon,
                                         std::string_view language);

struct PoolOptions {
  ScriptId script = ScriptId::kDevanagari;
  // Synonym lexicon language; empty disables synonym lookup.
  std::string language;
  std::size_t k_per_position = 1;
};

// Union over `kinds`, one candidate per distinct word (the smallest kind
// wins), ordered by edit position, then replacement, then kind.
std::vector<Candidate> CandidatePool(std::string_view word,
                                     const KindSet& kinds,
                                     const ResourceBundle& bundle,
                                     const PoolOptions& options, Rng& rng);

}  // namespace lingattack

#endif  // LINGATTACK_PERTURB_H_
