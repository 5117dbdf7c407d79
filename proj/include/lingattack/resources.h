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

#ifndef LINGATTACK_RESOURCES_H_
#define LINGATTACK_RESOURCES_H_

// Linguistic resource bundle: phonetic feature tables, visually-confusable
// character tables and synonym lexicons, plus the script table they are
// validated against.
//
// A bundle directory holds up to four UTF-8 TSV files:
//
//   scripts.tsv      script, hex codepoint, class            (required)
//   phonetic.tsv     script, hex codepoint, place, voiced, aspirated,
//                    nasal, sibilant, vowel_length, partner  (required)
//   confusables.tsv  script, hex codepoint, hex alternatives (optional)
//   synonyms.tsv     language, word, synonyms                (optional)
//
// Phonetic rows are normally given for Devanagari only; tables for the
// other scripts covered by scripts.tsv are derived by transliteration.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/script.h"

namespace lingattack {

enum class Place : uint8_t {
  kVelar,
  kPalatal,
  kRetroflex,
  kDental,
  kLabial,
  kNone,
};

enum class VowelLength : uint8_t { kShort, kLong, kNA };

std::string_view PlaceName(Place p);
std::string_view VowelLengthName(VowelLength v);

struct PhoneticFeatures {
  Place place = Place::kNone;
  bool voiced = false;
  bool aspirated = false;
  bool nasal = false;
  bool sibilant = false;
  VowelLength vowel_length = VowelLength::kNA;
  // Block offset of the short/long counterpart.
  std::optional<int> length_partner;
  // Loaded only when LoadOptions::include_optional is set.
  bool optional = false;

  // A stop of one of the five vargas: has a place, is not a sibilant.
  bool IsVarga() const {
    return place != Place::kNone && !sibilant &&
           vowel_length == VowelLength::kNA;
  }

  bool operator==(const PhoneticFeatures&) const = default;
};

class PhoneticTable {
 public:
  PhoneticTable() = default;
  explicit PhoneticTable(ScriptId script) : script_(script) {}

  ScriptId script() const { return script_; }

  // Features of `codepoint`, or nullptr when absent or outside the block.
  const PhoneticFeatures* Find(char32_t codepoint) const;
  void Set(int offset, const PhoneticFeatures& features) {
    entries_[offset] = features;
  }
  void Erase(int offset) { entries_.erase(offset); }

  const std::map<int, PhoneticFeatures>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  char32_t CodepointAt(int offset) const {
    return BlockBase(script_) + static_cast<char32_t>(offset);
  }

  bool operator==(const PhoneticTable&) const = default;

 private:
  ScriptId script_ = ScriptId::kDevanagari;
  std::map<int, PhoneticFeatures> entries_;
};

// Visually similar alternatives per codepoint. Keys and values always lie
// in the same script block.
class ConfusableTable {
 public:
  void Add(char32_t from, char32_t to) { alternatives_[from].insert(to); }

  // Adds the reverse of every pair; returns the number of pairs added.
  std::size_t CloseSymmetric();

  // nullptr when `codepoint` has no alternatives.
  const std::set<char32_t>* Alternatives(char32_t codepoint) const;
  bool Covers(ScriptId script) const;

  const std::map<char32_t, std::set<char32_t>>& entries() const {
    return alternatives_;
  }

 private:
  std::map<char32_t, std::set<char32_t>> alternatives_;
};

class SynonymLexicon {
 public:
  // Merges into the existing synonym list; self-synonyms and duplicates are
  // dropped. Returns the number of synonyms dropped.
  std::size_t Add(const std::string& language, const std::string& word,
                  const std::vector<std::string>& synonyms);

  // nullptr when the word is absent.
  const std::vector<std::string>* Lookup(std::string_view language,
                                         std::string_view word) const;

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  const std::map<std::string,
                 std::map<std::string, std::vector<std::string>, std::less<>>,
                 std::less<>>&
  entries() const {
    return words_;
  }

 private:
  std::map<std::string,
           std::map<std::string, std::vector<std::string>, std::less<>>,
           std::less<>>
      words_;
};

struct LoadOptions {
  bool include_optional = false;
};

struct ResourceBundle {
  ScriptTable scripts;
  std::map<ScriptId, PhoneticTable> phonetic;
  ConfusableTable confusables;
  SynonymLexicon synonyms;
  // Pairs added by the symmetric closure of confusables.tsv.
  std::size_t confusable_closure_added = 0;
  std::vector<std::string> warnings;

  const PhoneticTable* Phonetic(ScriptId script) const;

  // Throws ValidationError naming `script` unless it has both script table
  // coverage and a phonetic table.
  void RequireScript(ScriptId script) const;
};

// Raw parsers. Throw ParseError with "source:line" context.
std::map<ScriptId, PhoneticTable> ParsePhoneticTsv(std::istream& in,
                                                   std::string_view source);
ConfusableTable ParseConfusableTsv(std::istream& in, std::string_view source);
SynonymLexicon ParseSynonymTsv(std::istream& in, std::string_view source,
                               std::size_t* dropped = nullptr);

// Validates the raw tables against `scripts`, closes confusables, derives
// missing phonetic tables. Throws ValidationError.
ResourceBundle BuildBundle(ScriptTable scripts,
                           std::map<ScriptId, PhoneticTable> phonetic,
                           ConfusableTable confusables,
                           SynonymLexicon synonyms,
                           const LoadOptions& options = {});

ResourceBundle LoadBundle(const std::filesystem::path& directory,
                          const LoadOptions& options = {});

// Re-keys every entry of a Devanagari table into `target` by
// transliteration, dropping entries with no valid target and clearing
// partners that were dropped.
PhoneticTable DerivePhoneticTable(
    const PhoneticTable& base, ScriptId target,
    const ScriptTable& scripts = ScriptTable::Builtin());

// Throws ValidationError on any invariant violation of `table`.
void ValidatePhoneticTable(const PhoneticTable& table,
                           const ScriptTable& scripts);

}  // namespace lingattack

#endif  // LINGATTACK_RESOURCES_H_
