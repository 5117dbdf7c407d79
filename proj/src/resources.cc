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

#include "lingattack/resources.h"

#include <algorithm>
#include <array>
#include <fstream>

#include "lingattack/error.h"
#include "lingattack/text.h"
#include "tsv.h"

namespace lingattack {
namespace {

constexpr std::array<std::string_view, 6> kPlaceNames = {
    "Velar", "Palatal", "Retroflex", "Dental", "Labial", "None"};
constexpr std::array<std::string_view, 3> kLengthNames = {"Short", "Long",
                                                          "NA"};

template <typename Enum, std::size_t N>
std::optional<Enum> ParseName(const std::array<std::string_view, N>& names,
                              std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

bool ParseFlag(const internal::TsvReader& reader, const internal::TsvLine& line,
               std::string_view s) {
  if (s == "1" || s == "true" || s == "T") return true;
  if (s == "0" || s == "false" || s == "F") return false;
  reader.Fail(line, "bad boolean '" + std::string(s) + "'");
}

std::string Cp(char32_t c) { return "U+" + HexCodepoint(c); }

bool IsVowelClass(CharClass c) {
  return c == CharClass::kIndependentVowel ||
         c == CharClass::kDependentVowelSign;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

std::string_view PlaceName(Place p) {
  return kPlaceNames[static_cast<std::size_t>(p)];
}

std::string_view VowelLengthName(VowelLength v) {
  return kLengthNames[static_cast<std::size_t>(v)];
}

const PhoneticFeatures* PhoneticTable::Find(char32_t codepoint) const {
  const char32_t base = BlockBase(script_);
  if (codepoint < base || codepoint >= base + kBlockSize) return nullptr;
  auto it = entries_.find(static_cast<int>(codepoint - base));
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t ConfusableTable::CloseSymmetric() {
  std::vector<std::pair<char32_t, char32_t>> missing;
  for (const auto& [from, tos] : alternatives_) {
    for (char32_t to : tos) {
      auto it = alternatives_.find(to);
      if (it == alternatives_.end() || !it->second.contains(from)) {
        missing.emplace_back(to, from);
      }
    }
  }
  for (const auto& [a, b] : missing) Add(a, b);
  return missing.size();
}

const std::set<char32_t>* ConfusableTable::Alternatives(
    char32_t codepoint) const {
  auto it = alternatives_.find(codepoint);
  return it == alternatives_.end() ? nullptr : &it->second;
}

bool ConfusableTable::Covers(ScriptId script) const {
  auto it = alternatives_.lower_bound(BlockBase(script));
  return it != alternatives_.end() &&
         it->first < BlockBase(script) + kBlockSize;
}

std::size_t SynonymLexicon::Add(const std::string& language,
                                const std::string& word,
                                const std::vector<std::string>& synonyms) {
  std::size_t dropped = 0;
  auto& list = words_[language][word];
  for (const std::string& s : synonyms) {
    if (s.empty() || s == word ||
        std::find(list.begin(), list.end(), s) != list.end()) {
      ++dropped;
      continue;
    }
    list.push_back(s);
  }
  if (list.empty()) {
    words_[language].erase(word);
    if (words_[language].empty()) words_.erase(language);
  }
  return dropped;
}

const std::vector<std::string>* SynonymLexicon::Lookup(
    std::string_view language, std::string_view word) const {
  auto lang = words_.find(language);
  if (lang == words_.end()) return nullptr;
  auto it = lang->second.find(word);
  return it == lang->second.end() ? nullptr : &it->second;
}

std::size_t SynonymLexicon::size() const {
  std::size_t n = 0;
  for (const auto& [lang, words] : words_) n += words.size();
  return n;
}

const PhoneticTable* ResourceBundle::Phonetic(ScriptId script) const {
  auto it = phonetic.find(script);
  return it == phonetic.end() ? nullptr : &it->second;
}

void ResourceBundle::RequireScript(ScriptId script) const {
  if (!scripts.Covers(script)) {
    throw ValidationError("resource bundle has no script table for " +
                          std::string(ScriptName(script)));
  }
  if (Phonetic(script) == nullptr) {
    throw ValidationError("resource bundle has no phonetic table for " +
                          std::string(ScriptName(script)));
  }
}

std::map<ScriptId, PhoneticTable> ParsePhoneticTsv(std::istream& in,
                                                   std::string_view source) {
  internal::TsvReader reader(in, source);
  internal::TsvLine line;
  std::map<ScriptId, PhoneticTable> tables;
  while (reader.Next(line)) {
    reader.ExpectFields(line, 9, 10);
    const auto& f = line.fields;
    auto script = ParseScriptName(f[0]);
    if (!script) reader.Fail(line, "unknown script '" + f[0] + "'");
    const char32_t cp = reader.Hex(line, f[1]);
    if (DetectScript(cp) != *script) {
      reader.Fail(line, Cp(cp) + " is outside the " + f[0] + " block");
    }
    PhoneticFeatures features;
    auto place = ParseName<Place>(kPlaceNames, f[2]);
    if (!place) reader.Fail(line, "unknown place '" + f[2] + "'");
    features.place = *place;
    features.voiced = ParseFlag(reader, line, f[3]);
    features.aspirated = ParseFlag(reader, line, f[4]);
    features.nasal = ParseFlag(reader, line, f[5]);
    features.sibilant = ParseFlag(reader, line, f[6]);
    auto length = ParseName<VowelLength>(kLengthNames, f[7]);
    if (!length) reader.Fail(line, "unknown vowel length '" + f[7] + "'");
    features.vowel_length = *length;
    if (f[8] != "-") {
      const char32_t partner = reader.Hex(line, f[8]);
      if (DetectScript(partner) != *script) {
        reader.Fail(line, "partner " + Cp(partner) + " is outside the " +
                              f[0] + " block");
      }
      features.length_partner =
          static_cast<int>(partner - BlockBase(*script));
    }
    if (f.size() == 10) {
      if (f[9] != "optional") reader.Fail(line, "unknown flag '" + f[9] + "'");
      features.optional = true;
    }
    auto [it, inserted] = tables.try_emplace(*script, *script);
    const int offset = static_cast<int>(cp - BlockBase(*script));
    if (it->second.entries().contains(offset)) {
      reader.Fail(line, "duplicate codepoint " + Cp(cp));
    }
    it->second.Set(offset, features);
  }
  return tables;
}

ConfusableTable ParseConfusableTsv(std::istream& in, std::string_view source) {
  internal::TsvReader reader(in, source);
  internal::TsvLine line;
  ConfusableTable table;
  while (reader.Next(line)) {
    reader.ExpectFields(line, 3, 3);
    auto script = ParseScriptName(line.fields[0]);
    if (!script) reader.Fail(line, "unknown script '" + line.fields[0] + "'");
    const char32_t from = reader.Hex(line, line.fields[1]);
    const auto alternatives = internal::SplitComma(line.fields[2]);
    if (alternatives.empty()) reader.Fail(line, "no alternatives");
    for (const std::string& alt : alternatives) {
      const char32_t to = reader.Hex(line, alt);
      if (DetectScript(from) != *script || DetectScript(to) != *script) {
        throw ValidationError(reader.Where(line) + ": cross-block confusable " +
                              Cp(from) + " -> " + Cp(to) + " for script " +
                              line.fields[0]);
      }
      if (from == to) {
        throw ValidationError(reader.Where(line) + ": self-confusable " +
                              Cp(from));
      }
      table.Add(from, to);
    }
  }
  return table;
}

SynonymLexicon ParseSynonymTsv(std::istream& in, std::string_view source,
                               std::size_t* dropped) {
  internal::TsvReader reader(in, source);
  internal::TsvLine line;
  SynonymLexicon lexicon;
  std::size_t n_dropped = 0;
  while (reader.Next(line)) {
    reader.ExpectFields(line, 3, 3);
    if (line.fields[0].empty()) reader.Fail(line, "empty language");
    const std::string word = NormalizeNfc(line.fields[1]);
    if (word.empty()) reader.Fail(line, "empty word");
    std::vector<std::string> synonyms;
    for (const std::string& s : internal::SplitComma(line.fields[2])) {
      synonyms.push_back(NormalizeNfc(s));
    }
    n_dropped += lexicon.Add(line.fields[0], word, synonyms);
  }
  if (dropped != nullptr) *dropped = n_dropped;
  return lexicon;
}

void ValidatePhoneticTable(const PhoneticTable& table,
                           const ScriptTable& scripts) {
  const std::string name(ScriptName(table.script()));
  for (const auto& [offset, f] : table.entries()) {
    const char32_t cp = table.CodepointAt(offset);
    auto cls = scripts.Lookup(cp);
    if (!cls) {
      throw ValidationError(name + " phonetic entry " + Cp(cp) +
                            " is not an assigned codepoint");
    }
    if (f.sibilant && *cls != CharClass::kConsonant) {
      throw ValidationError(name + " sibilant " + Cp(cp) +
                            " is not a consonant");
    }
    if (f.vowel_length != VowelLength::kNA && !IsVowelClass(*cls)) {
      throw ValidationError(name + " vowel length on non-vowel " + Cp(cp));
    }
    if (f.length_partner) {
      const char32_t partner = table.CodepointAt(*f.length_partner);
      const PhoneticFeatures* back = table.Find(partner);
      if (back == nullptr || back->length_partner != offset) {
        throw ValidationError(name + " asymmetric length partner " + Cp(cp) +
                              " -> " + Cp(partner));
      }
      if (scripts.Lookup(partner) != cls) {
        throw ValidationError(name + " length partner " + Cp(partner) +
                              " has a different class than " + Cp(cp));
      }
    }
  }
}

PhoneticTable DerivePhoneticTable(const PhoneticTable& base, ScriptId target,
                                  const ScriptTable& scripts) {
  PhoneticTable out(target);
  for (const auto& [offset, f] : base.entries()) {
    if (TransliterateCodepoint(base.CodepointAt(offset), base.script(), target,
                               scripts)) {
      out.Set(offset, f);
    }
  }
  std::vector<int> orphaned;
  for (const auto& [offset, f] : out.entries()) {
    if (f.length_partner && !out.entries().contains(*f.length_partner)) {
      orphaned.push_back(offset);
    }
  }
  for (int offset : orphaned) {
    PhoneticFeatures f = out.entries().at(offset);
    f.length_partner.reset();
    out.Set(offset, f);
  }
  return out;
}

ResourceBundle BuildBundle(ScriptTable scripts,
                           std::map<ScriptId, PhoneticTable> phonetic,
                           ConfusableTable confusables,
                           SynonymLexicon synonyms,
                           const LoadOptions& options) {
  ResourceBundle bundle;
  bundle.scripts = std::move(scripts);

  for (auto& [script, table] : phonetic) {
    if (!bundle.scripts.Covers(script)) {
      throw ValidationError("phonetic rows for " +
                            std::string(ScriptName(script)) +
                            " but the script table does not cover it");
    }
    if (!options.include_optional) {
      std::vector<int> drop;
      for (const auto& [offset, f] : table.entries()) {
        if (f.optional) drop.push_back(offset);
      }
      for (int offset : drop) table.Erase(offset);
    }
    ValidatePhoneticTable(table, bundle.scripts);
  }
  auto devanagari = phonetic.find(ScriptId::kDevanagari);
  for (ScriptId script : bundle.scripts.Scripts()) {
    if (phonetic.contains(script) || devanagari == phonetic.end()) continue;
    PhoneticTable derived =
        DerivePhoneticTable(devanagari->second, script, bundle.scripts);
    ValidatePhoneticTable(derived, bundle.scripts);
    bundle.phonetic.emplace(script, std::move(derived));
  }
  for (auto& [script, table] : phonetic) {
    bundle.phonetic.emplace(script, std::move(table));
  }

  for (const auto& [from, tos] : confusables.entries()) {
    for (char32_t to : tos) {
      auto from_class = bundle.scripts.Lookup(from);
      auto to_class = bundle.scripts.Lookup(to);
      if (!from_class || !to_class) {
        throw ValidationError("confusable " + Cp(from) + " -> " + Cp(to) +
                              " uses a codepoint not in the script table");
      }
      if (from_class != to_class) {
        throw ValidationError("confusable " + Cp(from) + " -> " + Cp(to) +
                              " crosses character classes");
      }
    }
  }
  bundle.confusable_closure_added = confusables.CloseSymmetric();
  if (bundle.confusable_closure_added > 0) {
    bundle.warnings.push_back(
        "confusable table was asymmetric; added " +
        std::to_string(bundle.confusable_closure_added) + " reverse pair(s)");
  }
  bundle.confusables = std::move(confusables);
  bundle.synonyms = std::move(synonyms);
  return bundle;
}

ResourceBundle LoadBundle(const std::filesystem::path& directory,
                          const LoadOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw ParseError("resource directory not found: " + directory.string());
  }
  ScriptTable scripts = ScriptTable::Load(directory / "scripts.tsv");

  const fs::path phonetic_path = directory / "phonetic.tsv";
  auto phonetic_in = OpenOrThrow(phonetic_path);
  auto phonetic = ParsePhoneticTsv(phonetic_in, phonetic_path.string());

  ConfusableTable confusables;
  const fs::path confusable_path = directory / "confusables.tsv";
  if (fs::exists(confusable_path)) {
    auto in = OpenOrThrow(confusable_path);
    confusables = ParseConfusableTsv(in, confusable_path.string());
  }

  SynonymLexicon synonyms;
  std::size_t dropped = 0;
  const fs::path synonym_path = directory / "synonyms.tsv";
  if (fs::exists(synonym_path)) {
    auto in = OpenOrThrow(synonym_path);
    synonyms = ParseSynonymTsv(in, synonym_path.string(), &dropped);
  }

  ResourceBundle bundle =
      BuildBundle(std::move(scripts), std::move(phonetic),
                  std::move(confusables), std::move(synonyms), options);
  if (dropped > 0) {
    bundle.warnings.push_back("dropped " + std::to_string(dropped) +
                              " self or duplicate synonym(s)");
  }
  return bundle;
}

}  // namespace lingattack
