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

#ifndef LINGATTACK_SCRIPT_H_
#define LINGATTACK_SCRIPT_H_

// Indic Unicode blocks: script detection, per-codepoint character classes
// and block-offset transliteration.
//
// Each of the nine supported scripts owns one 128-codepoint block. Letters
// that share a sound share an offset across blocks (क U+0915, ক U+0995 and
// க U+0B95 all sit at offset 0x15), so transliteration is offset-preserving
// re-basing, guarded by a class table because the blocks are not identical:
// Tamil in particular leaves most aspirated and voiced stops unassigned.

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lingattack {

enum class ScriptId : uint8_t {
  kDevanagari,
  kBengaliAssamese,
  kGurmukhi,
  kGujarati,
  kOdia,
  kTamil,
  kTelugu,
  kKannada,
  kMalayalam,
};

inline constexpr std::size_t kNumScripts = 9;
inline constexpr std::size_t kBlockSize = 0x80;

inline constexpr std::array<ScriptId, kNumScripts> kAllScripts = {
    ScriptId::kDevanagari, ScriptId::kBengaliAssamese, ScriptId::kGurmukhi,
    ScriptId::kGujarati,   ScriptId::kOdia,            ScriptId::kTamil,
    ScriptId::kTelugu,     ScriptId::kKannada,         ScriptId::kMalayalam,
};

constexpr char32_t BlockBase(ScriptId script) {
  return 0x0900 + 0x80 * static_cast<char32_t>(script);
}

std::string_view ScriptName(ScriptId script);

// Accepts the canonical names above plus common aliases ("Bengali",
// "Assamese", "Oriya", ISO 15924 codes such as "Deva"); case-insensitive.
std::optional<ScriptId> ParseScriptName(std::string_view name);

enum class CharClass : uint8_t {
  kIndependentVowel,
  kDependentVowelSign,
  kConsonant,
  kVirama,
  kNukta,
  kDigit,
  kModifier,
  kOther,
};

std::string_view CharClassName(CharClass c);
std::optional<CharClass> ParseCharClass(std::string_view name);

struct CodepointInfo {
  char32_t codepoint = 0;
  std::optional<ScriptId> script;
  CharClass char_class = CharClass::kOther;
  // codepoint - BlockBase(*script); meaningful only when script is set.
  int offset = 0;
};

// One record of the script table file.
struct ScriptRecord {
  ScriptId script;
  char32_t codepoint;
  CharClass char_class;
};

// Offset -> class map for the covered scripts. Unassigned offsets have no
// class; lookups outside every covered block report kOther.
class ScriptTable {
 public:
  ScriptTable() = default;

  // Built from the Unicode character database; covers all nine scripts.
  static const ScriptTable& Builtin();

  // Throws ValidationError on duplicate codepoints or a codepoint outside
  // its script's block.
  static ScriptTable FromRecords(const std::vector<ScriptRecord>& records);

  // `script<TAB>hex_codepoint<TAB>class`, `#` comments. Throws ParseError.
  static ScriptTable Parse(std::istream& in, std::string_view source);
  static ScriptTable Load(const std::filesystem::path& path);

  bool Covers(ScriptId script) const {
    return covered_[static_cast<std::size_t>(script)];
  }
  std::vector<ScriptId> Scripts() const;

  // Class of an assigned codepoint in a covered block, else nullopt.
  std::optional<CharClass> Lookup(char32_t codepoint) const;
  bool IsAssigned(char32_t codepoint) const {
    return Lookup(codepoint).has_value();
  }
  CharClass Classify(char32_t codepoint) const {
    return Lookup(codepoint).value_or(CharClass::kOther);
  }

  // Assigned codepoints of `script` with class `c`, ascending.
  std::vector<char32_t> Members(ScriptId script, CharClass c) const;

  std::vector<ScriptRecord> Records() const;

  bool operator==(const ScriptTable& other) const = default;

 private:
  static constexpr int8_t kUnassigned = -1;
  std::array<bool, kNumScripts> covered_{};
  std::array<std::array<int8_t, kBlockSize>, kNumScripts> classes_{};
};

std::optional<ScriptId> DetectScript(char32_t codepoint);
CharClass ClassifyCodepoint(char32_t codepoint);
CodepointInfo DescribeCodepoint(char32_t codepoint);

// Maps each codepoint of the `from` block to the same offset in `to` when
// that target is assigned with the same class; everything else passes
// through. Input is NFC-normalized first.
std::string TransliterateText(std::string_view text, ScriptId from,
                              ScriptId to,
                              const ScriptTable& table = ScriptTable::Builtin());

// Single-codepoint form of the above; returns nullopt when no mapping
// applies (outside `from`, or target unassigned/class-mismatched).
std::optional<char32_t> TransliterateCodepoint(
    char32_t codepoint, ScriptId from, ScriptId to,
    const ScriptTable& table = ScriptTable::Builtin());

}  // namespace lingattack

#endif  // LINGATTACK_SCRIPT_H_
