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

#include "lingattack/script.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <string>

#include "lingattack/error.h"
#include "lingattack/text.h"
#include "tsv.h"

namespace lingattack {
namespace {

constexpr std::array<std::string_view, kNumScripts> kScriptNames = {
    "Devanagari", "BengaliAssamese", "Gurmukhi",  "Gujarati",  "Odia",
    "Tamil",      "Telugu",          "Kannada",   "Malayalam",
};

constexpr std::array<std::string_view, 8> kClassNames = {
    "IndependentVowel", "DependentVowelSign", "Consonant", "Virama",
    "Nukta",            "Digit",              "Modifier",  "Other",
};

constexpr ScriptRecord kBuiltinRecords[] = {
#include "script_table.inc"
};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view ScriptName(ScriptId script) {
  return kScriptNames[static_cast<std::size_t>(script)];
}

std::optional<ScriptId> ParseScriptName(std::string_view name) {
  const std::string n = Lower(name);
  for (ScriptId s : kAllScripts) {
    if (n == Lower(ScriptName(s))) return s;
  }
  struct Alias {
    std::string_view name;
    ScriptId script;
  };
  static constexpr Alias kAliases[] = {
      {"deva", ScriptId::kDevanagari},      {"bengali", ScriptId::kBengaliAssamese},
      {"assamese", ScriptId::kBengaliAssamese}, {"beng", ScriptId::kBengaliAssamese},
      {"guru", ScriptId::kGurmukhi},        {"gujr", ScriptId::kGujarati},
      {"oriya", ScriptId::kOdia},           {"orya", ScriptId::kOdia},
      {"taml", ScriptId::kTamil},           {"telu", ScriptId::kTelugu},
      {"knda", ScriptId::kKannada},         {"mlym", ScriptId::kMalayalam},
  };
  for (const Alias& a : kAliases) {
    if (n == a.name) return a.script;
  }
  return std::nullopt;
}

std::string_view CharClassName(CharClass c) {
  return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<CharClass> ParseCharClass(std::string_view name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (name == kClassNames[i]) return static_cast<CharClass>(i);
  }
  return std::nullopt;
}

const ScriptTable& ScriptTable::Builtin() {
  static const ScriptTable table = FromRecords(
      std::vector<ScriptRecord>(std::begin(kBuiltinRecords),
                                std::end(kBuiltinRecords)));
  return table;
}

ScriptTable ScriptTable::FromRecords(const std::vector<ScriptRecord>& records) {
  ScriptTable table;
  for (auto& block : table.classes_) block.fill(kUnassigned);
  for (const ScriptRecord& r : records) {
    const auto s = static_cast<std::size_t>(r.script);
    const char32_t base = BlockBase(r.script);
    if (r.codepoint < base || r.codepoint >= base + kBlockSize) {
      throw ValidationError("codepoint U+" + HexCodepoint(r.codepoint) +
                            " is outside the " +
                            std::string(ScriptName(r.script)) + " block");
    }
    int8_t& slot = table.classes_[s][r.codepoint - base];
    if (slot != kUnassigned) {
      throw ValidationError("duplicate codepoint U+" +
                            HexCodepoint(r.codepoint) + " in script table");
    }
    slot = static_cast<int8_t>(r.char_class);
    table.covered_[s] = true;
  }
  return table;
}

ScriptTable ScriptTable::Parse(std::istream& in, std::string_view source) {
  internal::TsvReader reader(in, source);
  internal::TsvLine line;
  std::vector<ScriptRecord> records;
  while (reader.Next(line)) {
    reader.ExpectFields(line, 3, 3);
    auto script = ParseScriptName(line.fields[0]);
    if (!script) reader.Fail(line, "unknown script '" + line.fields[0] + "'");
    auto cls = ParseCharClass(line.fields[2]);
    if (!cls) reader.Fail(line, "unknown class '" + line.fields[2] + "'");
    records.push_back({*script, reader.Hex(line, line.fields[1]), *cls});
  }
  try {
    return FromRecords(records);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

ScriptTable ScriptTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return Parse(in, path.string());
}

std::vector<ScriptId> ScriptTable::Scripts() const {
  std::vector<ScriptId> out;
  for (ScriptId s : kAllScripts) {
    if (Covers(s)) out.push_back(s);
  }
  return out;
}

std::optional<CharClass> ScriptTable::Lookup(char32_t codepoint) const {
  auto script = DetectScript(codepoint);
  if (!script || !Covers(*script)) return std::nullopt;
  const int8_t c = classes_[static_cast<std::size_t>(*script)]
                           [codepoint - BlockBase(*script)];
  if (c == kUnassigned) return std::nullopt;
  return static_cast<CharClass>(c);
}

std::vector<char32_t> ScriptTable::Members(ScriptId script,
                                           CharClass c) const {
  std::vector<char32_t> out;
  if (!Covers(script)) return out;
  const auto& block = classes_[static_cast<std::size_t>(script)];
  for (std::size_t o = 0; o < kBlockSize; ++o) {
    if (block[o] == static_cast<int8_t>(c)) {
      out.push_back(BlockBase(script) + static_cast<char32_t>(o));
    }
  }
  return out;
}

std::vector<ScriptRecord> ScriptTable::Records() const {
  std::vector<ScriptRecord> out;
  for (ScriptId s : kAllScripts) {
    const auto& block = classes_[static_cast<std::size_t>(s)];
    for (std::size_t o = 0; o < kBlockSize; ++o) {
      if (block[o] != kUnassigned) {
        out.push_back({s, BlockBase(s) + static_cast<char32_t>(o),
                       static_cast<CharClass>(block[o])});
      }
    }
  }
  return out;
}

std::optional<ScriptId> DetectScript(char32_t codepoint) {
  if (codepoint < BlockBase(ScriptId::kDevanagari)) return std::nullopt;
  const char32_t index = (codepoint - BlockBase(ScriptId::kDevanagari)) / 0x80;
  if (index >= kNumScripts) return std::nullopt;
  return static_cast<ScriptId>(index);
}

CharClass ClassifyCodepoint(char32_t codepoint) {
  return ScriptTable::Builtin().Classify(codepoint);
}

CodepointInfo DescribeCodepoint(char32_t codepoint) {
  CodepointInfo info;
  info.codepoint = codepoint;
  info.script = DetectScript(codepoint);
  info.char_class = ClassifyCodepoint(codepoint);
  if (info.script) {
    info.offset = static_cast<int>(codepoint - BlockBase(*info.script));
  }
  return info;
}

std::optional<char32_t> TransliterateCodepoint(char32_t codepoint,
                                               ScriptId from, ScriptId to,
                                               const ScriptTable& table) {
  if (DetectScript(codepoint) != from) return std::nullopt;
  auto source_class = table.Lookup(codepoint);
  if (!source_class) return std::nullopt;
  const char32_t target = BlockBase(to) + (codepoint - BlockBase(from));
  if (table.Lookup(target) != source_class) return std::nullopt;
  return target;
}

std::string TransliterateText(std::string_view text, ScriptId from,
                              ScriptId to, const ScriptTable& table) {
  std::u32string cps = ToCodepoints(NormalizeNfc(text));
  for (char32_t& c : cps) {
    if (auto mapped = TransliterateCodepoint(c, from, to, table)) c = *mapped;
  }
  return ToUtf8(cps);
}

}  // namespace lingattack
