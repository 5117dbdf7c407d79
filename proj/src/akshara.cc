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

#include "lingattack/akshara.h"

#include "lingattack/text.h"

namespace lingattack {
namespace {

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

class Clusterer {
 public:
  Clusterer(std::u32string_view word, const ScriptTable& table)
      : word_(word), table_(table) {}

  std::vector<Akshara> Run() {
    std::vector<Akshara> out;
    std::size_t i = 0;
    while (i < word_.size()) {
      Akshara a;
      a.first_codepoint = i;
      const std::size_t end = ClusterEnd(i, a.kind);
      a.components = std::u32string(word_.substr(i, end - i));
      a.text = ToUtf8(a.components);
      out.push_back(std::move(a));
      i = end;
    }
    return out;
  }

 private:
  bool Is(std::size_t i, CharClass c, std::optional<ScriptId> script) const {
    return i < word_.size() && DetectScript(word_[i]) == script &&
           table_.Classify(word_[i]) == c;
  }

  std::size_t ClusterEnd(std::size_t start, AksharaKind& kind) const {
    const char32_t first = word_[start];
    const auto script = DetectScript(first);
    const CharClass c = table_.Classify(first);
    std::size_t i = start + 1;
    if (c == CharClass::kIndependentVowel) {
      kind = AksharaKind::kVowelUnit;
      while (Is(i, CharClass::kModifier, script)) ++i;
      return i;
    }
    if (c != CharClass::kConsonant) {
      kind = AksharaKind::kOpaque;
      return i;
    }
    kind = AksharaKind::kConsonantUnit;
    if (Is(i, CharClass::kNukta, script)) ++i;
    bool ends_with_virama = false;
    while (Is(i, CharClass::kVirama, script)) {
      std::size_t next = i + 1;
      if (next < word_.size() && (word_[next] == kZwj || word_[next] == kZwnj)) {
        ++next;
      }
      if (Is(next, CharClass::kConsonant, script)) {
        kind = AksharaKind::kConjunct;
        i = next + 1;
        if (Is(i, CharClass::kNukta, script)) ++i;
        continue;
      }
      ++i;
      ends_with_virama = true;
      break;
    }
    if (!ends_with_virama && Is(i, CharClass::kDependentVowelSign, script)) ++i;
    while (Is(i, CharClass::kModifier, script)) ++i;
    return i;
  }

  std::u32string_view word_;
  const ScriptTable& table_;
};

}  // namespace

std::string_view AksharaKindName(AksharaKind kind) {
  switch (kind) {
    case AksharaKind::kVowelUnit:
      return "VowelUnit";
    case AksharaKind::kConsonantUnit:
      return "ConsonantUnit";
    case AksharaKind::kConjunct:
      return "Conjunct";
    case AksharaKind::kOpaque:
      return "Opaque";
  }
  return "Opaque";
}

std::vector<Akshara> SegmentAksharas(std::u32string_view word,
                                     const ScriptTable& table) {
  return Clusterer(word, table).Run();
}

std::vector<Akshara> SegmentAksharas(std::string_view word,
                                     const ScriptTable& table) {
  const std::u32string cps = ToCodepoints(word);
  return SegmentAksharas(std::u32string_view(cps), table);
}

std::vector<std::size_t> AksharaIndexOfCodepoints(
    const std::vector<Akshara>& aksharas) {
  std::vector<std::size_t> index;
  for (std::size_t a = 0; a < aksharas.size(); ++a) {
    index.insert(index.end(), aksharas[a].components.size(), a);
  }
  return index;
}

}  // namespace lingattack
