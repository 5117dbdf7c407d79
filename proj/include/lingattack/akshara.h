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

#ifndef LINGATTACK_AKSHARA_H_
#define LINGATTACK_AKSHARA_H_

// Orthographic syllable (akshara) segmentation for Indic words.
//
// Greedy maximal clustering over character classes:
//
//   consonant [nukta] (virama [ZWJ|ZWNJ] consonant [nukta])* [virama]
//       [dependent vowel sign] modifier*
//   independent vowel modifier*
//   any other single codepoint (Opaque)
//
// A cluster never spans two scripts. Segmentation does not normalize, so
// the texts of the returned aksharas concatenate to the input exactly.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/script.h"

namespace lingattack {

enum class AksharaKind { kVowelUnit, kConsonantUnit, kConjunct, kOpaque };

std::string_view AksharaKindName(AksharaKind kind);

struct Akshara {
  std::string text;
  AksharaKind kind = AksharaKind::kOpaque;
  std::u32string components;
  // Index of components[0] in the segmented word.
  std::size_t first_codepoint = 0;
};

std::vector<Akshara> SegmentAksharas(
    std::string_view word, const ScriptTable& table = ScriptTable::Builtin());
std::vector<Akshara> SegmentAksharas(
    std::u32string_view word,
    const ScriptTable& table = ScriptTable::Builtin());

// For each codepoint of `word`, the index of the akshara containing it.
std::vector<std::size_t> AksharaIndexOfCodepoints(
    const std::vector<Akshara>& aksharas);

}  // namespace lingattack

#endif  // LINGATTACK_AKSHARA_H_
