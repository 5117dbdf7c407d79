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

#ifndef LINGATTACK_TEXT_H_
#define LINGATTACK_TEXT_H_

// UTF-8 helpers shared by every module. Words are whitespace tokens; text
// is expected to be valid UTF-8 (invalid sequences decode to U+FFFD).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lingattack {

std::u32string ToCodepoints(std::string_view utf8);
std::string ToUtf8(std::u32string_view codepoints);
std::string ToUtf8(char32_t codepoint);

// Canonical composition (NFC).
std::string NormalizeNfc(std::string_view utf8);
bool IsNfc(std::u32string_view codepoints);

// Byte range [begin, end) of one whitespace-delimited token.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<TokenSpan> TokenSpans(std::string_view text);
std::vector<std::string> SplitWords(std::string_view text);

// Returns `text` with token `index` (per `spans`) replaced by `replacement`.
// Separators are preserved byte-for-byte.
std::string ReplaceToken(std::string_view text,
                         const std::vector<TokenSpan>& spans,
                         std::size_t index, std::string_view replacement);

// Hex rendering used in TSV files and diagnostics, e.g. "0915".
std::string HexCodepoint(char32_t codepoint);

}  // namespace lingattack

#endif  // LINGATTACK_TEXT_H_
