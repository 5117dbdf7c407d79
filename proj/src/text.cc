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

#include "lingattack/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <cstdio>

#include "lingattack/error.h"

namespace lingattack {
namespace {

const icu::Normalizer2& Nfc() {
  static const icu::Normalizer2* nfc = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
      throw Error(std::string("ICU NFC unavailable: ") + u_errorName(status));
    }
    return n;
  }();
  return *nfc;
}

}  // namespace

std::u32string ToCodepoints(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'\uFFFD' : static_cast<char32_t>(c));
  }
  return out;
}

std::string ToUtf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 3);
  for (char32_t c : codepoints) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      out += "\xEF\xBF\xBD";
    } else {
      out.append(reinterpret_cast<const char*>(buf), n);
    }
  }
  return out;
}

std::string ToUtf8(char32_t codepoint) {
  return ToUtf8(std::u32string_view(&codepoint, 1));
}

std::string NormalizeNfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (Nfc().isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = Nfc().normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("NFC normalization failed: ") +
                u_errorName(status));
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsNfc(std::u32string_view codepoints) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString s = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(codepoints.data()),
      static_cast<int32_t>(codepoints.size()));
  UBool ok = Nfc().isNormalized(s, status);
  return U_SUCCESS(status) && ok;
}

std::vector<TokenSpan> TokenSpans(std::string_view text) {
  std::vector<TokenSpan> spans;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  bool in_token = false;
  std::size_t start = 0;
  while (i < length) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    const bool space = c >= 0 && u_isUWhiteSpace(c);
    if (space && in_token) {
      spans.push_back({start, static_cast<std::size_t>(at)});
      in_token = false;
    } else if (!space && !in_token) {
      start = static_cast<std::size_t>(at);
      in_token = true;
    }
  }
  if (in_token) spans.push_back({start, text.size()});
  return spans;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  for (const TokenSpan& span : TokenSpans(text)) {
    words.emplace_back(text.substr(span.begin, span.end - span.begin));
  }
  return words;
}

std::string ReplaceToken(std::string_view text,
                         const std::vector<TokenSpan>& spans,
                         std::size_t index, std::string_view replacement) {
  const TokenSpan& span = spans.at(index);
  std::string out;
  out.reserve(text.size() + replacement.size());
  out.append(text.substr(0, span.begin));
  out.append(replacement);
  out.append(text.substr(span.end));
  return out;
}

std::string HexCodepoint(char32_t codepoint) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(codepoint));
  return buf;
}

}  // namespace lingattack
