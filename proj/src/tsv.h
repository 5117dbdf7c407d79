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

#ifndef LINGATTACK_SRC_TSV_H_
#define LINGATTACK_SRC_TSV_H_

// Line reader for the resource TSV formats. Blank lines and lines starting
// with '#' are skipped.

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lingattack/error.h"

namespace lingattack::internal {

struct TsvLine {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

class TsvReader {
 public:
  TsvReader(std::istream& in, std::string_view source)
      : in_(in), source_(source) {}

  bool Next(TsvLine& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (number_ == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
      if (raw.empty() || raw[0] == '#') continue;
      line.number = number_;
      line.fields.clear();
      std::size_t start = 0;
      while (true) {
        std::size_t tab = raw.find('\t', start);
        line.fields.push_back(raw.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const TsvLine& line, const std::string& what) const {
    throw ParseError(Where(line) + ": " + what);
  }

  std::string Where(const TsvLine& line) const {
    return std::string(source_) + ":" + std::to_string(line.number);
  }

  void ExpectFields(const TsvLine& line, std::size_t min,
                    std::size_t max) const {
    if (line.fields.size() < min || line.fields.size() > max) {
      Fail(line, "expected " + std::to_string(min) +
                     (min == max ? "" : "-" + std::to_string(max)) +
                     " tab-separated fields, got " +
                     std::to_string(line.fields.size()));
    }
  }

  char32_t Hex(const TsvLine& line, std::string_view text) const {
    std::string_view s = text;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      s.remove_prefix(2);
    } else if (s.size() > 2 && (s[0] == 'U' || s[0] == 'u') && s[1] == '+') {
      s.remove_prefix(2);
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
        value > 0x10FFFF) {
      Fail(line, "bad hex codepoint '" + std::string(text) + "'");
    }
    return static_cast<char32_t>(value);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

inline std::vector<std::string> SplitComma(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view item = s.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace lingattack::internal

#endif  // LINGATTACK_SRC_TSV_H_
