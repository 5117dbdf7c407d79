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

// Shared helpers for the test binaries: independent reference
// computations and small fakes. Nothing here calls the code it checks
// except to obtain inputs.

#ifndef LINGATTACK_TESTS_TESTING_H_
#define LINGATTACK_TESTS_TESTING_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lingattack/attack.h"
#include "lingattack/oracle.h"
#include "lingattack/perturb.h"
#include "lingattack/resources.h"
#include "lingattack/script.h"
#include "lingattack/similarity.h"
#include "lingattack/text.h"

namespace lingattack::testing {

inline std::string ResourceDir() { return LINGATTACK_TEST_RESOURCE_DIR; }
inline std::string FixtureDir() { return LINGATTACK_TEST_FIXTURE_DIR; }

inline const ResourceBundle& SharedBundle() {
  static const ResourceBundle bundle = LoadBundle(ResourceDir());
  return bundle;
}

inline std::string U8(char32_t c) { return ToUtf8(c); }

// Splits on ASCII spaces only; test sentences never use anything else.
inline std::vector<std::string> SpaceSplit(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string SpaceJoin(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

inline std::size_t ArgmaxRef(const std::vector<double>& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[best]) best = i;
  }
  return best;
}

// Word importance written straight from the definition: drop in the
// clean label's probability, plus the masked label's gain when masking
// changes the prediction.
inline std::vector<double> BruteForceImportance(
    const std::vector<std::string>& segments, std::size_t target,
    ClassifierOracle& oracle) {
  const std::vector<double> clean = oracle.Classify(segments);
  const std::size_t y = ArgmaxRef(clean);
  const std::vector<std::string> words = SpaceSplit(segments[target]);
  std::vector<double> scores;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<std::string> w = words;
    w[i] = oracle.mask_token();
    std::vector<std::string> masked = segments;
    masked[target] = SpaceJoin(w);
    const std::vector<double> m = oracle.Classify(masked);
    const std::size_t ybar = ArgmaxRef(m);
    double s = clean[y] - m[y];
    if (ybar != y) s += m[ybar] - clean[ybar];
    scores.push_back(s);
  }
  return scores;
}

// chrF by explicit n-gram multisets.
inline double ChrfOracle(const std::string& hyp, const std::string& ref,
                         int max_n = 6, double beta = 2.0) {
  auto strip = [](const std::string& s) {
    std::u32string out;
    for (char32_t c : ToCodepoints(s)) {
      if (c != U' ' && c != U'\t' && c != U'\n') out += c;
    }
    return out;
  };
  const std::u32string h = strip(hyp);
  const std::u32string r = strip(ref);
  if (h.empty() && r.empty()) return 1.0;
  auto grams = [](const std::u32string& s, int n) {
    std::map<std::u32string, int> m;
    for (int i = 0; i + n <= static_cast<int>(s.size()); ++i) {
      ++m[s.substr(i, n)];
    }
    return m;
  };
  double p_sum = 0.0;
  double r_sum = 0.0;
  int levels = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto hg = grams(h, n);
    const auto rg = grams(r, n);
    int h_total = 0;
    int r_total = 0;
    for (const auto& [g, c] : hg) h_total += c;
    for (const auto& [g, c] : rg) r_total += c;
    if (h_total == 0 && r_total == 0) continue;
    int match = 0;
    for (const auto& [g, c] : hg) {
      auto it = rg.find(g);
      if (it != rg.end()) match += std::min(c, it->second);
    }
    p_sum += h_total ? static_cast<double>(match) / h_total : 0.0;
    r_sum += r_total ? static_cast<double>(match) / r_total : 0.0;
    ++levels;
  }
  const double p = p_sum / levels;
  const double rr = r_sum / levels;
  if (p + rr == 0.0) return 0.0;
  const double b2 = beta * beta;
  return (1 + b2) * p * rr / (b2 * p + rr);
}

// Hand-built 11-dimensional articulation vector: five place slots,
// voiced, aspirated, nasal, sibilant, short, long.
inline std::vector<double> HandFeatureVector(int place, bool voiced,
                                             bool aspirated, bool nasal,
                                             bool sibilant, int length) {
  std::vector<double> v(11, 0.0);
  if (place >= 0) v[place] = 1;
  v[5] = voiced;
  v[6] = aspirated;
  v[7] = nasal;
  v[8] = sibilant;
  if (length == 0) v[9] = 1;
  if (length == 1) v[10] = 1;
  return v;
}

inline double HandCosine(const std::vector<double>& a,
                         const std::vector<double>& b) {
  double d = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return d / std::sqrt(na * nb);
}

inline constexpr char32_t kVirama[] = {0x094D, 0x09CD, 0x0A4D, 0x0ACD, 0x0B4D,
                                       0x0BCD, 0x0C4D, 0x0CCD, 0x0D4D};

// Checks the single-edit contract of one candidate against its source
// word. Returns an empty string when it holds.
inline std::string EditContractViolation(const std::string& original,
                                         const Candidate& c,
                                         const ScriptTable& scripts) {
  if (c.word == original) return "candidate equals original";
  if (c.kind == PerturbationKind::kSynonym) return "";
  const std::u32string a = ToCodepoints(original);
  const std::u32string b = ToCodepoints(c.word);
  if (a.size() != b.size()) return "length changed";
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (c.kind == PerturbationKind::kConjunctSwap) {
    if (diff.size() != 2 || diff[1] != diff[0] + 2) return "not a transposition";
    const std::size_t i = diff[0];
    const char32_t v = a[i + 1];
    if (std::find(std::begin(kVirama), std::end(kVirama), v) ==
        std::end(kVirama)) {
      return "no virama between swapped consonants";
    }
    if (a[i] != b[i + 2] || a[i + 2] != b[i]) return "not a swap";
    if (scripts.Classify(a[i]) != CharClass::kConsonant ||
        scripts.Classify(a[i + 2]) != CharClass::kConsonant) {
      return "swapped non-consonants";
    }
    if (c.position.codepoint != i) return "wrong recorded position";
    return "";
  }
  if (diff.size() != 1) return "more than one codepoint changed";
  const std::size_t i = diff[0];
  if (c.position.codepoint != i) return "wrong recorded position";
  if (c.replaced != std::u32string(1, a[i]) ||
      c.replacement != std::u32string(1, b[i])) {
    return "replaced/replacement mismatch";
  }
  if (!scripts.IsAssigned(b[i])) return "replacement unassigned";
  if (scripts.Classify(a[i]) != scripts.Classify(b[i])) return "class changed";
  if (DetectScript(a[i]) != DetectScript(b[i])) return "script changed";
  return "";
}

// Embedding provider that scores every text outside `originals` at
// cosine 0.5 against them.
class FixedCosineProvider : public EmbeddingProvider {
 public:
  explicit FixedCosineProvider(std::set<std::string> originals)
      : originals_(std::move(originals)) {}

  Vector EmbedSentence(std::string_view text) override {
    if (originals_.count(std::string(text))) return {1.0, 0.0};
    return {0.5, std::sqrt(0.75)};
  }
  std::vector<TokenEmbedding> EmbedTokens(std::string_view text) override {
    std::vector<TokenEmbedding> out;
    for (std::string& w : SplitWords(text)) out.push_back({w, {1.0, 0.0}});
    return out;
  }
  std::size_t dimension() const override { return 2; }

 private:
  std::set<std::string> originals_;
};

}  // namespace lingattack::testing

#endif  // LINGATTACK_TESTS_TESTING_H_
