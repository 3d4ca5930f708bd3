// Copyright 2026 The Lexnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lexnorm/spellcheck.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lexnorm/text.h"

namespace lexnorm {
namespace {

// Sound class of an ASCII lowercase letter; 0 for letters that are dropped.
char SoundClass(char32_t c) {
  switch (c) {
    case 'b': case 'f': case 'p': case 'v':
      return '1';
    case 'c': case 'g': case 'j': case 'k': case 'q': case 's': case 'x':
    case 'z':
      return '2';
    case 'd': case 't':
      return '3';
    case 'l':
      return '4';
    case 'm': case 'n':
      return '5';
    case 'r':
      return '6';
    default:
      return 0;
  }
}

}  // namespace

int EditDistance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<int> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const int up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

int EditDistance(std::string_view a, std::string_view b) {
  return EditDistance(DecodeUtf8(a), DecodeUtf8(b));
}

int BoundedEditDistance(std::u32string_view a, std::u32string_view b,
                        int bound) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (std::abs(n - m) > bound) return bound + 1;
  constexpr int kInf = 1 << 29;
  std::vector<int> prev(m + 1, kInf);
  std::vector<int> cur(m + 1, kInf);
  for (int j = 0; j <= std::min(m, bound); ++j) prev[j] = j;
  for (int i = 1; i <= n; ++i) {
    const int lo = std::max(1, i - bound);
    const int hi = std::min(m, i + bound);
    std::fill(cur.begin(), cur.end(), kInf);
    if (i <= bound) cur[0] = i;
    int row_min = cur[0];
    for (int j = lo; j <= hi; ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const int v = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    if (row_min > bound) return bound + 1;
    std::swap(prev, cur);
  }
  return std::min(prev[m], bound + 1);
}

std::string PhoneticKey(std::string_view word) {
  std::u32string key;
  char last = 0;
  bool first = true;
  for (char32_t c : DecodeUtf8(word)) {
    c = ToLower(c);
    if (!IsAlpha(c)) continue;
    if (first) {
      key.push_back(c);
      first = false;
      continue;
    }
    const char cls = SoundClass(c);
    if (cls == 0 || cls == last) continue;
    key.push_back(static_cast<char32_t>(cls));
    last = cls;
  }
  return EncodeUtf8(key);
}

std::string SpellModeToString(SpellModeName name) {
  return name == SpellModeName::kNormal ? "normal" : "bad-spellers";
}

SpellModeName SpellModeFromString(const std::string& name) {
  if (name == "normal") return SpellModeName::kNormal;
  if (name == "bad-spellers") return SpellModeName::kBadSpellers;
  throw std::invalid_argument("unknown spell mode '" + name + "'");
}

SpellChecker::SpellChecker(const Dictionary& dict) : dict_(dict) {
  std::map<std::u32string, size_t> key_ids;
  entries_.reserve(dict.size());
  for (const auto& w : dict.sorted_words()) {
    const size_t index = entries_.size();
    Entry e{DecodeUtf8(w), DecodeUtf8(PhoneticKey(w))};
    if (by_length_.size() <= e.chars.size()) by_length_.resize(e.chars.size() + 1);
    by_length_[e.chars.size()].push_back(index);
    auto [it, inserted] = key_ids.emplace(e.key, keys_.size());
    if (inserted) {
      keys_.push_back({e.key, {}});
      if (keys_by_length_.size() <= e.key.size()) {
        keys_by_length_.resize(e.key.size() + 1);
      }
      keys_by_length_[e.key.size()].push_back(it->second);
    }
    keys_[it->second].entries.push_back(index);
    entries_.push_back(std::move(e));
  }
}

std::vector<Suggestion> SpellChecker::Suggest(std::string_view word,
                                              const SpellMode& mode,
                                              const SpellWeights& weights) const {
  if (word.empty()) return {};
  const std::u32string query = DecodeUtf8(word);
  const std::u32string query_key = DecodeUtf8(PhoneticKey(word));

  std::vector<size_t> selected;
  const auto window = [](size_t len, int bound, size_t limit) {
    const size_t lo = len > static_cast<size_t>(bound) ? len - bound : 0;
    const size_t hi = std::min(limit, len + static_cast<size_t>(bound) + 1);
    return std::pair<size_t, size_t>(lo, hi);
  };

  const auto [len_lo, len_hi] =
      window(query.size(), mode.max_char_edit, by_length_.size());
  for (size_t len = len_lo; len < len_hi; ++len) {
    for (size_t index : by_length_[len]) {
      if (BoundedEditDistance(query, entries_[index].chars,
                              mode.max_char_edit) <= mode.max_char_edit) {
        selected.push_back(index);
      }
    }
  }
  const auto [key_lo, key_hi] =
      window(query_key.size(), mode.max_phonetic_edit, keys_by_length_.size());
  for (size_t len = key_lo; len < key_hi; ++len) {
    for (size_t key_id : keys_by_length_[len]) {
      const auto& group = keys_[key_id];
      if (BoundedEditDistance(query_key, group.key, mode.max_phonetic_edit) <=
          mode.max_phonetic_edit) {
        selected.insert(selected.end(), group.entries.begin(),
                        group.entries.end());
      }
    }
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<Suggestion> out;
  out.reserve(selected.size());
  for (size_t index : selected) {
    const auto& e = entries_[index];
    Suggestion s;
    s.word = dict_.sorted_words()[index];
    s.char_edit = EditDistance(query, e.chars);
    s.phonetic_edit = EditDistance(query_key, e.key);
    s.distance = weights.char_weight * s.char_edit +
                 weights.phonetic_weight * s.phonetic_edit;
    out.push_back(std::move(s));
  }
  RankSuggestions(&out);
  return out;
}

void RankSuggestions(std::vector<Suggestion>* suggestions) {
  std::sort(suggestions->begin(), suggestions->end(),
            [](const Suggestion& a, const Suggestion& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              if (a.char_edit != b.char_edit) return a.char_edit < b.char_edit;
              return a.word < b.word;
            });
  for (size_t i = 0; i < suggestions->size(); ++i) {
    (*suggestions)[i].rank = static_cast<int>(i);
  }
}

}  // namespace lexnorm
