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


#ifndef LEXNORM_SPELLCHECK_H_
#define LEXNORM_SPELLCHECK_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexnorm/lexicon.h"

namespace lexnorm {

// Levenshtein distance over code points with unit costs.
int EditDistance(std::string_view a, std::string_view b);
int EditDistance(std::u32string_view a, std::u32string_view b);

// As EditDistance, but returns bound + 1 as soon as the distance is known to
// exceed `bound`.
int BoundedEditDistance(std::u32string_view a, std::u32string_view b, int bound);

// Sound-class key: the first letter verbatim, then the digit classes of the
// remaining consonants ({bfpv}=1 {cgjkqsxz}=2 {dt}=3 {l}=4 {mn}=5 {r}=6)
// with vowels, h, w, y and other letters dropped and adjacent repeats
// collapsed. Non-letters are ignored entirely. No truncation.
std::string PhoneticKey(std::string_view word);

enum class SpellModeName { kNormal, kBadSpellers };

struct SpellMode {
  SpellModeName name = SpellModeName::kNormal;
  int max_char_edit = 2;
  int max_phonetic_edit = 1;

  static SpellMode Normal() { return {SpellModeName::kNormal, 2, 1}; }
  static SpellMode BadSpellers() { return {SpellModeName::kBadSpellers, 4, 2}; }
};

std::string SpellModeToString(SpellModeName name);
SpellModeName SpellModeFromString(const std::string& name);

struct SpellWeights {
  double char_weight = 1.0;
  double phonetic_weight = 1.0;
};

struct Suggestion {
  std::string word;
  double distance = 0.0;
  int char_edit = 0;
  int phonetic_edit = 0;
  int rank = 0;
};

// Spelling suggestions from a fixed dictionary. A word qualifies if its
// character edit distance to the query is within the mode's character bound
// or the edit distance between phonetic keys is within the phonetic bound.
// Results are sorted by (combined distance, character edit, word).
class SpellChecker {
 public:
  // Keeps a reference to `dict`, which must outlive the checker.
  explicit SpellChecker(const Dictionary& dict);

  std::vector<Suggestion> Suggest(std::string_view word, const SpellMode& mode,
                                  const SpellWeights& weights = {}) const;

  const Dictionary& dictionary() const { return dict_; }

 private:
  struct Entry {
    std::u32string chars;
    std::u32string key;
  };

  struct KeyGroup {
    std::u32string key;
    std::vector<size_t> entries;
  };

  const Dictionary& dict_;
  std::vector<Entry> entries_;  // parallel to dict_.sorted_words()
  std::vector<KeyGroup> keys_;
  // Entry indices bucketed by code point length, key groups by key length.
  std::vector<std::vector<size_t>> by_length_;
  std::vector<std::vector<size_t>> keys_by_length_;
};

// Sorts and ranks suggestions in place.
void RankSuggestions(std::vector<Suggestion>* suggestions);

}  // namespace lexnorm

#endif  // LEXNORM_SPELLCHECK_H_
