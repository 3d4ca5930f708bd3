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


#ifndef LEXNORM_LEXICON_H_
#define LEXNORM_LEXICON_H_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexnorm/corpus.h"

namespace lexnorm {

// Canonical word list. Entries are lowercased and whitespace-free.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(const std::vector<std::string>& words);

  // One word per line. Blank lines are skipped; an empty result is an error.
  static Dictionary Load(std::istream& in);
  static Dictionary LoadFile(const std::string& path);

  bool Contains(std::string_view word) const;

  // Words in ascending byte order.
  const std::vector<std::string>& sorted_words() const { return sorted_; }
  size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }

 private:
  std::vector<std::string> sorted_;
  std::unordered_set<std::string> index_;
};

struct ReplacementCount {
  std::string replacement;
  int64_t count = 0;

  bool operator==(const ReplacementCount&) const = default;
};

// Replacement pairs harvested from annotated data, identity pairs included.
class LookupTable {
 public:
  // Counts every (lowercased raw, lowercased gold) occurrence. Throws
  // CorpusError naming the utterance if any token lacks gold.
  static LookupTable Build(const std::vector<Utterance>& training);

  // Replacements for `raw` sorted by replacement; empty when unseen.
  const std::vector<ReplacementCount>& Candidates(const std::string& raw) const;

  // Count of the pair raw -> replacement, 0 when unseen.
  int64_t Count(const std::string& raw, const std::string& replacement) const;

  int64_t TotalCount() const;
  size_t size() const { return pairs_.size(); }
  const std::map<std::string, std::vector<ReplacementCount>>& pairs() const {
    return pairs_;
  }

  // Tab-separated `raw replacement count`, one pair per line.
  void Write(std::ostream& out) const;
  static LookupTable Read(std::istream& in);

  bool operator==(const LookupTable&) const = default;

 private:
  void Add(const std::string& raw, const std::string& replacement, int64_t n);

  std::map<std::string, std::vector<ReplacementCount>> pairs_;
};

// Every raw and gold word form (gold split on spaces) seen in training,
// lowercased. Used by the candidate filter.
std::unordered_set<std::string> TrainingVocabulary(
    const std::vector<Utterance>& training);

}  // namespace lexnorm

#endif  // LEXNORM_LEXICON_H_
