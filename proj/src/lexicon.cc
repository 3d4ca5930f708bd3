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


#include "lexnorm/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "lexnorm/text.h"

namespace lexnorm {

Dictionary::Dictionary(const std::vector<std::string>& words) {
  sorted_.reserve(words.size());
  for (const auto& w : words) {
    std::string lower = ToLower(w);
    if (lower.empty()) continue;
    for (char c : lower) {
      if (IsSpace(c)) {
        throw std::invalid_argument("dictionary word contains whitespace: '" +
                                    w + "'");
      }
    }
    sorted_.push_back(std::move(lower));
  }
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  index_.reserve(sorted_.size());
  for (const auto& w : sorted_) index_.insert(w);
}

Dictionary Dictionary::Load(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = NormalizeSpaces(line);
    if (word.empty()) continue;
    words.push_back(std::move(word));
  }
  if (words.empty()) throw std::runtime_error("dictionary is empty");
  return Dictionary(words);
}

Dictionary Dictionary::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dictionary " + path);
  return Load(in);
}

bool Dictionary::Contains(std::string_view word) const {
  if (word.empty()) return false;
  return index_.count(std::string(word)) > 0;
}

LookupTable LookupTable::Build(const std::vector<Utterance>& training) {
  LookupTable table;
  for (size_t u = 0; u < training.size(); ++u) {
    const auto& utt = training[u];
    for (const auto& t : utt.tokens) {
      if (!t.gold) {
        throw CorpusError("utterance " + (utt.id ? *utt.id : std::to_string(u)) +
                              " has token '" + t.raw + "' without gold",
                          0);
      }
      table.Add(ToLower(t.raw), CanonicalForm(*t.gold), 1);
    }
  }
  return table;
}

void LookupTable::Add(const std::string& raw, const std::string& replacement,
                      int64_t n) {
  auto& list = pairs_[raw];
  auto it = std::lower_bound(
      list.begin(), list.end(), replacement,
      [](const ReplacementCount& rc, const std::string& r) {
        return rc.replacement < r;
      });
  if (it != list.end() && it->replacement == replacement) {
    it->count += n;
  } else {
    list.insert(it, ReplacementCount{replacement, n});
  }
}

const std::vector<ReplacementCount>& LookupTable::Candidates(
    const std::string& raw) const {
  static const std::vector<ReplacementCount> kEmpty;
  auto it = pairs_.find(raw);
  return it == pairs_.end() ? kEmpty : it->second;
}

int64_t LookupTable::Count(const std::string& raw,
                           const std::string& replacement) const {
  for (const auto& rc : Candidates(raw)) {
    if (rc.replacement == replacement) return rc.count;
  }
  return 0;
}

int64_t LookupTable::TotalCount() const {
  int64_t total = 0;
  for (const auto& [raw, list] : pairs_) {
    for (const auto& rc : list) total += rc.count;
  }
  return total;
}

void LookupTable::Write(std::ostream& out) const {
  for (const auto& [raw, list] : pairs_) {
    for (const auto& rc : list) {
      out << raw << '\t' << rc.replacement << '\t' << rc.count << '\n';
    }
  }
}

LookupTable LookupTable::Read(std::istream& in) {
  LookupTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = SplitOn(line, '\t');
    int64_t count = 0;
    if (fields.size() != 3 ||
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(),
                        count)
                .ec != std::errc() ||
        count < 1) {
      throw CorpusError("malformed lookup entry", line_no);
    }
    table.Add(std::string(fields[0]), std::string(fields[1]), count);
  }
  return table;
}

std::unordered_set<std::string> TrainingVocabulary(
    const std::vector<Utterance>& training) {
  std::unordered_set<std::string> vocab;
  for (const auto& utt : training) {
    for (const auto& t : utt.tokens) {
      vocab.insert(ToLower(t.raw));
      if (t.gold) {
        for (auto& w : SplitWhitespace(ToLower(*t.gold))) vocab.insert(std::move(w));
      }
    }
  }
  return vocab;
}

}  // namespace lexnorm
