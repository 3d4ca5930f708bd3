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


#include "lexnorm/corpus.h"

#include <fstream>

#include "lexnorm/text.h"

namespace lexnorm {
namespace {

bool HasWhitespace(std::string_view s) {
  for (char c : s) {
    if (IsSpace(c)) return true;
  }
  return false;
}

bool IsWellFormedGold(std::string_view gold) {
  return !gold.empty() && NormalizeSpaces(gold) == gold;
}

bool IsUrl(const std::string& token) {
  return StartsWithIgnoreCase(token, "http://") ||
         StartsWithIgnoreCase(token, "https://") ||
         StartsWithIgnoreCase(token, "www.");
}

}  // namespace

bool Utterance::HasGold() const {
  for (const auto& t : tokens) {
    if (!t.gold) return false;
  }
  return true;
}

void ValidateUtterance(const Utterance& utterance) {
  if (utterance.tokens.empty()) throw CorpusError("empty utterance", 0);
  for (const auto& t : utterance.tokens) {
    if (t.raw.empty() || HasWhitespace(t.raw)) {
      throw CorpusError("invalid raw token '" + t.raw + "'", 0);
    }
    if (t.gold && !IsWellFormedGold(*t.gold)) {
      throw CorpusError("invalid gold '" + *t.gold + "' for '" + t.raw + "'", 0);
    }
  }
}

std::vector<Utterance> ParseCorpus(std::istream& in,
                                   std::vector<std::string>* warnings) {
  std::vector<Utterance> out;
  Utterance current;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      out.push_back(std::move(current));
      current = Utterance();
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto fields = SplitOn(line, '\t');
    if (fields.size() > 2) {
      throw CorpusError("expected 1 or 2 tab-separated columns, got " +
                            std::to_string(fields.size()),
                        line_no);
    }
    TokenEntry entry;
    entry.raw = std::string(fields[0]);
    if (entry.raw.empty() || HasWhitespace(entry.raw)) {
      throw CorpusError("raw token is empty or contains whitespace", line_no);
    }
    if (fields.size() == 2) {
      std::string gold(fields[1]);
      if (gold.empty()) {
        if (warnings) {
          warnings->push_back("line " + std::to_string(line_no) +
                              ": merge annotation for '" + entry.raw +
                              "' not supported; kept unchanged");
        }
        gold = entry.raw;
      } else if (!IsWellFormedGold(gold)) {
        throw CorpusError("gold has leading, trailing or repeated spaces",
                          line_no);
      }
      entry.gold = std::move(gold);
    }
    current.tokens.push_back(std::move(entry));
  }
  flush();
  return out;
}

std::vector<Utterance> ReadCorpusFile(const std::string& path,
                                      std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path, 0);
  return ParseCorpus(in, warnings);
}

void WriteCorpus(std::ostream& out, const std::vector<Utterance>& utterances) {
  bool first = true;
  for (const auto& utt : utterances) {
    if (!first) out << '\n';
    first = false;
    for (const auto& t : utt.tokens) {
      out << t.raw;
      if (t.gold) out << '\t' << *t.gold;
      out << '\n';
    }
  }
}

std::string PreprocessToken(const std::string& raw, const PreprocessRules& rules) {
  if (raw == rules.username_placeholder || raw == rules.url_placeholder) {
    return raw;
  }
  if (raw.size() >= 2 && raw[0] == '@') return rules.username_placeholder;
  if (IsUrl(raw)) return rules.url_placeholder;
  return rules.lowercase ? ToLower(raw) : raw;
}

bool RawTextReader::Next(std::vector<std::string>* tokens) {
  tokens->clear();
  while (std::getline(in_, line_)) {
    auto pieces = SplitWhitespace(line_);
    if (pieces.empty()) continue;
    tokens->reserve(pieces.size());
    for (auto& p : pieces) tokens->push_back(PreprocessToken(p, rules_));
    return true;
  }
  return false;
}

void IngestRawText(std::istream& in, const PreprocessRules& rules,
                   const std::function<void(std::vector<std::string>&)>& sink) {
  RawTextReader reader(in, rules);
  std::vector<std::string> tokens;
  while (reader.Next(&tokens)) sink(tokens);
}

}  // namespace lexnorm
