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


#ifndef LEXNORM_CORPUS_H_
#define LEXNORM_CORPUS_H_

#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexnorm {

// One raw token and, for annotated data, its canonical form. The gold form
// may contain single spaces, in which case the token expands to several
// words.
struct TokenEntry {
  std::string raw;
  std::optional<std::string> gold;

  bool operator==(const TokenEntry&) const = default;
};

// A tweet-sized unit of annotation.
struct Utterance {
  std::vector<TokenEntry> tokens;
  std::optional<std::string> id;

  bool operator==(const Utterance&) const = default;

  bool HasGold() const;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& message, size_t line)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}

  // 1-based line number of the offending input, 0 when not line-specific.
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Reads the vertical format: one `raw<TAB>gold` (or bare `raw`) per line,
// utterances separated by blank lines. A line with an empty gold column
// marks a many-to-one merge; merges are not supported, so such tokens are
// kept as identity pairs and a warning is appended to `warnings`.
std::vector<Utterance> ParseCorpus(std::istream& in,
                                   std::vector<std::string>* warnings = nullptr);
std::vector<Utterance> ReadCorpusFile(const std::string& path,
                                      std::vector<std::string>* warnings = nullptr);

// Writes the vertical format; tokens without gold are written single-column.
void WriteCorpus(std::ostream& out, const std::vector<Utterance>& utterances);

// Checks the Utterance/TokenEntry invariants, throwing CorpusError.
void ValidateUtterance(const Utterance& utterance);

struct PreprocessRules {
  std::string username_placeholder = "<USERNAME>";
  std::string url_placeholder = "<URL>";
  bool lowercase = true;
};

// Maps @-mentions and URLs to placeholders and optionally lowercases.
// Placeholders themselves pass through untouched, so this is idempotent.
std::string PreprocessToken(const std::string& raw, const PreprocessRules& rules);

// Streams whitespace-tokenized sentences, one per line, applying
// PreprocessToken to every token. Blank lines are skipped.
class RawTextReader {
 public:
  RawTextReader(std::istream& in, PreprocessRules rules)
      : in_(in), rules_(std::move(rules)) {}

  // Fills `tokens` with the next sentence; returns false at end of input.
  bool Next(std::vector<std::string>* tokens);

 private:
  std::istream& in_;
  PreprocessRules rules_;
  std::string line_;
};

void IngestRawText(std::istream& in, const PreprocessRules& rules,
                   const std::function<void(std::vector<std::string>&)>& sink);

}  // namespace lexnorm

#endif  // LEXNORM_CORPUS_H_
