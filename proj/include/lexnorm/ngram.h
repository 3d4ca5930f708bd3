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


#ifndef LEXNORM_NGRAM_H_
#define LEXNORM_NGRAM_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexnorm {

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";

// Unigram and bigram counts with additive smoothing:
//
//   p(w)        = (c(w) + a) / (N + a (V + 1))
//   p(w | prev) = (c(prev, w) + a) / (c(prev) + a (V + 1))
//
// N is the number of word tokens, V the number of word types; the extra slot
// holds the mass of everything outside the vocabulary, which includes the
// end-of-sentence marker. c(<s>) is the number of sentences.
class NGramModel {
 public:
  explicit NGramModel(double alpha = 1.0);

  // Accumulates one sentence; empty sentences are ignored.
  void AddSentence(const std::vector<std::string>& tokens);

  // Drops bigrams seen fewer than `min_count` times. Unigram counts stay
  // exact so N and V are unaffected.
  void PruneBigrams(int64_t min_count);

  double LogProbUnigram(std::string_view word) const;
  // `prev` may be kSentenceStart, `word` may be kSentenceEnd.
  double LogProbBigram(std::string_view prev, std::string_view word) const;

  int64_t UnigramCount(std::string_view word) const;
  int64_t BigramCount(std::string_view prev, std::string_view word) const;
  // Number of times `word` occurs as a left context.
  int64_t ContextCount(std::string_view word) const;

  double alpha() const { return alpha_; }
  int64_t total_tokens() const { return total_tokens_; }
  int64_t vocab_size() const { return static_cast<int64_t>(unigrams_.size()); }
  int64_t sentences() const { return sentences_; }
  const std::unordered_map<std::string, int64_t>& unigrams() const {
    return unigrams_;
  }

  // Line-oriented text serialization with sorted entries.
  void Write(std::ostream& out) const;
  static NGramModel Read(std::istream& in);
  static NGramModel ReadFile(const std::string& path);
  void WriteFile(const std::string& path) const;

  bool operator==(const NGramModel&) const = default;

 private:
  static std::string BigramKey(std::string_view prev, std::string_view word);

  double alpha_;
  int64_t total_tokens_ = 0;
  int64_t sentences_ = 0;
  std::unordered_map<std::string, int64_t> unigrams_;
  std::unordered_map<std::string, int64_t> bigrams_;
};

// Builds a model in one streaming pass. `next` fills the next sentence and
// returns false at the end of the stream.
NGramModel BuildNGram(
    const std::function<bool(std::vector<std::string>*)>& next, double alpha,
    int64_t min_bigram_count = 1);

}  // namespace lexnorm

#endif  // LEXNORM_NGRAM_H_
