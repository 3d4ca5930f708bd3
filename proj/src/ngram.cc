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


#include "lexnorm/ngram.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "lexnorm/corpus.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

constexpr std::string_view kMagic = "lexnorm-ngram";
constexpr int kFormatVersion = 1;

int64_t Lookup(const std::unordered_map<std::string, int64_t>& map,
               const std::string& key) {
  auto it = map.find(key);
  return it == map.end() ? 0 : it->second;
}

}  // namespace

NGramModel::NGramModel(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("smoothing constant must be positive");
  }
}

std::string NGramModel::BigramKey(std::string_view prev, std::string_view word) {
  std::string key;
  key.reserve(prev.size() + word.size() + 1);
  key.append(prev);
  key.push_back(' ');
  key.append(word);
  return key;
}

void NGramModel::AddSentence(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return;
  ++sentences_;
  std::string_view prev = kSentenceStart;
  for (const auto& t : tokens) {
    ++unigrams_[t];
    ++bigrams_[BigramKey(prev, t)];
    prev = t;
  }
  ++bigrams_[BigramKey(prev, kSentenceEnd)];
  total_tokens_ += static_cast<int64_t>(tokens.size());
}

void NGramModel::PruneBigrams(int64_t min_count) {
  std::erase_if(bigrams_,
                [min_count](const auto& kv) { return kv.second < min_count; });
}

int64_t NGramModel::UnigramCount(std::string_view word) const {
  return Lookup(unigrams_, std::string(word));
}

int64_t NGramModel::BigramCount(std::string_view prev,
                                std::string_view word) const {
  return Lookup(bigrams_, BigramKey(prev, word));
}

int64_t NGramModel::ContextCount(std::string_view word) const {
  if (word == kSentenceStart) return sentences_;
  return UnigramCount(word);
}

double NGramModel::LogProbUnigram(std::string_view word) const {
  const double denom =
      static_cast<double>(total_tokens_) + alpha_ * (vocab_size() + 1);
  return std::log((UnigramCount(word) + alpha_) / denom);
}

double NGramModel::LogProbBigram(std::string_view prev,
                                 std::string_view word) const {
  const double denom =
      static_cast<double>(ContextCount(prev)) + alpha_ * (vocab_size() + 1);
  return std::log((BigramCount(prev, word) + alpha_) / denom);
}

void NGramModel::Write(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "alpha " << FormatDouble(alpha_) << '\n';
  out << "tokens " << total_tokens_ << '\n';
  out << "sentences " << sentences_ << '\n';
  std::vector<std::pair<std::string, int64_t>> sorted(unigrams_.begin(),
                                                      unigrams_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [w, c] : sorted) out << "1\t" << w << '\t' << c << '\n';
  sorted.assign(bigrams_.begin(), bigrams_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [key, c] : sorted) {
    const size_t space = key.find(' ');
    out << "2\t" << key.substr(0, space) << '\t' << key.substr(space + 1) << '\t'
        << c << '\n';
  }
}

NGramModel NGramModel::Read(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  auto header = [&](std::string_view name) -> std::string {
    ++line_no;
    if (!std::getline(in, line)) throw CorpusError("truncated n-gram model", line_no);
    const auto fields = SplitWhitespace(line);
    if (fields.size() != 2 || fields[0] != name) {
      throw CorpusError("expected '" + std::string(name) + "'", line_no);
    }
    return fields[1];
  };
  try {
    if (ParseInt(header(kMagic)) != kFormatVersion) {
      throw CorpusError("unsupported n-gram model version", line_no);
    }
    NGramModel model(ParseDouble(header("alpha")));
    model.total_tokens_ = ParseInt(header("tokens"));
    model.sentences_ = ParseInt(header("sentences"));
    int64_t sum = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto f = SplitOn(line, '\t');
      if (f.size() == 3 && f[0] == "1") {
        const int64_t c = ParseInt(f[2]);
        model.unigrams_[std::string(f[1])] = c;
        sum += c;
      } else if (f.size() == 4 && f[0] == "2") {
        model.bigrams_[BigramKey(f[1], f[2])] = ParseInt(f[3]);
      } else {
        throw CorpusError("malformed n-gram entry", line_no);
      }
    }
    if (sum != model.total_tokens_) {
      throw CorpusError("unigram counts do not sum to the token total", 0);
    }
    return model;
  } catch (const std::invalid_argument& e) {
    throw CorpusError(e.what(), line_no);
  }
}

NGramModel NGramModel::ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open n-gram model " + path);
  return Read(in);
}

void NGramModel::WriteFile(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write n-gram model " + path);
  Write(out);
  if (!out) throw std::runtime_error("error writing n-gram model " + path);
}

NGramModel BuildNGram(
    const std::function<bool(std::vector<std::string>*)>& next, double alpha,
    int64_t min_bigram_count) {
  NGramModel model(alpha);
  std::vector<std::string> tokens;
  while (next(&tokens)) model.AddSentence(tokens);
  if (min_bigram_count > 1) model.PruneBigrams(min_bigram_count);
  return model;
}

}  // namespace lexnorm
