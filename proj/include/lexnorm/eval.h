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


#ifndef LEXNORM_EVAL_H_
#define LEXNORM_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lexnorm/corpus.h"
#include "lexnorm/normalizer.h"

namespace lexnorm {

// Per-token outcome counts. A token the annotators normalized and the system
// normalized to a different word counts as both a false positive and a false
// negative; `wrong_normalizations` records how many such tokens there were,
// so tp + fp + tn + fn - wrong_normalizations == tokens.
struct EvalCounts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t tn = 0;
  int64_t fn = 0;
  int64_t wrong_normalizations = 0;
  int64_t tokens = 0;

  // Classifies one token. All three strings are compared in canonical form.
  void Add(const std::string& raw, const std::string& gold,
           const std::string& chosen);
  EvalCounts& operator+=(const EvalCounts& o);
  bool operator==(const EvalCounts&) const = default;
};

struct Metrics {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;  // (tp + tn) / tokens
  double wer = 0.0;
};

// Throws std::invalid_argument when `system` is not aligned with `gold`.
EvalCounts CountOutcomes(const std::vector<Utterance>& gold,
                         const std::vector<std::vector<RankedToken>>& system);

// Recall, precision, F1 and accuracy from counts; zero denominators give 0.
Metrics Prf(const EvalCounts& counts);

// Counts, metrics and corpus WER in one call.
Metrics Evaluate(const std::vector<Utterance>& gold,
                 const std::vector<std::vector<RankedToken>>& system);

// Fraction of tokens needing normalization whose top candidate is the gold
// form. 1.0 when no token needs normalization.
double AccuracyGoldEd(const std::vector<Utterance>& gold,
                      const std::vector<std::vector<RankedToken>>& system);

// Levenshtein distance over token sequences.
size_t TokenEditDistance(const std::vector<std::string>& a,
                         const std::vector<std::string>& b);

// Sum of per-utterance token edit distances between the flattened system
// output and the flattened gold, over the total flattened gold length.
double Wer(const std::vector<Utterance>& gold,
           const std::vector<std::vector<RankedToken>>& system);

// Fraction of all tokens whose gold form is among the first `n` candidates.
double TopNRecall(const std::vector<Utterance>& gold,
                  const std::vector<std::vector<RankedToken>>& system, int n);

size_t MaxCandidates(const std::vector<std::vector<RankedToken>>& system);

// True iff the annotators changed this token.
bool NeedsNormalization(const TokenEntry& token);

// A table printed either aligned for reading or tab-separated for tools.
struct Report {
  std::string title;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void WriteText(std::ostream& out) const;
  void WriteTsv(std::ostream& out) const;
};

// A fraction as a percentage with two decimals, e.g. 0.86391 -> "86.39".
std::string FormatPercent(double fraction);

}  // namespace lexnorm

#endif  // LEXNORM_EVAL_H_
