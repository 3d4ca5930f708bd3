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


#include "lexnorm/eval.h"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "lexnorm/text.h"

namespace lexnorm {
namespace {

void CheckAligned(const std::vector<Utterance>& gold,
                  const std::vector<std::vector<RankedToken>>& system) {
  if (gold.size() != system.size()) {
    throw std::invalid_argument(
        "system output has " + std::to_string(system.size()) +
        " utterances, gold has " + std::to_string(gold.size()));
  }
  for (size_t u = 0; u < gold.size(); ++u) {
    if (gold[u].tokens.size() != system[u].size()) {
      throw std::invalid_argument("utterance " + std::to_string(u + 1) +
                                  ": system output has " +
                                  std::to_string(system[u].size()) +
                                  " tokens, gold has " +
                                  std::to_string(gold[u].tokens.size()));
    }
    for (const auto& t : gold[u].tokens) {
      if (!t.gold) {
        throw std::invalid_argument("utterance " + std::to_string(u + 1) +
                                    " has tokens without gold");
      }
    }
  }
}

}  // namespace

void EvalCounts::Add(const std::string& raw, const std::string& gold,
                     const std::string& chosen) {
  const std::string r = CanonicalForm(raw);
  const std::string g = CanonicalForm(gold);
  const std::string c = CanonicalForm(chosen);
  const bool annotated = g != r;
  const bool changed = c != r;
  ++tokens;
  if (annotated && changed) {
    if (c == g) {
      ++tp;
    } else {
      ++fp;
      ++fn;
      ++wrong_normalizations;
    }
  } else if (annotated) {
    ++fn;
  } else if (changed) {
    ++fp;
  } else {
    ++tn;
  }
}

EvalCounts& EvalCounts::operator+=(const EvalCounts& o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  wrong_normalizations += o.wrong_normalizations;
  tokens += o.tokens;
  return *this;
}

EvalCounts CountOutcomes(const std::vector<Utterance>& gold,
                         const std::vector<std::vector<RankedToken>>& system) {
  CheckAligned(gold, system);
  EvalCounts counts;
  for (size_t u = 0; u < gold.size(); ++u) {
    for (size_t i = 0; i < gold[u].tokens.size(); ++i) {
      const auto& t = gold[u].tokens[i];
      counts.Add(t.raw, *t.gold, system[u][i].chosen);
    }
  }
  return counts;
}

Metrics Prf(const EvalCounts& c) {
  Metrics m;
  auto ratio = [](int64_t num, int64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  m.recall = ratio(c.tp, c.tp + c.fn);
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.f1 = m.recall + m.precision == 0.0
             ? 0.0
             : 2.0 * m.recall * m.precision / (m.recall + m.precision);
  m.accuracy = ratio(c.tp + c.tn, c.tokens);
  return m;
}

Metrics Evaluate(const std::vector<Utterance>& gold,
                 const std::vector<std::vector<RankedToken>>& system) {
  Metrics m = Prf(CountOutcomes(gold, system));
  m.wer = Wer(gold, system);
  return m;
}

bool NeedsNormalization(const TokenEntry& token) {
  return token.gold && CanonicalForm(*token.gold) != CanonicalForm(token.raw);
}

double AccuracyGoldEd(const std::vector<Utterance>& gold,
                      const std::vector<std::vector<RankedToken>>& system) {
  CheckAligned(gold, system);
  int64_t anomalies = 0;
  int64_t correct = 0;
  for (size_t u = 0; u < gold.size(); ++u) {
    for (size_t i = 0; i < gold[u].tokens.size(); ++i) {
      const auto& t = gold[u].tokens[i];
      if (!NeedsNormalization(t)) continue;
      ++anomalies;
      if (CanonicalForm(system[u][i].chosen) == CanonicalForm(*t.gold)) ++correct;
    }
  }
  if (anomalies == 0) return 1.0;
  return static_cast<double>(correct) / static_cast<double>(anomalies);
}

size_t TokenEditDistance(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double Wer(const std::vector<Utterance>& gold,
           const std::vector<std::vector<RankedToken>>& system) {
  CheckAligned(gold, system);
  size_t distance = 0;
  size_t length = 0;
  for (size_t u = 0; u < gold.size(); ++u) {
    std::vector<std::string> ref;
    for (const auto& t : gold[u].tokens) {
      for (auto& w : SplitWhitespace(CanonicalForm(*t.gold))) ref.push_back(std::move(w));
    }
    std::vector<std::string> hyp;
    for (const auto& w : Flatten(system[u])) hyp.push_back(ToLower(w));
    distance += TokenEditDistance(ref, hyp);
    length += ref.size();
  }
  if (length == 0) return distance == 0 ? 0.0 : 1.0;
  return static_cast<double>(distance) / static_cast<double>(length);
}

double TopNRecall(const std::vector<Utterance>& gold,
                  const std::vector<std::vector<RankedToken>>& system, int n) {
  if (n < 1) throw std::invalid_argument("top-N recall needs n >= 1");
  CheckAligned(gold, system);
  int64_t tokens = 0;
  int64_t found = 0;
  for (size_t u = 0; u < gold.size(); ++u) {
    for (size_t i = 0; i < gold[u].tokens.size(); ++i) {
      ++tokens;
      const std::string g = CanonicalForm(*gold[u].tokens[i].gold);
      const auto& cands = system[u][i].candidates;
      const size_t limit = std::min(cands.size(), static_cast<size_t>(n));
      for (size_t k = 0; k < limit; ++k) {
        if (CanonicalForm(cands[k].surface) == g) {
          ++found;
          break;
        }
      }
    }
  }
  if (tokens == 0) return 0.0;
  return static_cast<double>(found) / static_cast<double>(tokens);
}

size_t MaxCandidates(const std::vector<std::vector<RankedToken>>& system) {
  size_t best = 0;
  for (const auto& utt : system) {
    for (const auto& t : utt) best = std::max(best, t.candidates.size());
  }
  return best;
}

std::string FormatPercent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  return buf;
}

void Report::WriteText(std::ostream& out) const {
  if (!title.empty()) out << title << '\n';
  for (const auto& n : notes) out << "# " << n << '\n';
  std::vector<size_t> width(columns.size(), 0);
  for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[c];
      if (c + 1 < cells.size() && c < width.size()) {
        out << std::string(width[c] - cells[c].size(), ' ');
      }
    }
    out << '\n';
  };
  line(columns);
  size_t total = 0;
  for (size_t w : width) total += w;
  if (!width.empty()) total += 2 * (width.size() - 1);
  out << std::string(total, '-') << '\n';
  for (const auto& row : rows) line(row);
}

void Report::WriteTsv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << '\t';
      out << cells[c];
    }
    out << '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

}  // namespace lexnorm
