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


#include "lexnorm/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "lexnorm/corpus.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

double Norm(std::span<const float> v) {
  double sum = 0.0;
  for (float x : v) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

double Dot(std::span<const float> u, std::span<const float> v) {
  double sum = 0.0;
  for (size_t i = 0; i < u.size(); ++i) sum += static_cast<double>(u[i]) * v[i];
  return sum;
}

double Cosine(double dot, double norm_u, double norm_v) {
  if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
  return std::clamp(dot / (norm_u * norm_v), -1.0, 1.0);
}

template <typename T>
bool ParseNumber(std::string_view s, T* out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), *out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

// Ordering used for neighbor lists: higher similarity first, then word.
bool Better(double sim_a, const std::string& a, double sim_b,
            const std::string& b) {
  if (sim_a != sim_b) return sim_a > sim_b;
  return a < b;
}

}  // namespace

double CosineSimilarity(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine similarity of vectors with dims " +
                                std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
  }
  return Cosine(Dot(u, v), Norm(u), Norm(v));
}

EmbeddingStore EmbeddingStore::Load(std::istream& in,
                                    std::vector<std::string>* warnings) {
  EmbeddingStore store;
  std::string line;
  size_t line_no = 0;
  size_t declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto header = SplitWhitespace(line);
    if (header.empty()) continue;
    if (header.size() != 2 || !ParseNumber(header[0], &declared) ||
        !ParseNumber(header[1], &store.dim_) || store.dim_ <= 0) {
      throw CorpusError("expected vector header 'count dim'", line_no);
    }
    break;
  }
  if (line_no == 0 || store.dim_ == 0) {
    throw CorpusError("missing vector header", line_no);
  }
  const auto dim = static_cast<size_t>(store.dim_);
  size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != dim + 1) {
      throw CorpusError("expected " + std::to_string(dim) + " values, got " +
                            std::to_string(fields.size() - 1),
                        line_no);
    }
    std::vector<float> row(dim);
    for (size_t i = 0; i < dim; ++i) {
      // from_chars for float rejects a leading '+', which some writers emit.
      std::string_view s = fields[i + 1];
      if (!s.empty() && s[0] == '+') s.remove_prefix(1);
      if (!ParseNumber(s, &row[i]) || !std::isfinite(row[i])) {
        throw CorpusError("bad vector component '" + fields[i + 1] + "'",
                          line_no);
      }
    }
    ++rows;
    auto [it, inserted] = store.index_.emplace(fields[0], store.words_.size());
    if (inserted) {
      store.words_.push_back(fields[0]);
      store.matrix_.insert(store.matrix_.end(), row.begin(), row.end());
    } else {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate vector for '" + fields[0] +
                            "', keeping the last one");
      }
      std::copy(row.begin(), row.end(), store.matrix_.begin() + it->second * dim);
    }
  }
  if (rows != declared) {
    throw CorpusError("header declares " + std::to_string(declared) +
                          " vectors, found " + std::to_string(rows),
                      0);
  }
  store.norms_.resize(store.words_.size());
  for (size_t i = 0; i < store.words_.size(); ++i) {
    store.norms_[i] = Norm(store.Row(i));
  }
  return store;
}

EmbeddingStore EmbeddingStore::LoadFile(const std::string& path,
                                        std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vector file " + path);
  return Load(in, warnings);
}

std::span<const float> EmbeddingStore::Vector(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return {};
  return Row(it->second);
}

std::vector<Neighbor> EmbeddingStore::Nearest(const std::string& word,
                                              int k) const {
  auto it = index_.find(word);
  if (it == index_.end() || k <= 0) return {};
  const size_t query = it->second;
  const auto qvec = Row(query);
  const double qnorm = norms_[query];

  // Bounded selection keeping the k best seen so far; `heap.front()` is the
  // worst of them.
  struct Entry {
    double sim;
    size_t index;
  };
  auto worse_first = [this](const Entry& a, const Entry& b) {
    return Better(a.sim, words_[a.index], b.sim, words_[b.index]);
  };
  std::vector<Entry> heap;
  heap.reserve(static_cast<size_t>(k) + 1);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (i == query) continue;
    const double sim = Cosine(Dot(qvec, Row(i)), qnorm, norms_[i]);
    if (heap.size() < static_cast<size_t>(k)) {
      heap.push_back({sim, i});
      std::push_heap(heap.begin(), heap.end(), worse_first);
    } else if (Better(sim, words_[i], heap.front().sim,
                      words_[heap.front().index])) {
      std::pop_heap(heap.begin(), heap.end(), worse_first);
      heap.back() = {sim, i};
      std::push_heap(heap.begin(), heap.end(), worse_first);
    }
  }
  std::sort_heap(heap.begin(), heap.end(), worse_first);
  std::vector<Neighbor> out;
  out.reserve(heap.size());
  for (const auto& e : heap) {
    out.push_back({words_[e.index], e.sim, static_cast<int>(out.size())});
  }
  return out;
}

}  // namespace lexnorm
