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


#ifndef LEXNORM_EMBEDDINGS_H_
#define LEXNORM_EMBEDDINGS_H_

#include <istream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lexnorm {

struct Neighbor {
  std::string word;
  double cosine_similarity = 0.0;
  int rank = 0;
};

// u.v / (|u||v|), 0 if either vector is all zeros. Throws
// std::invalid_argument on a dimension mismatch.
double CosineSimilarity(std::span<const float> u, std::span<const float> v);

// Pre-trained word vectors held in memory, queried by brute-force scan.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  // Text format: a `count dim` header, then `word v1 ... v_dim` per line.
  // A repeated word overwrites the earlier row and adds a warning.
  static EmbeddingStore Load(std::istream& in,
                             std::vector<std::string>* warnings = nullptr);
  static EmbeddingStore LoadFile(const std::string& path,
                                 std::vector<std::string>* warnings = nullptr);

  // The k most similar words to `word`, excluding `word` itself, ordered by
  // (similarity desc, word asc). Empty for out-of-vocabulary queries.
  std::vector<Neighbor> Nearest(const std::string& word, int k) const;

  bool Contains(const std::string& word) const { return index_.count(word) > 0; }
  std::span<const float> Vector(const std::string& word) const;

  int dim() const { return dim_; }
  size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  // Free-form description of how the vectors were trained.
  const std::string& meta() const { return meta_; }
  void set_meta(std::string meta) { meta_ = std::move(meta); }

 private:
  std::span<const float> Row(size_t i) const {
    return {matrix_.data() + i * dim_, static_cast<size_t>(dim_)};
  }

  int dim_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<float> matrix_;
  std::vector<double> norms_;
  std::string meta_;
};

}  // namespace lexnorm

#endif  // LEXNORM_EMBEDDINGS_H_
