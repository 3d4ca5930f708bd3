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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lexnorm/corpus.h"
#include "test_util.h"

namespace lexnorm {
namespace {

using testing::Gen;

EmbeddingStore FromText(const std::string& text,
                        std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return EmbeddingStore::Load(in, warnings);
}

TEST(CosineTest, HandComputedValues) {
  const std::vector<float> x{1, 0}, y{0, 1}, d{1, 1};
  EXPECT_DOUBLE_EQ(CosineSimilarity(x, x), 1.0);
  EXPECT_DOUBLE_EQ(CosineSimilarity(x, y), 0.0);
  EXPECT_NEAR(CosineSimilarity(d, x), 0.70710678, 1e-6);
}

TEST(CosineTest, ZeroVectorAndMismatch) {
  const std::vector<float> zero{0, 0}, x{1, 0}, three{1, 0, 0};
  EXPECT_EQ(CosineSimilarity(zero, x), 0.0);
  EXPECT_THROW(CosineSimilarity(x, three), std::invalid_argument);
}

TEST(CosineTest, SymmetricScaleInvariantBounded) {
  Gen gen(8);
  for (int i = 0; i < 1000; ++i) {
    const int dim = gen.Int(1, 8);
    std::vector<float> u(dim), v(dim), su(dim);
    const float scale = static_cast<float>(0.01 + 100 * gen.Real());
    for (int k = 0; k < dim; ++k) {
      u[k] = static_cast<float>(gen.Real() * 2 - 1);
      v[k] = static_cast<float>(gen.Real() * 2 - 1);
      su[k] = u[k] * scale;
    }
    const double c = CosineSimilarity(u, v);
    EXPECT_EQ(c, CosineSimilarity(v, u));
    EXPECT_NEAR(c, CosineSimilarity(su, v), 1e-5);
    EXPECT_LE(std::abs(c), 1.0 + 1e-9);
  }
}

TEST(EmbeddingStoreTest, LoadsHeaderAndRows) {
  const auto store = FromText("2 3\na 1 0 0\nb 0 1 0.5\n");
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.dim(), 3);
  EXPECT_FLOAT_EQ(store.Vector("b")[2], 0.5f);
}

TEST(EmbeddingStoreTest, EmptyVocabularyIsValid) {
  const auto store = FromText("0 3\n");
  EXPECT_EQ(store.size(), 0u);
  EXPECT_TRUE(store.Nearest("a", 5).empty());
}

TEST(EmbeddingStoreTest, ShortRowReportsLine) {
  try {
    FromText("2 3\na 1 0 0\nb 0 1\n");
    FAIL() << "expected an error";
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EmbeddingStoreTest, RejectsNonFiniteAndCountMismatch) {
  EXPECT_THROW(FromText("1 2\na nan 1\n"), std::exception);
  EXPECT_THROW(FromText("3 2\na 0 1\n"), std::exception);
}

TEST(EmbeddingStoreTest, DuplicateLastWinsWithWarning) {
  std::vector<std::string> warnings;
  const auto store = FromText("2 2\na 1 0\na 0 1\n", &warnings);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_FLOAT_EQ(store.Vector("a")[1], 1.0f);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(NearestTest, HandExamples) {
  const auto store = FromText("3 2\na 1 0\nb 1 0\nc 0 1\n");
  EXPECT_TRUE(store.Nearest("zzz", 3).empty());
  const auto one = store.Nearest("a", 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].word, "b");
  EXPECT_DOUBLE_EQ(one[0].cosine_similarity, 1.0);
  EXPECT_EQ(one[0].rank, 0);
  const auto two = store.Nearest("a", 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1].word, "c");
  EXPECT_DOUBLE_EQ(two[1].cosine_similarity, 0.0);
}

// Compares against sorting every other word by (similarity desc, word asc).
TEST(NearestTest, MatchesFullSort) {
  Gen gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.Int(1, 60);
    const int dim = gen.Int(1, 4);
    std::string text = std::to_string(n) + " " + std::to_string(dim) + "\n";
    for (int i = 0; i < n; ++i) {
      text += "w" + std::to_string(i);
      // Coarse values create exact ties.
      for (int k = 0; k < dim; ++k) text += " " + std::to_string(gen.Int(-2, 2));
      text += "\n";
    }
    const auto store = FromText(text);
    const std::string query = "w" + std::to_string(gen.Int(0, n - 1));
    const int k = gen.Int(1, 70);
    std::vector<std::pair<double, std::string>> all;
    for (const auto& w : store.words()) {
      if (w == query) continue;
      all.push_back({-CosineSimilarity(store.Vector(query), store.Vector(w)), w});
    }
    std::sort(all.begin(), all.end());
    all.resize(std::min<size_t>(all.size(), k));
    const auto got = store.Nearest(query, k);
    ASSERT_EQ(got.size(), all.size());
    for (size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].word, all[i].second);
      EXPECT_EQ(got[i].rank, static_cast<int>(i));
    }
  }
}

}  // namespace
}  // namespace lexnorm
