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


#include "lexnorm/spellcheck.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.h"
#include "test_util.h"

namespace lexnorm {
namespace {

using testing::Gen;
using testing::OracleKey;
using testing::OracleSuggest;

std::vector<std::string> Words(const std::vector<Suggestion>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(x.word);
  return out;
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(EditDistance("bein", "being"), 1);
  EXPECT_EQ(EditDistance("x", "x"), 0);
  EXPECT_EQ(EditDistance("2mr", "tomorrow"), 6);
  EXPECT_EQ(EditDistance("", "abc"), 3);
}

TEST(EditDistanceTest, CountsCodePoints) {
  EXPECT_EQ(EditDistance("café", "cafe"), 1);
}

TEST(EditDistanceTest, BoundedAgreesBelowBound) {
  Gen gen(2);
  for (int i = 0; i < 2000; ++i) {
    const std::string a = gen.String("abc", 0, 9);
    const std::string b = gen.String("abc", 0, 9);
    const int bound = gen.Int(0, 5);
    const int full = EditDistance(a, b);
    const std::u32string ua(a.begin(), a.end()), ub(b.begin(), b.end());
    EXPECT_EQ(BoundedEditDistance(ua, ub, bound), std::min(full, bound + 1));
  }
}

TEST(PhoneticKeyTest, Examples) {
  EXPECT_EQ(PhoneticKey("robert"), "r163");
  EXPECT_EQ(PhoneticKey("rupert"), "r163");
  EXPECT_EQ(PhoneticKey(""), "");
  EXPECT_EQ(PhoneticKey("kat"), "k3");
  EXPECT_EQ(PhoneticKey("cat"), "c3");
}

TEST(PhoneticKeyTest, MatchesTwoPassOracle) {
  Gen gen(4);
  for (int i = 0; i < 3000; ++i) {
    const std::string w = gen.String("abcdeghklmnrstuwyBX2'", 0, 10);
    EXPECT_EQ(PhoneticKey(w), OracleKey(w)) << w;
  }
}

TEST(SuggestTest, ThreeWordDictionary) {
  const Dictionary dict({"be", "by", "at"});
  const SpellChecker checker(dict);
  const auto words = Words(checker.Suggest("b", SpellMode::Normal()));
  ASSERT_EQ(words.size(), 3u);
  EXPECT_EQ(words[2], "at");
}

TEST(SuggestTest, DictionaryWordRanksFirst) {
  const Dictionary dict({"being", "bein", "begin", "bring"});
  const SpellChecker checker(dict);
  const auto s = checker.Suggest("being", SpellMode::Normal());
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s[0].word, "being");
  EXPECT_EQ(s[0].distance, 0.0);
  EXPECT_EQ(s[0].rank, 0);
}

TEST(SuggestTest, EmptyWordGivesNothing) {
  const Dictionary dict({"a"});
  EXPECT_TRUE(SpellChecker(dict).Suggest("", SpellMode::BadSpellers()).empty());
}

TEST(SuggestTest, ModeNamesRoundTrip) {
  for (auto name : {SpellModeName::kNormal, SpellModeName::kBadSpellers}) {
    EXPECT_EQ(SpellModeFromString(SpellModeToString(name)), name);
  }
  EXPECT_THROW(SpellModeFromString("fast"), std::invalid_argument);
}

TEST(SuggestTest, MatchesBruteForceAndNestsAcrossModes) {
  Gen gen(17);
  const std::string alphabet = "abdeiklmnorstu";
  for (int trial = 0; trial < 20; ++trial) {
    std::set<std::string> unique;
    const int size = gen.Int(1, 300);
    while (static_cast<int>(unique.size()) < size) {
      unique.insert(gen.String(alphabet, 1, 8));
    }
    const std::vector<std::string> words(unique.begin(), unique.end());
    const Dictionary dict(words);
    const SpellChecker checker(dict);
    for (int q = 0; q < 10; ++q) {
      const std::string query = gen.String(alphabet + "2", 1, 8);
      const auto normal = Words(checker.Suggest(query, SpellMode::Normal()));
      const auto bad = Words(checker.Suggest(query, SpellMode::BadSpellers()));
      EXPECT_EQ(normal, OracleSuggest(words, query, SpellMode::Normal())) << query;
      EXPECT_EQ(bad, OracleSuggest(words, query, SpellMode::BadSpellers())) << query;
      const std::set<std::string> bad_set(bad.begin(), bad.end());
      for (const auto& w : normal) EXPECT_TRUE(bad_set.count(w)) << w;
    }
  }
}

TEST(SuggestTest, RanksAreIndicesAndDistancesNondecreasing) {
  const Dictionary dict({"thanks", "thank", "tanks", "than", "that", "this"});
  const auto s = SpellChecker(dict).Suggest("thx", SpellMode::BadSpellers());
  for (size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].rank, static_cast<int>(i));
    EXPECT_TRUE(dict.Contains(s[i].word));
    if (i > 0) EXPECT_LE(s[i - 1].distance, s[i].distance);
  }
}

TEST(SuggestTest, WeightsChangeCombinedDistance) {
  const Dictionary dict({"robert", "rupert"});
  const SpellChecker checker(dict);
  SpellWeights w;
  w.char_weight = 2.0;
  w.phonetic_weight = 0.0;
  const auto s = checker.Suggest("rubert", SpellMode::Normal(), w);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& x : s) EXPECT_EQ(x.distance, 2.0 * x.char_edit);
}

}  // namespace
}  // namespace lexnorm
