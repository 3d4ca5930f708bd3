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


#include "lexnorm/features.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

namespace lexnorm {
namespace {

using testing::Gen;

NGramModel TinyModel() {
  NGramModel m(1.0);
  m.AddSentence({"see", "you", "tomorrow"});
  m.AddSentence({"<USERNAME>", "you"});
  return m;
}

class ExtractTest : public ::testing::Test {
 protected:
  ExtractTest() : dict_({"you", "tomorrow", "see", "i", "do", "not", "know"}) {
    noisy_ = TinyModel();
    canonical_ = TinyModel();
    res_.noisy = &noisy_;
    res_.canonical = &canonical_;
    res_.dictionary = &dict_;
  }

  Dictionary dict_;
  NGramModel noisy_;
  NGramModel canonical_;
  FeatureResources res_;
};

TEST_F(ExtractTest, OriginalCandidate) {
  Candidate c;
  c.surface = "u";
  c.sources = ModuleSet::Only(Module::kOriginal);
  const auto f = FeatureExtractor(res_).Extract({"u", std::nullopt, std::nullopt}, c);
  EXPECT_EQ(f.layout_version, kFeatureLayoutVersion);
  EXPECT_EQ(f[kIsOriginal], 1.0);
  EXPECT_EQ(f[kCharOrderPreserved], 1.0);
  EXPECT_EQ(f[kOrigLength], f[kCandLength]);
  EXPECT_EQ(f[kEmbSimilarity], kNoEmbSimilarity);
  EXPECT_EQ(f[kInDictionary], 0.0);
}

TEST_F(ExtractTest, LookupOnlyCandidateUsesSentinels) {
  Candidate c;
  c.surface = "tomorrow";
  c.sources = ModuleSet::Only(Module::kLookup);
  c.lookup_count = 3;
  const auto f = FeatureExtractor(res_).Extract({"tmr", "see", std::nullopt}, c);
  EXPECT_EQ(f[kIsOriginal], 0.0);
  EXPECT_EQ(f[kEmbSimilarity], -2.0);
  EXPECT_EQ(f[kEmbRank], -1.0);
  EXPECT_EQ(f[kSpellRank], -1.0);
  EXPECT_EQ(f[kSpellDistance], -1.0);
  EXPECT_EQ(f[kLookupCount], 3.0);
  EXPECT_EQ(f[kCharOrderPreserved], 1.0);
  EXPECT_EQ(f[kInDictionary], 1.0);
  EXPECT_EQ(f[kOrigLength], 3.0);
  EXPECT_EQ(f[kCandLength], 8.0);
  EXPECT_EQ(f[kOrigContainsAlpha], 1.0);
}

TEST_F(ExtractTest, NGramSlotsUseRawContextAndBoundaries) {
  Candidate c;
  c.surface = "you";
  c.sources = ModuleSet::Only(Module::kSpell);
  c.spell_rank = 0;
  c.spell_distance = 1.5;
  // "@bob" is mapped to the username placeholder before the bigram query.
  const auto f = FeatureExtractor(res_).Extract({"u", "@bob", std::nullopt}, c);
  EXPECT_DOUBLE_EQ(f[kNoisyUnigram], noisy_.LogProbUnigram("you"));
  EXPECT_DOUBLE_EQ(f[kNoisyBigramPrev], noisy_.LogProbBigram("<USERNAME>", "you"));
  EXPECT_DOUBLE_EQ(f[kNoisyBigramNext], noisy_.LogProbBigram("you", kSentenceEnd));
  EXPECT_EQ(f[kSpellDistance], 1.5);
}

TEST_F(ExtractTest, MultiWordCandidate) {
  Candidate c;
  c.surface = "i do not know";
  c.sources = ModuleSet::Only(Module::kLookup);
  const auto f = FeatureExtractor(res_).Extract({"idk", std::nullopt, "you"}, c);
  const double mean = (canonical_.LogProbUnigram("i") + canonical_.LogProbUnigram("do") +
                       canonical_.LogProbUnigram("not") +
                       canonical_.LogProbUnigram("know")) / 4;
  EXPECT_DOUBLE_EQ(f[kCanonicalUnigram], mean);
  EXPECT_DOUBLE_EQ(f[kCanonicalBigramPrev],
                   canonical_.LogProbBigram(kSentenceStart, "i"));
  EXPECT_DOUBLE_EQ(f[kCanonicalBigramNext], canonical_.LogProbBigram("know", "you"));
  EXPECT_EQ(f[kInDictionary], 1.0);
}

TEST_F(ExtractTest, MaskZeroesGroup) {
  Candidate c;
  c.surface = "you";
  c.sources = ModuleSet::Only(Module::kSpell);
  c.spell_rank = 2;
  c.spell_distance = 3;
  FeatureMask mask;
  mask.Disable(FeatureGroup::kSpell);
  mask.Disable(FeatureGroup::kNGrams);
  const auto f = FeatureExtractor(res_, mask).Extract({"u", std::nullopt, std::nullopt}, c);
  EXPECT_EQ(f[kSpellRank], 0.0);
  EXPECT_EQ(f[kSpellDistance], 0.0);
  EXPECT_EQ(f[kNoisyUnigram], 0.0);
  EXPECT_EQ(f[kCanonicalBigramNext], 0.0);
  EXPECT_EQ(f[kInDictionary], 1.0);
  EXPECT_EQ(FeatureMask::Parse(mask.ToString()), mask);
}

TEST(FeatureGroupTest, GroupsCoverEverySlotOnce) {
  std::vector<int> seen(kNumFeatures, 0);
  for (int g = 0; g < kNumFeatureGroups; ++g) {
    const auto group = static_cast<FeatureGroup>(g);
    EXPECT_EQ(FeatureGroupFromName(FeatureGroupName(group)), group);
    for (int slot : FeatureGroupSlots(group)) ++seen[slot];
  }
  for (int slot = 0; slot < kNumFeatures; ++slot) EXPECT_EQ(seen[slot], 1) << slot;
  EXPECT_EQ(FeatureNames().size(), static_cast<size_t>(kNumFeatures));
}

TEST(CharOrderTest, Examples) {
  EXPECT_TRUE(CharOrderPreserved("tmr", "tomorrow"));
  EXPECT_FALSE(CharOrderPreserved("taxi", "tax"));
  EXPECT_TRUE(CharOrderPreserved("abc", "abc"));
  EXPECT_TRUE(CharOrderPreserved("no1", "no 1"));
}

TEST(CharOrderTest, MatchesSubsequenceOracle) {
  Gen gen(12);
  for (int i = 0; i < 3000; ++i) {
    const std::string a = gen.String("ab ", 0, 5);
    const std::string b = gen.String("ab ", 0, 8);
    // Subsequence test by deletion: a is a subsequence of b iff the edit
    // script needs no insertions or substitutions, i.e. LCS length == |a|.
    std::vector<std::vector<int>> lcs(a.size() + 1, std::vector<int>(b.size() + 1, 0));
    for (size_t x = 1; x <= a.size(); ++x) {
      for (size_t y = 1; y <= b.size(); ++y) {
        lcs[x][y] = a[x - 1] == b[y - 1] ? lcs[x - 1][y - 1] + 1
                                         : std::max(lcs[x - 1][y], lcs[x][y - 1]);
      }
    }
    EXPECT_EQ(CharOrderPreserved(a, b),
              lcs[a.size()][b.size()] == static_cast<int>(a.size()));
  }
}

TEST(ContainsAlphaTest, Examples) {
  EXPECT_TRUE(ContainsAlpha("2mr"));
  EXPECT_FALSE(ContainsAlpha("123"));
  EXPECT_FALSE(ContainsAlpha(":-)"));
  // The letter in this emoticon counts.
  EXPECT_TRUE(ContainsAlpha(":-D"));
  EXPECT_TRUE(ContainsAlpha("é"));
}

}  // namespace
}  // namespace lexnorm
