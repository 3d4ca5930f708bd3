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


#ifndef LEXNORM_FEATURES_H_
#define LEXNORM_FEATURES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexnorm/corpus.h"
#include "lexnorm/generation.h"
#include "lexnorm/lexicon.h"
#include "lexnorm/ngram.h"

namespace lexnorm {

// Bumped whenever a slot is added, removed, reordered or redefined.
inline constexpr int kFeatureLayoutVersion = 1;
inline constexpr int kNumFeatures = 18;

enum FeatureSlot : int {
  kIsOriginal = 0,
  kEmbSimilarity,
  kEmbRank,
  kSpellRank,
  kSpellDistance,
  kLookupCount,
  kIsPrefix,
  kNoisyUnigram,
  kNoisyBigramPrev,
  kNoisyBigramNext,
  kCanonicalUnigram,
  kCanonicalBigramPrev,
  kCanonicalBigramNext,
  kInDictionary,
  kCharOrderPreserved,
  kOrigLength,
  kCandLength,
  kOrigContainsAlpha,
};

// Values written to module-specific slots when that module did not propose
// the candidate. They sit outside each slot's natural range.
inline constexpr double kNoEmbSimilarity = -2.0;
inline constexpr double kNoRank = -1.0;
inline constexpr double kNoSpellDistance = -1.0;

const std::array<const char*, kNumFeatures>& FeatureNames();

struct FeatureVector {
  int layout_version = kFeatureLayoutVersion;
  std::array<double, kNumFeatures> values{};

  double& operator[](int slot) { return values[slot]; }
  double operator[](int slot) const { return values[slot]; }
};

// Slots grouped the way ablation experiments switch them off.
enum class FeatureGroup {
  kOriginal,
  kEmbeddings,
  kSpell,
  kLookup,
  kPrefix,
  kNGrams,
  kDictionary,
  kCharOrder,
  kLength,
  kContainsAlpha,
};
inline constexpr int kNumFeatureGroups = 10;

const char* FeatureGroupName(FeatureGroup g);
FeatureGroup FeatureGroupFromName(const std::string& name);
std::vector<int> FeatureGroupSlots(FeatureGroup g);

// Slots forced to zero, for feature-group ablation.
class FeatureMask {
 public:
  void Disable(FeatureGroup g);
  bool Disabled(int slot) const { return disabled_[slot]; }
  bool GroupDisabled(FeatureGroup g) const;
  // Comma-separated disabled group names; empty when nothing is masked.
  std::string ToString() const;
  static FeatureMask Parse(const std::string& text);

  bool operator==(const FeatureMask&) const = default;

 private:
  std::array<bool, kNumFeatures> disabled_{};
};

// A raw token with its raw neighbors; absent neighbors are sentence edges.
struct TokenContext {
  std::string raw;
  std::optional<std::string> prev_raw;
  std::optional<std::string> next_raw;
};

// True iff every character of `orig` occurs, in order, in `cand`.
bool CharOrderPreserved(std::string_view orig, std::string_view cand);

bool ContainsAlpha(std::string_view token);

struct FeatureResources {
  const NGramModel* noisy = nullptr;
  const NGramModel* canonical = nullptr;
  const Dictionary* dictionary = nullptr;
  // Applied to every word before an n-gram query so lookups match the
  // preprocessed text the language models were built from.
  PreprocessRules lm_rules;
};

class FeatureExtractor {
 public:
  explicit FeatureExtractor(FeatureResources resources, FeatureMask mask = {})
      : resources_(std::move(resources)), mask_(mask) {}

  FeatureVector Extract(const TokenContext& ctx, const Candidate& cand) const;

  const FeatureMask& mask() const { return mask_; }

 private:
  void NGramSlots(const NGramModel& model, const std::vector<std::string>& words,
                  const std::string& prev, const std::string& next,
                  double* unigram, double* bigram_prev, double* bigram_next) const;

  FeatureResources resources_;
  FeatureMask mask_;
};

}  // namespace lexnorm

#endif  // LEXNORM_FEATURES_H_
