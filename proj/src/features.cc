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

#include <stdexcept>

#include "lexnorm/text.h"

namespace lexnorm {
namespace {

constexpr std::array<const char*, kNumFeatures> kFeatureNames = {
    "is_original",         "emb_similarity",        "emb_rank",
    "spell_rank",          "spell_distance",        "lookup_count",
    "is_prefix",           "noisy_unigram",         "noisy_bigram_prev",
    "noisy_bigram_next",   "canonical_unigram",     "canonical_bigram_prev",
    "canonical_bigram_next", "in_dictionary",       "char_order_preserved",
    "orig_length",         "cand_length",           "orig_contains_alpha",
};

constexpr const char* kGroupNames[kNumFeatureGroups] = {
    "original", "embeddings", "spell",      "lookup", "prefix",
    "ngrams",   "dictionary", "char_order", "length", "contains_alpha",
};

}  // namespace

const std::array<const char*, kNumFeatures>& FeatureNames() {
  return kFeatureNames;
}

const char* FeatureGroupName(FeatureGroup g) {
  return kGroupNames[static_cast<int>(g)];
}

FeatureGroup FeatureGroupFromName(const std::string& name) {
  for (int i = 0; i < kNumFeatureGroups; ++i) {
    if (name == kGroupNames[i]) return static_cast<FeatureGroup>(i);
  }
  throw std::invalid_argument("unknown feature group '" + name + "'");
}

std::vector<int> FeatureGroupSlots(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::kOriginal:
      return {kIsOriginal};
    case FeatureGroup::kEmbeddings:
      return {kEmbSimilarity, kEmbRank};
    case FeatureGroup::kSpell:
      return {kSpellRank, kSpellDistance};
    case FeatureGroup::kLookup:
      return {kLookupCount};
    case FeatureGroup::kPrefix:
      return {kIsPrefix};
    case FeatureGroup::kNGrams:
      return {kNoisyUnigram,     kNoisyBigramPrev,     kNoisyBigramNext,
              kCanonicalUnigram, kCanonicalBigramPrev, kCanonicalBigramNext};
    case FeatureGroup::kDictionary:
      return {kInDictionary};
    case FeatureGroup::kCharOrder:
      return {kCharOrderPreserved};
    case FeatureGroup::kLength:
      return {kOrigLength, kCandLength};
    case FeatureGroup::kContainsAlpha:
      return {kOrigContainsAlpha};
  }
  return {};
}

void FeatureMask::Disable(FeatureGroup g) {
  for (int slot : FeatureGroupSlots(g)) disabled_[slot] = true;
}

bool FeatureMask::GroupDisabled(FeatureGroup g) const {
  for (int slot : FeatureGroupSlots(g)) {
    if (!disabled_[slot]) return false;
  }
  return true;
}

std::string FeatureMask::ToString() const {
  std::string out;
  for (int i = 0; i < kNumFeatureGroups; ++i) {
    if (!GroupDisabled(static_cast<FeatureGroup>(i))) continue;
    if (!out.empty()) out.push_back(',');
    out += kGroupNames[i];
  }
  return out;
}

FeatureMask FeatureMask::Parse(const std::string& text) {
  FeatureMask mask;
  for (auto name : SplitOn(text, ',')) {
    const std::string trimmed = NormalizeSpaces(name);
    if (!trimmed.empty()) mask.Disable(FeatureGroupFromName(trimmed));
  }
  return mask;
}

bool CharOrderPreserved(std::string_view orig, std::string_view cand) {
  const std::u32string o = DecodeUtf8(orig);
  const std::u32string c = DecodeUtf8(cand);
  size_t i = 0;
  for (size_t j = 0; j < c.size() && i < o.size(); ++j) {
    if (c[j] == o[i]) ++i;
  }
  return i == o.size();
}

bool ContainsAlpha(std::string_view token) {
  for (char32_t c : DecodeUtf8(token)) {
    if (IsAlpha(c)) return true;
  }
  return false;
}

void FeatureExtractor::NGramSlots(const NGramModel& model,
                                  const std::vector<std::string>& words,
                                  const std::string& prev,
                                  const std::string& next, double* unigram,
                                  double* bigram_prev,
                                  double* bigram_next) const {
  double sum = 0.0;
  for (const auto& w : words) sum += model.LogProbUnigram(w);
  *unigram = words.empty() ? 0.0 : sum / static_cast<double>(words.size());
  *bigram_prev = model.LogProbBigram(prev, words.front());
  *bigram_next = model.LogProbBigram(words.back(), next);
}

FeatureVector FeatureExtractor::Extract(const TokenContext& ctx,
                                        const Candidate& cand) const {
  FeatureVector f;
  f[kIsOriginal] = cand.IsOriginal() ? 1.0 : 0.0;
  f[kEmbSimilarity] = cand.emb_similarity.value_or(kNoEmbSimilarity);
  f[kEmbRank] = cand.emb_rank ? static_cast<double>(*cand.emb_rank) : kNoRank;
  f[kSpellRank] = cand.spell_rank ? static_cast<double>(*cand.spell_rank) : kNoRank;
  f[kSpellDistance] = cand.spell_distance.value_or(kNoSpellDistance);
  f[kLookupCount] = static_cast<double>(cand.lookup_count);
  f[kIsPrefix] = cand.sources.Has(Module::kPrefix) ? 1.0 : 0.0;

  std::vector<std::string> words = SplitWhitespace(cand.surface);
  if (words.empty()) words.push_back(cand.surface);
  bool in_dict = resources_.dictionary != nullptr;
  for (const auto& w : words) {
    if (in_dict && !resources_.dictionary->Contains(w)) in_dict = false;
  }
  for (auto& w : words) w = PreprocessToken(w, resources_.lm_rules);
  const std::string prev = ctx.prev_raw
                               ? PreprocessToken(*ctx.prev_raw, resources_.lm_rules)
                               : std::string(kSentenceStart);
  const std::string next = ctx.next_raw
                               ? PreprocessToken(*ctx.next_raw, resources_.lm_rules)
                               : std::string(kSentenceEnd);
  if (resources_.noisy != nullptr) {
    NGramSlots(*resources_.noisy, words, prev, next, &f[kNoisyUnigram],
               &f[kNoisyBigramPrev], &f[kNoisyBigramNext]);
  }
  if (resources_.canonical != nullptr) {
    NGramSlots(*resources_.canonical, words, prev, next, &f[kCanonicalUnigram],
               &f[kCanonicalBigramPrev], &f[kCanonicalBigramNext]);
  }

  f[kInDictionary] = in_dict ? 1.0 : 0.0;
  f[kCharOrderPreserved] = CharOrderPreserved(ctx.raw, cand.surface) ? 1.0 : 0.0;
  f[kOrigLength] = static_cast<double>(CodepointLength(ctx.raw));
  f[kCandLength] = static_cast<double>(CodepointLength(cand.surface));
  f[kOrigContainsAlpha] = ContainsAlpha(ctx.raw) ? 1.0 : 0.0;

  for (int slot = 0; slot < kNumFeatures; ++slot) {
    if (mask_.Disabled(slot)) f[slot] = 0.0;
  }
  return f;
}

}  // namespace lexnorm
