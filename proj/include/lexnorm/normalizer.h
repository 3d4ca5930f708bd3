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


#ifndef LEXNORM_NORMALIZER_H_
#define LEXNORM_NORMALIZER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "lexnorm/corpus.h"
#include "lexnorm/embeddings.h"
#include "lexnorm/features.h"
#include "lexnorm/forest.h"
#include "lexnorm/generation.h"
#include "lexnorm/lexicon.h"
#include "lexnorm/ngram.h"
#include "lexnorm/spellcheck.h"

namespace lexnorm {

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Identifies an external resource file a bundle was trained against.
struct ResourceRef {
  std::string path;
  uint64_t bytes = 0;
  uint64_t fnv1a64 = 0;

  static ResourceRef ForFile(const std::string& path);
  bool operator==(const ResourceRef&) const = default;
};

// Read-only models shared by training and normalization.
struct Resources {
  std::shared_ptr<const Dictionary> dictionary;
  std::shared_ptr<const EmbeddingStore> embeddings;  // optional
  std::shared_ptr<const SpellChecker> spell;         // built over `dictionary`
  std::shared_ptr<const NGramModel> noisy;
  std::shared_ptr<const NGramModel> canonical;
  std::optional<ResourceRef> dictionary_ref;
  std::optional<ResourceRef> embeddings_ref;

  static Resources Create(std::shared_ptr<const Dictionary> dictionary,
                          std::shared_ptr<const EmbeddingStore> embeddings,
                          std::shared_ptr<const NGramModel> noisy,
                          std::shared_ptr<const NGramModel> canonical);
  // Loads from files. `embeddings_path` may be empty.
  static Resources Load(const std::string& dictionary_path,
                        const std::string& embeddings_path,
                        const std::string& noisy_lm_path,
                        const std::string& canonical_lm_path);
};

struct TrainConfig {
  GenerationConfig generation;
  ForestConfig forest;
  FeatureMask feature_mask;
  PreprocessRules lm_rules;
  double original_weight = 1.0;
  // Builds features for each half of the training data with a lookup table
  // from the other half.
  bool held_out_lookup = false;
  int threads = 0;
};

struct TrainStats {
  size_t utterances = 0;
  size_t tokens = 0;
  size_t instances = 0;
  size_t positives = 0;
  // Tokens whose gold form was among the generated candidates.
  size_t reachable = 0;
  double generation_seconds = 0.0;
  double fit_seconds = 0.0;
};

// Everything needed at inference time besides the dictionary and the
// embeddings, which are referenced by path.
struct ModelBundle {
  static constexpr int kFormatVersion = 1;

  ForestModel forest;
  LookupTable lookup;
  std::vector<std::string> training_vocab;  // sorted
  GenerationConfig generation;
  FeatureMask feature_mask;
  PreprocessRules lm_rules;
  double original_weight = 1.0;
  std::shared_ptr<const NGramModel> noisy;
  std::shared_ptr<const NGramModel> canonical;
  std::optional<ResourceRef> dictionary_ref;
  std::optional<ResourceRef> embeddings_ref;
  TrainStats stats;
  bool held_out_lookup = false;

  // Writes manifest.json plus one file per model into `dir`.
  void Save(const std::string& dir) const;
  static ModelBundle Load(const std::string& dir);
};

struct ScoredCandidate {
  std::string surface;
  double score = 0.0;
  bool is_original = false;
};

struct RankedToken {
  std::string raw;
  std::vector<ScoredCandidate> candidates;  // best first
  std::string chosen;
  // True for tokens that were not ranked (gold error detection mode).
  bool passthrough = false;
};

enum class NormalizeMode { kAuto, kGoldErrorDetection };

// Builds labelled (features, correct?) instances for every candidate of
// every training token. Instances are appended in corpus order.
Dataset BuildTrainingInstances(const std::vector<Utterance>& training,
                               const Resources& resources,
                               const TrainConfig& config,
                               TrainStats* stats = nullptr);

ModelBundle Train(const std::vector<Utterance>& training,
                  const Resources& resources, const TrainConfig& config);

class Normalizer {
 public:
  Normalizer(std::shared_ptr<const ModelBundle> bundle, Resources resources);

  // Loads a bundle and the resources it references, verifying fingerprints.
  static Normalizer Load(const std::string& bundle_dir);

  // Generation + ranking for one token in context. top_n <= 0 keeps all.
  RankedToken RankToken(const Utterance& utt, size_t index, int top_n,
                        bool drop_original = false) const;

  std::vector<RankedToken> Normalize(const Utterance& utt, int top_n) const;

  // Ranks only tokens whose gold differs from the raw form, with the
  // original token removed from their candidate lists; all other tokens
  // pass through.
  std::vector<RankedToken> NormalizeGoldEd(const Utterance& utt, int top_n) const;

  std::vector<std::vector<RankedToken>> NormalizeAll(
      const std::vector<Utterance>& utts, int top_n, NormalizeMode mode,
      int threads) const;

  std::vector<Candidate> Candidates(const std::string& token) const;

  double original_weight() const { return original_weight_; }
  void set_original_weight(double w);

  const ModelBundle& bundle() const { return *bundle_; }
  const Resources& resources() const { return resources_; }

 private:
  std::shared_ptr<const ModelBundle> bundle_;
  Resources resources_;
  std::unordered_set<std::string> training_vocab_;
  FeatureExtractor extractor_;
  double original_weight_;
};

// Ordering for ranked lists: score desc, original first, surface asc.
void SortRanked(std::vector<ScoredCandidate>* candidates);

// Words of the top candidates joined into one flat token sequence.
std::vector<std::string> Flatten(const std::vector<RankedToken>& tokens);

}  // namespace lexnorm

#endif  // LEXNORM_NORMALIZER_H_
