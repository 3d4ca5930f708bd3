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


#ifndef LEXNORM_GENERATION_H_
#define LEXNORM_GENERATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lexnorm/embeddings.h"
#include "lexnorm/lexicon.h"
#include "lexnorm/spellcheck.h"

namespace lexnorm {

// Candidate generation modules. Each targets a different kind of anomaly.
enum class Module : uint8_t {
  kOriginal = 0,
  kEmbeddings,
  kSpell,
  kLookup,
  kPrefix,
  kSplit,
};
inline constexpr int kNumModules = 6;

const char* ModuleName(Module m);
Module ModuleFromName(const std::string& name);

class ModuleSet {
 public:
  constexpr ModuleSet() = default;
  static constexpr ModuleSet All() { return ModuleSet((1u << kNumModules) - 1); }
  static constexpr ModuleSet Only(Module m) { return ModuleSet().With(m); }

  constexpr bool Has(Module m) const { return bits_ & Bit(m); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr ModuleSet With(Module m) const { return ModuleSet(bits_ | Bit(m)); }
  constexpr ModuleSet Without(Module m) const {
    return ModuleSet(bits_ & ~Bit(m));
  }
  constexpr ModuleSet Union(ModuleSet o) const { return ModuleSet(bits_ | o.bits_); }

  // Comma-separated module names in declaration order, e.g. "original,spell".
  std::string ToString() const;
  static ModuleSet Parse(const std::string& text);

  constexpr bool operator==(const ModuleSet&) const = default;

 private:
  constexpr explicit ModuleSet(unsigned bits) : bits_(bits) {}
  static constexpr unsigned Bit(Module m) { return 1u << static_cast<int>(m); }

  unsigned bits_ = 0;
};

enum class CandidateFilter { kNone, kTrain, kTrainDict };

const char* FilterName(CandidateFilter f);
CandidateFilter FilterFromName(const std::string& name);

// A proposed replacement for one token together with what each module that
// proposed it reported.
struct Candidate {
  std::string surface;  // may hold single spaces (one-to-many replacement)
  ModuleSet sources;
  std::optional<double> emb_similarity;
  std::optional<int> emb_rank;
  std::optional<int> spell_rank;
  std::optional<double> spell_distance;
  int64_t lookup_count = 0;

  bool IsOriginal() const { return sources.Has(Module::kOriginal); }
};

struct GenerationConfig {
  ModuleSet modules = ModuleSet::All();
  int emb_k = 40;
  int prefix_min_len = 3;
  int split_min_len = 4;
  SpellMode spell_mode = SpellMode::Normal();
  SpellWeights spell_weights;
  CandidateFilter filter = CandidateFilter::kNone;
};

// Borrowed, immutable resources. Modules whose resource is null are skipped.
struct GenerationResources {
  const EmbeddingStore* embeddings = nullptr;
  const Dictionary* dictionary = nullptr;
  const SpellChecker* spell = nullptr;
  const LookupTable* lookup = nullptr;
  const std::unordered_set<std::string>* training_vocab = nullptr;
};

// Dictionary words that strictly extend `token`.
std::vector<std::string> GenPrefix(const std::string& token,
                                   const Dictionary& dict);

// "left right" for every split point where both halves are dictionary words.
std::vector<std::string> GenSplit(const std::string& token,
                                  const Dictionary& dict);

// Keeps candidates whose every word is in the training vocabulary (kTrain),
// or in the training vocabulary or dictionary (kTrainDict). The original
// token always survives.
std::vector<Candidate> ApplyFilter(std::vector<Candidate> candidates,
                                   CandidateFilter filter,
                                   const std::unordered_set<std::string>* training_vocab,
                                   const Dictionary* dict);

// Runs every enabled module on a lowercased token. The result is
// deduplicated by surface, holds the original token first and the rest in
// lexicographic order.
std::vector<Candidate> Generate(const std::string& token,
                                const GenerationConfig& config,
                                const GenerationResources& resources);

}  // namespace lexnorm

#endif  // LEXNORM_GENERATION_H_
