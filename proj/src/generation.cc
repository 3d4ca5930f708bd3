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


#include "lexnorm/generation.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lexnorm/text.h"

namespace lexnorm {
namespace {

constexpr const char* kModuleNames[kNumModules] = {
    "original", "embeddings", "spell", "lookup", "prefix", "split"};

}  // namespace

const char* ModuleName(Module m) { return kModuleNames[static_cast<int>(m)]; }

Module ModuleFromName(const std::string& name) {
  for (int i = 0; i < kNumModules; ++i) {
    if (name == kModuleNames[i]) return static_cast<Module>(i);
  }
  throw std::invalid_argument("unknown generation module '" + name + "'");
}

std::string ModuleSet::ToString() const {
  std::string out;
  for (int i = 0; i < kNumModules; ++i) {
    if (!Has(static_cast<Module>(i))) continue;
    if (!out.empty()) out.push_back(',');
    out += kModuleNames[i];
  }
  return out;
}

ModuleSet ModuleSet::Parse(const std::string& text) {
  if (text == "all") return All();
  ModuleSet set;
  for (auto name : SplitOn(text, ',')) {
    const std::string trimmed = NormalizeSpaces(name);
    if (trimmed.empty()) continue;
    set = set.With(ModuleFromName(trimmed));
  }
  return set;
}

const char* FilterName(CandidateFilter f) {
  switch (f) {
    case CandidateFilter::kNone:
      return "none";
    case CandidateFilter::kTrain:
      return "train";
    case CandidateFilter::kTrainDict:
      return "train+dict";
  }
  return "none";
}

CandidateFilter FilterFromName(const std::string& name) {
  if (name == "none" || name == "-") return CandidateFilter::kNone;
  if (name == "train") return CandidateFilter::kTrain;
  if (name == "train+dict") return CandidateFilter::kTrainDict;
  throw std::invalid_argument("unknown candidate filter '" + name + "'");
}

std::vector<std::string> GenPrefix(const std::string& token,
                                   const Dictionary& dict) {
  std::vector<std::string> out;
  const auto& words = dict.sorted_words();
  for (auto it = std::upper_bound(words.begin(), words.end(), token);
       it != words.end() && it->starts_with(token); ++it) {
    out.push_back(*it);
  }
  return out;
}

std::vector<std::string> GenSplit(const std::string& token,
                                  const Dictionary& dict) {
  std::vector<std::string> out;
  const auto offsets = CodepointOffsets(token);
  // offsets holds every code point start plus the end; interior entries are
  // the split points.
  for (size_t i = 1; i + 1 < offsets.size(); ++i) {
    const std::string_view view(token);
    const auto left = view.substr(0, offsets[i]);
    const auto right = view.substr(offsets[i]);
    if (dict.Contains(left) && dict.Contains(right)) {
      std::string joined(left);
      joined.push_back(' ');
      joined.append(right);
      out.push_back(std::move(joined));
    }
  }
  return out;
}

std::vector<Candidate> ApplyFilter(
    std::vector<Candidate> candidates, CandidateFilter filter,
    const std::unordered_set<std::string>* training_vocab,
    const Dictionary* dict) {
  if (filter == CandidateFilter::kNone) return candidates;
  if (training_vocab == nullptr) {
    throw std::invalid_argument("candidate filter needs a training vocabulary");
  }
  const bool use_dict = filter == CandidateFilter::kTrainDict && dict != nullptr;
  auto known = [&](const std::string& word) {
    return training_vocab->count(word) > 0 || (use_dict && dict->Contains(word));
  };
  std::erase_if(candidates, [&](const Candidate& c) {
    if (c.IsOriginal()) return false;
    for (const auto& word : SplitWhitespace(c.surface)) {
      if (!known(word)) return true;
    }
    return false;
  });
  return candidates;
}

std::vector<Candidate> Generate(const std::string& token,
                                const GenerationConfig& config,
                                const GenerationResources& resources) {
  std::map<std::string, Candidate> merged;
  auto slot = [&merged](const std::string& surface, Module source) -> Candidate& {
    auto& c = merged[surface];
    c.surface = surface;
    c.sources = c.sources.With(source);
    return c;
  };

  slot(token, Module::kOriginal);
  const auto& modules = config.modules;
  const size_t length = CodepointLength(token);

  if (modules.Has(Module::kEmbeddings) && resources.embeddings != nullptr) {
    for (const auto& n : resources.embeddings->Nearest(token, config.emb_k)) {
      auto& c = slot(n.word, Module::kEmbeddings);
      c.emb_similarity = n.cosine_similarity;
      c.emb_rank = n.rank;
    }
  }
  if (modules.Has(Module::kSpell) && resources.spell != nullptr) {
    for (const auto& s : resources.spell->Suggest(token, config.spell_mode,
                                                   config.spell_weights)) {
      auto& c = slot(s.word, Module::kSpell);
      c.spell_rank = s.rank;
      c.spell_distance = s.distance;
    }
  }
  if (modules.Has(Module::kLookup) && resources.lookup != nullptr) {
    for (const auto& rc : resources.lookup->Candidates(token)) {
      slot(rc.replacement, Module::kLookup);
    }
  }
  if (resources.dictionary != nullptr) {
    if (modules.Has(Module::kPrefix) &&
        length >= static_cast<size_t>(config.prefix_min_len)) {
      for (const auto& w : GenPrefix(token, *resources.dictionary)) {
        slot(w, Module::kPrefix);
      }
    }
    if (modules.Has(Module::kSplit) &&
        length >= static_cast<size_t>(config.split_min_len)) {
      for (const auto& w : GenSplit(token, *resources.dictionary)) {
        slot(w, Module::kSplit);
      }
    }
  }

  std::vector<Candidate> out;
  out.reserve(merged.size());
  out.push_back(std::move(merged[token]));
  for (auto& [surface, c] : merged) {
    if (surface != token) out.push_back(std::move(c));
  }
  if (modules.Has(Module::kLookup) && resources.lookup != nullptr) {
    for (auto& c : out) c.lookup_count = resources.lookup->Count(token, c.surface);
  }
  return ApplyFilter(std::move(out), config.filter, resources.training_vocab,
                     resources.dictionary);
}

}  // namespace lexnorm
