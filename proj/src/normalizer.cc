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


#include "lexnorm/normalizer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "lexnorm/parallel.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double WeightOriginal(double score, double weight) {
  if (std::isinf(weight)) return weight;
  return score * weight;
}

TokenContext ContextAt(const Utterance& utt, size_t i) {
  TokenContext ctx;
  ctx.raw = ToLower(utt.tokens[i].raw);
  if (i > 0) ctx.prev_raw = ToLower(utt.tokens[i - 1].raw);
  if (i + 1 < utt.tokens.size()) ctx.next_raw = ToLower(utt.tokens[i + 1].raw);
  return ctx;
}

// Candidate lists for every distinct lowercased token of `utts`, generated
// in parallel.
std::map<std::string, std::vector<Candidate>> GenerateForCorpus(
    const std::vector<const Utterance*>& utts, const GenerationConfig& config,
    const GenerationResources& resources, int threads) {
  std::map<std::string, std::vector<Candidate>> cache;
  for (const auto* utt : utts) {
    for (const auto& t : utt->tokens) cache.emplace(ToLower(t.raw), std::vector<Candidate>());
  }
  std::vector<std::pair<const std::string, std::vector<Candidate>>*> slots;
  slots.reserve(cache.size());
  for (auto& entry : cache) slots.push_back(&entry);
  ParallelFor(slots.size(), threads, [&](size_t i) {
    slots[i]->second = Generate(slots[i]->first, config, resources);
  });
  return cache;
}

FeatureResources MakeFeatureResources(const ModelBundle& bundle,
                                      const Resources& resources) {
  FeatureResources fr;
  fr.noisy = bundle.noisy ? bundle.noisy.get() : resources.noisy.get();
  fr.canonical =
      bundle.canonical ? bundle.canonical.get() : resources.canonical.get();
  fr.dictionary = resources.dictionary.get();
  fr.lm_rules = bundle.lm_rules;
  return fr;
}

}  // namespace

Resources Resources::Create(std::shared_ptr<const Dictionary> dictionary,
                            std::shared_ptr<const EmbeddingStore> embeddings,
                            std::shared_ptr<const NGramModel> noisy,
                            std::shared_ptr<const NGramModel> canonical) {
  Resources r;
  r.dictionary = std::move(dictionary);
  r.embeddings = std::move(embeddings);
  r.noisy = std::move(noisy);
  r.canonical = std::move(canonical);
  if (r.dictionary) {
    // The checker refers into the dictionary; the aliasing constructor ties
    // its lifetime to the dictionary's control block.
    auto holder = std::make_shared<std::pair<std::shared_ptr<const Dictionary>,
                                             SpellChecker>>(r.dictionary,
                                                            SpellChecker(*r.dictionary));
    r.spell = std::shared_ptr<const SpellChecker>(holder, &holder->second);
  }
  return r;
}

Resources Resources::Load(const std::string& dictionary_path,
                          const std::string& embeddings_path,
                          const std::string& noisy_lm_path,
                          const std::string& canonical_lm_path) {
  auto dict = std::make_shared<Dictionary>(Dictionary::LoadFile(dictionary_path));
  std::shared_ptr<EmbeddingStore> emb;
  if (!embeddings_path.empty()) {
    emb = std::make_shared<EmbeddingStore>(EmbeddingStore::LoadFile(embeddings_path));
  }
  auto noisy = std::make_shared<NGramModel>(NGramModel::ReadFile(noisy_lm_path));
  auto canonical =
      std::make_shared<NGramModel>(NGramModel::ReadFile(canonical_lm_path));
  Resources r = Create(dict, emb, noisy, canonical);
  r.dictionary_ref = ResourceRef::ForFile(dictionary_path);
  if (!embeddings_path.empty()) {
    r.embeddings_ref = ResourceRef::ForFile(embeddings_path);
  }
  return r;
}

Dataset BuildTrainingInstances(const std::vector<Utterance>& training,
                               const Resources& resources,
                               const TrainConfig& config, TrainStats* stats) {
  const auto start = Clock::now();
  for (const auto& utt : training) {
    if (!utt.HasGold()) {
      throw CorpusError("training utterance " + utt.id.value_or("") +
                            " has tokens without gold",
                        0);
    }
  }
  const auto vocab = TrainingVocabulary(training);

  // Each utterance is assigned a lookup table: the full one, or with
  // held-out construction the table built from the other half.
  std::vector<LookupTable> tables;
  std::vector<std::vector<const Utterance*>> parts;
  if (config.held_out_lookup && training.size() >= 2) {
    std::vector<Utterance> halves[2];
    parts.resize(2);
    for (size_t i = 0; i < training.size(); ++i) {
      halves[i % 2].push_back(training[i]);
      parts[i % 2].push_back(&training[i]);
    }
    tables.push_back(LookupTable::Build(halves[1]));
    tables.push_back(LookupTable::Build(halves[0]));
  } else {
    tables.push_back(LookupTable::Build(training));
    parts.emplace_back();
    for (const auto& utt : training) parts[0].push_back(&utt);
  }

  FeatureResources fr;
  fr.noisy = resources.noisy.get();
  fr.canonical = resources.canonical.get();
  fr.dictionary = resources.dictionary.get();
  fr.lm_rules = config.lm_rules;
  const FeatureExtractor extractor(fr, config.feature_mask);

  struct Instance {
    FeatureVector x;
    bool positive;
  };
  std::vector<std::vector<Instance>> per_utt(training.size());
  std::vector<size_t> reachable(training.size(), 0);

  for (size_t p = 0; p < parts.size(); ++p) {
    GenerationResources gr;
    gr.embeddings = resources.embeddings.get();
    gr.dictionary = resources.dictionary.get();
    gr.spell = resources.spell.get();
    gr.lookup = &tables[p];
    gr.training_vocab = &vocab;
    const auto cache =
        GenerateForCorpus(parts[p], config.generation, gr, config.threads);
    ParallelFor(parts[p].size(), config.threads, [&](size_t k) {
      const Utterance& utt = *parts[p][k];
      const size_t u = static_cast<size_t>(&utt - training.data());
      auto& out = per_utt[u];
      for (size_t i = 0; i < utt.tokens.size(); ++i) {
        const TokenContext ctx = ContextAt(utt, i);
        const std::string gold = CanonicalForm(*utt.tokens[i].gold);
        bool found = false;
        for (const auto& cand : cache.at(ctx.raw)) {
          const bool positive = CanonicalForm(cand.surface) == gold;
          found = found || positive;
          out.push_back({extractor.Extract(ctx, cand), positive});
        }
        if (found) ++reachable[u];
      }
    });
  }

  Dataset data(kNumFeatures);
  size_t tokens = 0;
  for (size_t u = 0; u < training.size(); ++u) {
    tokens += training[u].tokens.size();
    for (const auto& inst : per_utt[u]) data.Add(inst.x, inst.positive);
  }
  if (stats != nullptr) {
    stats->utterances = training.size();
    stats->tokens = tokens;
    stats->instances = data.size();
    stats->positives = data.positives();
    stats->reachable = 0;
    for (size_t r : reachable) stats->reachable += r;
    stats->generation_seconds = SecondsSince(start);
  }
  return data;
}

ModelBundle Train(const std::vector<Utterance>& training,
                  const Resources& resources, const TrainConfig& config) {
  if (training.empty()) throw CorpusError("training corpus is empty", 0);
  if (!resources.dictionary || !resources.noisy || !resources.canonical) {
    throw BundleError("training needs a dictionary and both n-gram models");
  }
  if (!(config.original_weight > 0.0)) {
    throw BundleError("original weight must be positive");
  }
  ModelBundle bundle;
  const Dataset data =
      BuildTrainingInstances(training, resources, config, &bundle.stats);
  const auto start = Clock::now();
  ForestConfig fc = config.forest;
  if (fc.threads == 0) fc.threads = config.threads;
  bundle.forest = ForestModel::Fit(data, fc, kFeatureLayoutVersion);
  bundle.stats.fit_seconds = SecondsSince(start);

  bundle.lookup = LookupTable::Build(training);
  const auto vocab = TrainingVocabulary(training);
  bundle.training_vocab.assign(vocab.begin(), vocab.end());
  std::sort(bundle.training_vocab.begin(), bundle.training_vocab.end());
  bundle.generation = config.generation;
  bundle.feature_mask = config.feature_mask;
  bundle.lm_rules = config.lm_rules;
  bundle.original_weight = config.original_weight;
  bundle.noisy = resources.noisy;
  bundle.canonical = resources.canonical;
  bundle.dictionary_ref = resources.dictionary_ref;
  bundle.embeddings_ref = resources.embeddings_ref;
  bundle.held_out_lookup = config.held_out_lookup;
  return bundle;
}

Normalizer::Normalizer(std::shared_ptr<const ModelBundle> bundle,
                       Resources resources)
    : bundle_(std::move(bundle)),
      resources_(std::move(resources)),
      training_vocab_(bundle_->training_vocab.begin(),
                      bundle_->training_vocab.end()),
      extractor_(MakeFeatureResources(*bundle_, resources_),
                 bundle_->feature_mask),
      original_weight_(bundle_->original_weight) {
  if (bundle_->forest.layout_version() != kFeatureLayoutVersion) {
    throw BundleError("model feature layout version " +
                      std::to_string(bundle_->forest.layout_version()) +
                      " does not match extractor version " +
                      std::to_string(kFeatureLayoutVersion));
  }
  if (!resources_.dictionary) throw BundleError("normalizer needs a dictionary");
  set_original_weight(original_weight_);
}

Normalizer Normalizer::Load(const std::string& bundle_dir) {
  auto bundle = std::make_shared<ModelBundle>(ModelBundle::Load(bundle_dir));
  if (!bundle->dictionary_ref) {
    throw BundleError("bundle does not reference a dictionary");
  }
  auto check = [](const ResourceRef& expected, const char* what) {
    const ResourceRef actual = ResourceRef::ForFile(expected.path);
    if (actual.bytes != expected.bytes || actual.fnv1a64 != expected.fnv1a64) {
      throw BundleError(std::string(what) + " " + expected.path +
                        " differs from the file the model was trained with");
    }
  };
  check(*bundle->dictionary_ref, "dictionary");
  auto dict = std::make_shared<Dictionary>(
      Dictionary::LoadFile(bundle->dictionary_ref->path));
  std::shared_ptr<EmbeddingStore> emb;
  if (bundle->embeddings_ref) {
    check(*bundle->embeddings_ref, "embeddings");
    emb = std::make_shared<EmbeddingStore>(
        EmbeddingStore::LoadFile(bundle->embeddings_ref->path));
  }
  Resources r = Resources::Create(dict, emb, bundle->noisy, bundle->canonical);
  r.dictionary_ref = bundle->dictionary_ref;
  r.embeddings_ref = bundle->embeddings_ref;
  return Normalizer(std::move(bundle), std::move(r));
}

void Normalizer::set_original_weight(double w) {
  if (!(w > 0.0)) throw BundleError("original weight must be positive");
  original_weight_ = w;
}

std::vector<Candidate> Normalizer::Candidates(const std::string& token) const {
  GenerationResources gr;
  gr.embeddings = resources_.embeddings.get();
  gr.dictionary = resources_.dictionary.get();
  gr.spell = resources_.spell.get();
  gr.lookup = &bundle_->lookup;
  gr.training_vocab = &training_vocab_;
  return Generate(token, bundle_->generation, gr);
}

RankedToken Normalizer::RankToken(const Utterance& utt, size_t index, int top_n,
                                  bool drop_original) const {
  const TokenContext ctx = ContextAt(utt, index);
  std::vector<Candidate> cands = Candidates(ctx.raw);
  if (drop_original && cands.size() > 1) {
    std::erase_if(cands, [](const Candidate& c) { return c.IsOriginal(); });
  }
  RankedToken out;
  out.raw = utt.tokens[index].raw;
  out.candidates.reserve(cands.size());
  for (const auto& c : cands) {
    double p = bundle_->forest.PredictProba(extractor_.Extract(ctx, c));
    if (c.IsOriginal()) p = WeightOriginal(p, original_weight_);
    out.candidates.push_back({c.surface, p, c.IsOriginal()});
  }
  SortRanked(&out.candidates);
  if (top_n > 0 && out.candidates.size() > static_cast<size_t>(top_n)) {
    out.candidates.resize(top_n);
  }
  out.chosen = out.candidates.front().surface;
  return out;
}

std::vector<RankedToken> Normalizer::Normalize(const Utterance& utt,
                                               int top_n) const {
  std::vector<RankedToken> out;
  out.reserve(utt.tokens.size());
  for (size_t i = 0; i < utt.tokens.size(); ++i) {
    out.push_back(RankToken(utt, i, top_n));
  }
  return out;
}

std::vector<RankedToken> Normalizer::NormalizeGoldEd(const Utterance& utt,
                                                     int top_n) const {
  std::vector<RankedToken> out;
  out.reserve(utt.tokens.size());
  for (size_t i = 0; i < utt.tokens.size(); ++i) {
    const auto& t = utt.tokens[i];
    const std::string raw = ToLower(t.raw);
    if (t.gold && CanonicalForm(*t.gold) != raw) {
      out.push_back(RankToken(utt, i, top_n, /*drop_original=*/true));
      continue;
    }
    RankedToken pass;
    pass.raw = t.raw;
    pass.candidates.push_back({raw, 1.0, true});
    pass.chosen = raw;
    pass.passthrough = true;
    out.push_back(std::move(pass));
  }
  return out;
}

std::vector<std::vector<RankedToken>> Normalizer::NormalizeAll(
    const std::vector<Utterance>& utts, int top_n, NormalizeMode mode,
    int threads) const {
  std::vector<std::vector<RankedToken>> out(utts.size());
  ParallelFor(utts.size(), threads, [&](size_t u) {
    out[u] = mode == NormalizeMode::kGoldErrorDetection
                 ? NormalizeGoldEd(utts[u], top_n)
                 : Normalize(utts[u], top_n);
  });
  return out;
}

void SortRanked(std::vector<ScoredCandidate>* candidates) {
  std::stable_sort(candidates->begin(), candidates->end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     if (a.score != b.score) return a.score > b.score;
                     if (a.is_original != b.is_original) return a.is_original;
                     return a.surface < b.surface;
                   });
}

std::vector<std::string> Flatten(const std::vector<RankedToken>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    for (auto& w : SplitWhitespace(t.chosen)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace lexnorm
