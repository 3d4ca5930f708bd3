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


#include "lexnorm/experiments.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lexnorm/parallel.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kOutcomeNote =
    "a token normalized to the wrong word counts as one false positive and "
    "one false negative";

struct TrainedRun {
  Metrics metrics;
  double gold_ed_accuracy = 0.0;
  double train_seconds = 0.0;
  double words_per_second = 0.0;
};

TrainedRun TrainAndScore(const std::vector<Utterance>& train,
                         const std::vector<Utterance>& dev,
                         const Resources& resources, const TrainConfig& config,
                         bool with_gold_ed) {
  TrainedRun run;
  const auto t0 = Clock::now();
  auto bundle = std::make_shared<ModelBundle>(Train(train, resources, config));
  run.train_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const Normalizer normalizer(bundle, resources);
  const auto t1 = Clock::now();
  const auto out = normalizer.NormalizeAll(dev, 1, NormalizeMode::kAuto, config.threads);
  const double secs = std::chrono::duration<double>(Clock::now() - t1).count();
  size_t words = 0;
  for (const auto& u : dev) words += u.tokens.size();
  run.words_per_second = secs > 0.0 ? static_cast<double>(words) / secs : 0.0;
  run.metrics = Evaluate(dev, out);
  if (with_gold_ed) {
    run.gold_ed_accuracy = AccuracyGoldEd(
        dev, normalizer.NormalizeAll(dev, 1, NormalizeMode::kGoldErrorDetection,
                                     config.threads));
  }
  return run;
}

std::string FormatFixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string FormatMinSec(double seconds) {
  const long total = static_cast<long>(seconds + 0.5);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%ld:%02ld", total / 60, total % 60);
  return buf;
}

Report AblateFeatures(const ExperimentSetup& s) {
  Report r;
  r.title = "feature group ablation (dev)";
  r.notes.push_back(kOutcomeNote);
  r.columns = {"disabled", "recall", "precision", "f1", "gold_ed_accuracy"};
  auto add = [&](const std::string& name, const TrainConfig& config) {
    const TrainedRun run = TrainAndScore(s.train, s.dev, s.resources, config, true);
    r.rows.push_back({name, FormatPercent(run.metrics.recall),
                      FormatPercent(run.metrics.precision),
                      FormatPercent(run.metrics.f1),
                      FormatPercent(run.gold_ed_accuracy)});
  };
  add("none", s.base);
  for (int g = 0; g < kNumFeatureGroups; ++g) {
    const auto group = static_cast<FeatureGroup>(g);
    TrainConfig config = s.base;
    config.feature_mask.Disable(group);
    add(FeatureGroupName(group), config);
  }
  return r;
}

Report AblateGenerators(const ExperimentSetup& s) {
  Report r;
  r.title = "generation module isolation and ablation (dev)";
  r.notes.push_back("upperbound = gold among candidates, over tokens needing normalization");
  r.columns = {"setting", "module", "upperbound", "avg_candidates"};
  auto add = [&](const std::string& setting, const std::string& module,
                 ModuleSet modules) {
    GenerationConfig config = s.base.generation;
    config.modules = modules;
    const GenerationStats g =
        MeasureGeneration(s.dev, s.train, s.resources, config, s.base.threads);
    r.rows.push_back({setting, module, FormatPercent(g.upperbound_anomalies),
                      FormatFixed(g.avg_candidates, 2)});
  };
  const ModuleSet all = s.base.generation.modules;
  add("all", "-", all);
  for (int m = 1; m < kNumModules; ++m) {
    const auto module = static_cast<Module>(m);
    add("isolation", ModuleName(module),
        ModuleSet::Only(Module::kOriginal).With(module));
  }
  for (int m = 1; m < kNumModules; ++m) {
    const auto module = static_cast<Module>(m);
    add("ablation", ModuleName(module), all.Without(module));
  }
  return r;
}

Report LearningCurve(const ExperimentSetup& s) {
  Report r;
  r.title = "learning curve (dev)";
  r.notes.push_back(kOutcomeNote);
  r.notes.push_back("subsample seed " + std::to_string(s.subsample_seed));
  r.columns = {"train_utterances", "recall", "precision", "f1"};
  std::vector<size_t> sizes;
  for (size_t size : s.learning_sizes) {
    const size_t clamped = std::min(size, s.train.size());
    if (clamped > 0 && std::find(sizes.begin(), sizes.end(), clamped) == sizes.end()) {
      sizes.push_back(clamped);
    }
  }
  std::sort(sizes.begin(), sizes.end());
  for (size_t size : sizes) {
    const auto train = Subsample(s.train, size, s.subsample_seed);
    const TrainedRun run = TrainAndScore(train, s.dev, s.resources, s.base, false);
    r.rows.push_back({std::to_string(size), FormatPercent(run.metrics.recall),
                      FormatPercent(run.metrics.precision),
                      FormatPercent(run.metrics.f1)});
  }
  return r;
}

Report ModeFilterGrid(const ExperimentSetup& s) {
  Report r;
  r.title = "spell mode x candidate filter (dev)";
  r.notes.push_back(kOutcomeNote);
  r.notes.push_back("upperbound = gold among candidates, over all tokens");
  r.columns = {"spell_mode", "filter", "train_time", "words_per_sec", "f1",
               "upperbound", "avg_candidates"};
  const SpellMode modes[] = {SpellMode::Normal(), SpellMode::BadSpellers()};
  const CandidateFilter filters[] = {CandidateFilter::kNone,
                                     CandidateFilter::kTrainDict,
                                     CandidateFilter::kTrain};
  for (const auto& mode : modes) {
    for (auto filter : filters) {
      TrainConfig config = s.base;
      config.generation.spell_mode = mode;
      config.generation.filter = filter;
      const TrainedRun run = TrainAndScore(s.train, s.dev, s.resources, config, false);
      const GenerationStats g = MeasureGeneration(s.dev, s.train, s.resources,
                                                  config.generation, config.threads);
      r.rows.push_back({SpellModeToString(mode.name), FilterName(filter),
                        FormatMinSec(run.train_seconds),
                        FormatFixed(run.words_per_second, 0),
                        FormatPercent(run.metrics.f1),
                        FormatPercent(g.upperbound_all),
                        FormatFixed(g.avg_candidates, 2)});
    }
  }
  return r;
}

}  // namespace

GenerationStats MeasureGeneration(const std::vector<Utterance>& gold,
                                  const std::vector<Utterance>& train,
                                  const Resources& resources,
                                  const GenerationConfig& config, int threads) {
  const LookupTable lookup = LookupTable::Build(train);
  const auto vocab = TrainingVocabulary(train);
  GenerationResources gr;
  gr.embeddings = resources.embeddings.get();
  gr.dictionary = resources.dictionary.get();
  gr.spell = resources.spell.get();
  gr.lookup = &lookup;
  gr.training_vocab = &vocab;

  struct Tally {
    int64_t tokens = 0, anomalies = 0, found = 0, found_anomalies = 0,
            candidates = 0;
  };
  std::vector<Tally> per_utt(gold.size());
  ParallelFor(gold.size(), threads, [&](size_t u) {
    Tally& t = per_utt[u];
    for (const auto& tok : gold[u].tokens) {
      if (!tok.gold) throw std::invalid_argument("gold corpus has tokens without gold");
      const auto cands = Generate(ToLower(tok.raw), config, gr);
      const std::string g = CanonicalForm(*tok.gold);
      const bool hit = std::any_of(cands.begin(), cands.end(), [&](const Candidate& c) {
        return CanonicalForm(c.surface) == g;
      });
      const bool anomaly = NeedsNormalization(tok);
      ++t.tokens;
      t.candidates += static_cast<int64_t>(cands.size());
      if (hit) ++t.found;
      if (anomaly) {
        ++t.anomalies;
        if (hit) ++t.found_anomalies;
      }
    }
  });
  Tally sum;
  for (const auto& t : per_utt) {
    sum.tokens += t.tokens;
    sum.anomalies += t.anomalies;
    sum.found += t.found;
    sum.found_anomalies += t.found_anomalies;
    sum.candidates += t.candidates;
  }
  GenerationStats stats;
  stats.tokens = sum.tokens;
  stats.anomalies = sum.anomalies;
  if (sum.tokens > 0) {
    stats.upperbound_all = static_cast<double>(sum.found) / sum.tokens;
    stats.avg_candidates = static_cast<double>(sum.candidates) / sum.tokens;
  }
  if (sum.anomalies > 0) {
    stats.upperbound_anomalies =
        static_cast<double>(sum.found_anomalies) / sum.anomalies;
  }
  return stats;
}

std::vector<Utterance> Subsample(const std::vector<Utterance>& utts,
                                 size_t size, uint64_t seed) {
  std::vector<size_t> order(utts.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  // Fisher-Yates with an explicit draw so the order does not depend on the
  // standard library's shuffle implementation.
  for (size_t i = order.size(); i > 1; --i) {
    const uint64_t bound = i;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(order[i - 1], order[draw % bound]);
  }
  order.resize(std::min(size, order.size()));
  std::vector<Utterance> out;
  out.reserve(order.size());
  for (size_t i : order) out.push_back(utts[i]);
  return out;
}

const std::vector<std::string>& ExperimentNames() {
  static const std::vector<std::string> names = {
      "ablate_features", "ablate_generators", "learning_curve", "mode_filter_grid"};
  return names;
}

Report RunGrid(const std::string& experiment, const ExperimentSetup& setup) {
  if (experiment == "ablate_features") return AblateFeatures(setup);
  if (experiment == "ablate_generators") return AblateGenerators(setup);
  if (experiment == "learning_curve") return LearningCurve(setup);
  if (experiment == "mode_filter_grid") return ModeFilterGrid(setup);
  throw std::invalid_argument("unknown experiment '" + experiment + "'");
}

}  // namespace lexnorm
