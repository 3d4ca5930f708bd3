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


#ifndef LEXNORM_EXPERIMENTS_H_
#define LEXNORM_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "lexnorm/eval.h"
#include "lexnorm/normalizer.h"

namespace lexnorm {

struct ExperimentSetup {
  std::vector<Utterance> train;
  std::vector<Utterance> dev;
  Resources resources;
  TrainConfig base;
  // Training sizes for the learning curve; sizes above the available data
  // are clamped and duplicates dropped.
  std::vector<size_t> learning_sizes = {500, 1000, 2000};
  uint64_t subsample_seed = 1;
};

// Candidate-list statistics over a gold corpus, without ranking.
struct GenerationStats {
  double upperbound_all = 0.0;        // gold among candidates, all tokens
  double upperbound_anomalies = 0.0;  // same, tokens needing normalization
  double avg_candidates = 0.0;
  int64_t tokens = 0;
  int64_t anomalies = 0;
};

GenerationStats MeasureGeneration(const std::vector<Utterance>& gold,
                                  const std::vector<Utterance>& train,
                                  const Resources& resources,
                                  const GenerationConfig& config, int threads);

// Nested random subsamples: the first `size` utterances of one seeded
// shuffle.
std::vector<Utterance> Subsample(const std::vector<Utterance>& utts,
                                 size_t size, uint64_t seed);

// Experiment names: ablate_features, ablate_generators, learning_curve,
// mode_filter_grid. Throws std::invalid_argument for anything else.
Report RunGrid(const std::string& experiment, const ExperimentSetup& setup);

const std::vector<std::string>& ExperimentNames();

}  // namespace lexnorm

#endif  // LEXNORM_EXPERIMENTS_H_
