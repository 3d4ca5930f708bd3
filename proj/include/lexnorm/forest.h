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


#ifndef LEXNORM_FOREST_H_
#define LEXNORM_FOREST_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexnorm/features.h"

namespace lexnorm {

class ForestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults follow the usual probability-forest settings. mtry == 0 means
// floor(sqrt(num_features)).
struct ForestConfig {
  int num_trees = 500;
  int mtry = 0;
  int min_node_size = 1;
  int max_depth = 0;  // 0: unlimited
  double sample_fraction = 1.0;
  bool replace = true;
  // Weight of the positive ("correct") class in split scores and leaves.
  double class_weight = 1.0;
  uint64_t seed = 42;
  int threads = 0;  // 0: all cores. Does not affect the model.

  int ResolvedMtry(int num_features) const;
  void Validate(int num_features) const;
};

// Row-major binary-labelled training data.
class Dataset {
 public:
  explicit Dataset(int num_features) : num_features_(num_features) {}

  void Add(std::span<const double> x, bool positive);
  void Add(const FeatureVector& x, bool positive) { Add(x.values, positive); }

  int num_features() const { return num_features_; }
  size_t size() const { return labels_.size(); }
  double At(size_t row, int feature) const {
    return values_[row * num_features_ + feature];
  }
  std::span<const double> Row(size_t row) const {
    return {values_.data() + row * num_features_,
            static_cast<size_t>(num_features_)};
  }
  bool Label(size_t row) const { return labels_[row] != 0; }
  size_t positives() const { return positives_; }

 private:
  int num_features_;
  std::vector<double> values_;
  std::vector<uint8_t> labels_;
  size_t positives_ = 0;
};

// Axis-aligned binary tree. Samples with x[feature] <= threshold go left.
// Leaves store the (weighted) fraction of positive training samples.
struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;

  bool IsLeaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  double Predict(std::span<const double> x) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  bool operator==(const DecisionTree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
};

// Random forest of probability trees; the prediction is the mean leaf value.
class ForestModel {
 public:
  ForestModel() = default;
  ForestModel(std::vector<DecisionTree> trees, int num_features,
              ForestConfig config = {},
              int layout_version = kFeatureLayoutVersion);

  // Grows config.num_trees trees on bootstrap samples using Gini splits over
  // mtry randomly drawn features. Identical data, config and seed give an
  // identical model regardless of thread count. Throws ForestError unless
  // both classes are present.
  static ForestModel Fit(const Dataset& data, const ForestConfig& config,
                         int layout_version = kFeatureLayoutVersion);

  // P(positive) in [0, 1]. Throws ForestError on a width mismatch.
  double PredictProba(std::span<const double> x) const;
  // Additionally rejects vectors built with a different feature layout.
  double PredictProba(const FeatureVector& x) const;

  void Write(std::ostream& out) const;
  static ForestModel Read(std::istream& in);

  const std::vector<DecisionTree>& trees() const { return trees_; }
  int num_features() const { return num_features_; }
  int layout_version() const { return layout_version_; }
  const ForestConfig& config() const { return config_; }

  bool operator==(const ForestModel& o) const {
    return trees_ == o.trees_ && num_features_ == o.num_features_ &&
           layout_version_ == o.layout_version_;
  }

 private:
  std::vector<DecisionTree> trees_;
  int num_features_ = 0;
  int layout_version_ = kFeatureLayoutVersion;
  ForestConfig config_;
};

// Per-tree seed derivation (splitmix64 over seed and tree index).
uint64_t TreeSeed(uint64_t seed, uint64_t tree_index);

}  // namespace lexnorm

#endif  // LEXNORM_FOREST_H_
