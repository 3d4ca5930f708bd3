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


#include "lexnorm/forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lexnorm/parallel.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

constexpr std::string_view kMagic = "lexnorm-forest";
constexpr int kFormatVersion = 1;

uint64_t SplitMix64(uint64_t* state) {
  uint64_t z = (*state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform integer in [0, n) without modulo bias.
uint64_t UniformBelow(std::mt19937_64& rng, uint64_t n) {
  const uint64_t limit = -n % n;
  for (;;) {
    const uint64_t r = rng();
    if (r >= limit) return r % n;
  }
}

// Each feature's distinct training values, and every sample's index into
// them. Shared read-only by all trees.
struct BinnedData {
  std::vector<std::vector<double>> uniques;
  std::vector<std::vector<uint32_t>> bins;  // [feature][row]
};

BinnedData Bin(const Dataset& data) {
  const int p = data.num_features();
  BinnedData b;
  b.uniques.resize(p);
  b.bins.resize(p);
  for (int f = 0; f < p; ++f) {
    auto& u = b.uniques[f];
    u.reserve(data.size());
    for (size_t i = 0; i < data.size(); ++i) u.push_back(data.At(i, f));
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    auto& bins = b.bins[f];
    bins.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) {
      bins[i] = static_cast<uint32_t>(
          std::lower_bound(u.begin(), u.end(), data.At(i, f)) - u.begin());
    }
  }
  return b;
}

struct Split {
  int feature = -1;
  uint32_t bin = 0;  // samples with bin <= this go left
  double threshold = 0.0;
  double score = -1.0;
};

class TreeGrower {
 public:
  TreeGrower(const Dataset& data, const BinnedData& binned,
             const ForestConfig& config, uint64_t seed)
      : data_(data),
        binned_(binned),
        config_(config),
        mtry_(config.ResolvedMtry(data.num_features())),
        rng_(seed) {}

  DecisionTree Grow() {
    std::vector<size_t> sample = DrawSample();
    struct Pending {
      int node;
      size_t begin;
      size_t end;
      int depth;
    };
    std::vector<TreeNode> nodes(1);
    std::vector<Pending> stack = {{0, 0, sample.size(), 0}};
    while (!stack.empty()) {
      const Pending job = stack.back();
      stack.pop_back();
      const std::span<size_t> rows(sample.data() + job.begin,
                                   job.end - job.begin);
      double pos = 0.0;
      double neg = 0.0;
      for (size_t r : rows) (data_.Label(r) ? pos : neg) += 1.0;
      pos *= config_.class_weight;
      nodes[job.node].value = pos / (pos + neg);

      const bool pure = pos == 0.0 || neg == 0.0;
      const bool too_small =
          rows.size() <= static_cast<size_t>(config_.min_node_size);
      const bool too_deep = config_.max_depth > 0 && job.depth >= config_.max_depth;
      if (pure || too_small || too_deep) continue;

      const Split split = FindSplit(rows);
      if (split.feature < 0) continue;

      const auto& bins = binned_.bins[split.feature];
      const auto middle = std::stable_partition(
          rows.begin(), rows.end(),
          [&](size_t r) { return bins[r] <= split.bin; });
      const size_t mid = job.begin + (middle - rows.begin());

      const int left = static_cast<int>(nodes.size());
      nodes.emplace_back();
      nodes.emplace_back();
      TreeNode& node = nodes[job.node];
      node.feature = split.feature;
      node.threshold = split.threshold;
      node.left = left;
      node.right = left + 1;
      // Right pushed first so the left subtree is expanded first.
      stack.push_back({left + 1, mid, job.end, job.depth + 1});
      stack.push_back({left, job.begin, mid, job.depth + 1});
    }
    return DecisionTree(std::move(nodes));
  }

 private:
  std::vector<size_t> DrawSample() {
    const size_t n = data_.size();
    const size_t count = std::max<size_t>(
        1, static_cast<size_t>(std::llround(config_.sample_fraction * n)));
    std::vector<size_t> sample;
    if (config_.replace) {
      sample.resize(count);
      for (auto& s : sample) s = UniformBelow(rng_, n);
    } else {
      sample.resize(n);
      std::iota(sample.begin(), sample.end(), size_t{0});
      for (size_t i = 0; i < std::min(count, n); ++i) {
        std::swap(sample[i], sample[i + UniformBelow(rng_, n - i)]);
      }
      sample.resize(std::min(count, n));
    }
    return sample;
  }

  std::vector<int> DrawFeatures() {
    const int p = data_.num_features();
    std::vector<int> features(p);
    std::iota(features.begin(), features.end(), 0);
    for (int i = 0; i < mtry_; ++i) {
      std::swap(features[i], features[i + UniformBelow(rng_, p - i)]);
    }
    features.resize(mtry_);
    std::sort(features.begin(), features.end());
    return features;
  }

  // Best Gini split over the drawn features. Ties keep the lowest feature,
  // then the lowest threshold.
  Split FindSplit(std::span<const size_t> rows) {
    Split best;
    for (int f : DrawFeatures()) {
      const auto& bins = binned_.bins[f];
      const size_t num_bins = binned_.uniques[f].size();
      // Per-bin positive and negative counts, in ascending bin order.
      bin_ids_.clear();
      if (rows.size() * 8 < num_bins) {
        for (size_t r : rows) bin_ids_.push_back(bins[r]);
        std::sort(bin_ids_.begin(), bin_ids_.end());
        bin_ids_.erase(std::unique(bin_ids_.begin(), bin_ids_.end()),
                       bin_ids_.end());
        if (bin_ids_.size() < 2) continue;
        pos_.assign(bin_ids_.size(), 0.0);
        neg_.assign(bin_ids_.size(), 0.0);
        for (size_t r : rows) {
          const size_t k =
              std::lower_bound(bin_ids_.begin(), bin_ids_.end(), bins[r]) -
              bin_ids_.begin();
          (data_.Label(r) ? pos_ : neg_)[k] += 1.0;
        }
      } else {
        dense_pos_.assign(num_bins, 0.0);
        dense_neg_.assign(num_bins, 0.0);
        for (size_t r : rows) (data_.Label(r) ? dense_pos_ : dense_neg_)[bins[r]] += 1.0;
        pos_.clear();
        neg_.clear();
        for (uint32_t b = 0; b < num_bins; ++b) {
          if (dense_pos_[b] + dense_neg_[b] == 0.0) continue;
          bin_ids_.push_back(b);
          pos_.push_back(dense_pos_[b]);
          neg_.push_back(dense_neg_[b]);
        }
        if (bin_ids_.size() < 2) continue;
      }
      const double w = config_.class_weight;
      double total_pos = 0.0;
      double total_neg = 0.0;
      for (size_t k = 0; k < pos_.size(); ++k) {
        total_pos += pos_[k];
        total_neg += neg_[k];
      }
      double left_pos = 0.0;
      double left_neg = 0.0;
      for (size_t k = 0; k + 1 < bin_ids_.size(); ++k) {
        left_pos += pos_[k];
        left_neg += neg_[k];
        const double lp = w * left_pos;
        const double rp = w * (total_pos - left_pos);
        const double rn = total_neg - left_neg;
        const double score = (lp * lp + left_neg * left_neg) / (lp + left_neg) +
                             (rp * rp + rn * rn) / (rp + rn);
        if (score > best.score) {
          best.score = score;
          best.feature = f;
          best.bin = bin_ids_[k];
          const double lo = binned_.uniques[f][bin_ids_[k]];
          const double hi = binned_.uniques[f][bin_ids_[k + 1]];
          double mid = lo + (hi - lo) / 2.0;
          if (!(mid >= lo && mid < hi)) mid = lo;
          best.threshold = mid;
        }
      }
    }
    return best;
  }

  const Dataset& data_;
  const BinnedData& binned_;
  const ForestConfig& config_;
  const int mtry_;
  std::mt19937_64 rng_;
  std::vector<uint32_t> bin_ids_;
  std::vector<double> pos_, neg_, dense_pos_, dense_neg_;
};

void WriteConfig(std::ostream& out, const ForestConfig& c) {
  out << "num_trees " << c.num_trees << '\n'
      << "mtry " << c.mtry << '\n'
      << "min_node_size " << c.min_node_size << '\n'
      << "max_depth " << c.max_depth << '\n'
      << "sample_fraction " << FormatDouble(c.sample_fraction) << '\n'
      << "replace " << (c.replace ? 1 : 0) << '\n'
      << "class_weight " << FormatDouble(c.class_weight) << '\n'
      << "seed " << c.seed << '\n';
}

}  // namespace

uint64_t TreeSeed(uint64_t seed, uint64_t tree_index) {
  uint64_t state = seed ^ (tree_index * 0xd1b54a32d192ed03ULL);
  SplitMix64(&state);
  return SplitMix64(&state);
}

int ForestConfig::ResolvedMtry(int num_features) const {
  if (mtry > 0) return mtry;
  return std::max(1, static_cast<int>(std::floor(std::sqrt(num_features))));
}

void ForestConfig::Validate(int num_features) const {
  if (num_trees < 1) throw ForestError("num_trees must be at least 1");
  const int m = ResolvedMtry(num_features);
  if (m < 1 || m > num_features) {
    throw ForestError("mtry must lie in [1, " + std::to_string(num_features) +
                      "]");
  }
  if (min_node_size < 1) throw ForestError("min_node_size must be at least 1");
  if (max_depth < 0) throw ForestError("max_depth must be non-negative");
  if (!(sample_fraction > 0.0) || (!replace && sample_fraction > 1.0)) {
    throw ForestError("invalid sample_fraction");
  }
  if (!(class_weight > 0.0) || !std::isfinite(class_weight)) {
    throw ForestError("class_weight must be positive");
  }
}

void Dataset::Add(std::span<const double> x, bool positive) {
  if (x.size() != static_cast<size_t>(num_features_)) {
    throw ForestError("instance has " + std::to_string(x.size()) +
                      " features, expected " + std::to_string(num_features_));
  }
  values_.insert(values_.end(), x.begin(), x.end());
  labels_.push_back(positive ? 1 : 0);
  if (positive) ++positives_;
}

double DecisionTree::Predict(std::span<const double> x) const {
  int i = 0;
  while (!nodes_[i].IsLeaf()) {
    const auto& n = nodes_[i];
    i = x[n.feature] <= n.threshold ? n.left : n.right;
  }
  return nodes_[i].value;
}

ForestModel::ForestModel(std::vector<DecisionTree> trees, int num_features,
                         ForestConfig config, int layout_version)
    : trees_(std::move(trees)),
      num_features_(num_features),
      layout_version_(layout_version),
      config_(config) {
  for (const auto& t : trees_) {
    if (t.nodes().empty()) throw ForestError("empty tree");
    for (const auto& n : t.nodes()) {
      const int size = static_cast<int>(t.nodes().size());
      if (n.IsLeaf()) {
        if (!(n.value >= 0.0 && n.value <= 1.0)) {
          throw ForestError("leaf value outside [0, 1]");
        }
      } else if (n.feature >= num_features || n.left <= 0 || n.left >= size ||
                 n.right <= 0 || n.right >= size) {
        throw ForestError("tree references an invalid feature or node");
      }
    }
  }
}

ForestModel ForestModel::Fit(const Dataset& data, const ForestConfig& config,
                             int layout_version) {
  config.Validate(data.num_features());
  if (data.positives() == 0 || data.positives() == data.size()) {
    throw ForestError(
        "training data holds a single class; at least one correct and one "
        "incorrect instance are required");
  }
  const BinnedData binned = Bin(data);
  std::vector<DecisionTree> trees(config.num_trees);
  ParallelFor(trees.size(), config.threads, [&](size_t t) {
    TreeGrower grower(data, binned, config, TreeSeed(config.seed, t));
    trees[t] = grower.Grow();
  });
  return ForestModel(std::move(trees), data.num_features(), config,
                     layout_version);
}

double ForestModel::PredictProba(std::span<const double> x) const {
  if (x.size() != static_cast<size_t>(num_features_)) {
    throw ForestError("expected " + std::to_string(num_features_) +
                      " features, got " + std::to_string(x.size()));
  }
  if (trees_.empty()) throw ForestError("empty forest");
  double sum = 0.0;
  for (const auto& t : trees_) sum += t.Predict(x);
  return sum / static_cast<double>(trees_.size());
}

double ForestModel::PredictProba(const FeatureVector& x) const {
  if (x.layout_version != layout_version_) {
    throw ForestError("feature layout version " +
                      std::to_string(x.layout_version) +
                      " does not match model version " +
                      std::to_string(layout_version_));
  }
  return PredictProba(x.values);
}

void ForestModel::Write(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << '\n'
      << "layout_version " << layout_version_ << '\n'
      << "num_features " << num_features_ << '\n';
  WriteConfig(out, config_);
  out << "trees " << trees_.size() << '\n';
  for (const auto& t : trees_) {
    out << "tree " << t.nodes().size() << '\n';
    for (const auto& n : t.nodes()) {
      out << n.feature << ' ' << FormatDouble(n.threshold) << ' ' << n.left
          << ' ' << n.right << ' ' << FormatDouble(n.value) << '\n';
    }
  }
}

ForestModel ForestModel::Read(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  auto next_fields = [&]() {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ForestError("truncated forest at line " + std::to_string(line_no));
    }
    return SplitWhitespace(line);
  };
  auto value = [&](const char* name) {
    auto f = next_fields();
    if (f.size() != 2 || f[0] != name) {
      throw ForestError("line " + std::to_string(line_no) + ": expected '" +
                        name + "'");
    }
    return f[1];
  };
  try {
    if (ParseInt(value(kMagic.data())) != kFormatVersion) {
      throw ForestError("unsupported forest format version");
    }
    const int layout = static_cast<int>(ParseInt(value("layout_version")));
    const int num_features = static_cast<int>(ParseInt(value("num_features")));
    ForestConfig c;
    c.num_trees = static_cast<int>(ParseInt(value("num_trees")));
    c.mtry = static_cast<int>(ParseInt(value("mtry")));
    c.min_node_size = static_cast<int>(ParseInt(value("min_node_size")));
    c.max_depth = static_cast<int>(ParseInt(value("max_depth")));
    c.sample_fraction = ParseDouble(value("sample_fraction"));
    c.replace = ParseInt(value("replace")) != 0;
    c.class_weight = ParseDouble(value("class_weight"));
    c.seed = static_cast<uint64_t>(std::stoull(value("seed")));
    const auto num_trees = ParseInt(value("trees"));
    std::vector<DecisionTree> trees;
    trees.reserve(num_trees);
    for (int64_t t = 0; t < num_trees; ++t) {
      const auto num_nodes = ParseInt(value("tree"));
      std::vector<TreeNode> nodes(num_nodes);
      for (auto& n : nodes) {
        const auto f = next_fields();
        if (f.size() != 5) {
          throw ForestError("line " + std::to_string(line_no) +
                            ": malformed tree node");
        }
        n.feature = static_cast<int>(ParseInt(f[0]));
        n.threshold = ParseDouble(f[1]);
        n.left = static_cast<int>(ParseInt(f[2]));
        n.right = static_cast<int>(ParseInt(f[3]));
        n.value = ParseDouble(f[4]);
      }
      trees.emplace_back(std::move(nodes));
    }
    return ForestModel(std::move(trees), num_features, c, layout);
  } catch (const std::invalid_argument& e) {
    throw ForestError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ForestError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace lexnorm
