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


// Model bundle layout:
//
//   manifest.json     format version, feature layout, config echo, resource
//                     references and training statistics
//   forest.txt        ForestModel::Write
//   lookup.tsv        LookupTable::Write
//   train_vocab.txt   one word per line
//   noisy.lm          NGramModel::Write
//   canonical.lm      NGramModel::Write

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexnorm/normalizer.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kManifest = "manifest.json";
constexpr const char* kForestFile = "forest.txt";
constexpr const char* kLookupFile = "lookup.tsv";
constexpr const char* kVocabFile = "train_vocab.txt";
constexpr const char* kNoisyFile = "noisy.lm";
constexpr const char* kCanonicalFile = "canonical.lm";

std::string Hex64(uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

json RefToJson(const std::optional<ResourceRef>& ref) {
  if (!ref) return nullptr;
  return {{"path", ref->path},
          {"bytes", ref->bytes},
          {"fnv1a64", Hex64(ref->fnv1a64)}};
}

std::optional<ResourceRef> RefFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  ResourceRef ref;
  ref.path = j.at("path").get<std::string>();
  ref.bytes = j.at("bytes").get<uint64_t>();
  ref.fnv1a64 = std::stoull(j.at("fnv1a64").get<std::string>(), nullptr, 16);
  return ref;
}

json GenerationToJson(const GenerationConfig& g) {
  return {{"modules", g.modules.ToString()},
          {"emb_k", g.emb_k},
          {"prefix_min_len", g.prefix_min_len},
          {"split_min_len", g.split_min_len},
          {"spell_mode", SpellModeToString(g.spell_mode.name)},
          {"max_char_edit", g.spell_mode.max_char_edit},
          {"max_phonetic_edit", g.spell_mode.max_phonetic_edit},
          {"spell_char_weight", g.spell_weights.char_weight},
          {"spell_phonetic_weight", g.spell_weights.phonetic_weight},
          {"filter", FilterName(g.filter)}};
}

GenerationConfig GenerationFromJson(const json& j) {
  GenerationConfig g;
  g.modules = ModuleSet::Parse(j.at("modules").get<std::string>());
  g.emb_k = j.at("emb_k").get<int>();
  g.prefix_min_len = j.at("prefix_min_len").get<int>();
  g.split_min_len = j.at("split_min_len").get<int>();
  g.spell_mode.name = SpellModeFromString(j.at("spell_mode").get<std::string>());
  g.spell_mode.max_char_edit = j.at("max_char_edit").get<int>();
  g.spell_mode.max_phonetic_edit = j.at("max_phonetic_edit").get<int>();
  g.spell_weights.char_weight = j.at("spell_char_weight").get<double>();
  g.spell_weights.phonetic_weight = j.at("spell_phonetic_weight").get<double>();
  g.filter = FilterFromName(j.at("filter").get<std::string>());
  return g;
}

json ForestToJson(const ForestConfig& c) {
  return {{"num_trees", c.num_trees},
          {"mtry", c.mtry},
          {"min_node_size", c.min_node_size},
          {"max_depth", c.max_depth},
          {"sample_fraction", c.sample_fraction},
          {"replace", c.replace},
          {"class_weight", c.class_weight},
          {"seed", c.seed}};
}

json StatsToJson(const TrainStats& s) {
  return {{"utterances", s.utterances},       {"tokens", s.tokens},
          {"instances", s.instances},         {"positives", s.positives},
          {"reachable", s.reachable},
          {"generation_seconds", s.generation_seconds},
          {"fit_seconds", s.fit_seconds}};
}

TrainStats StatsFromJson(const json& j) {
  TrainStats s;
  s.utterances = j.at("utterances").get<size_t>();
  s.tokens = j.at("tokens").get<size_t>();
  s.instances = j.at("instances").get<size_t>();
  s.positives = j.at("positives").get<size_t>();
  s.reachable = j.at("reachable").get<size_t>();
  s.generation_seconds = j.at("generation_seconds").get<double>();
  s.fit_seconds = j.at("fit_seconds").get<double>();
  return s;
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw BundleError("cannot write " + path.string());
  return out;
}

std::ifstream OpenIn(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw BundleError("cannot read " + path.string());
  return in;
}

}  // namespace

ResourceRef ResourceRef::ForFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BundleError("cannot read resource " + path);
  ResourceRef ref;
  ref.path = fs::absolute(path).lexically_normal().string();
  uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const auto n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
    ref.bytes += static_cast<uint64_t>(n);
  }
  ref.fnv1a64 = hash;
  return ref;
}

void ModelBundle::Save(const std::string& dir) const {
  if (!noisy || !canonical) throw BundleError("bundle lacks n-gram models");
  const fs::path root(dir);
  fs::create_directories(root);

  json names = json::array();
  for (const char* n : FeatureNames()) names.push_back(n);
  json manifest = {
      {"format", "lexnorm-bundle"},
      {"format_version", kFormatVersion},
      {"feature_layout", {{"version", forest.layout_version()}, {"names", names}}},
      {"feature_mask", feature_mask.ToString()},
      {"generation", GenerationToJson(generation)},
      {"forest", ForestToJson(forest.config())},
      {"original_weight", FormatDouble(original_weight)},
      {"lm_preprocess",
       {{"username_placeholder", lm_rules.username_placeholder},
        {"url_placeholder", lm_rules.url_placeholder},
        {"lowercase", lm_rules.lowercase}}},
      {"resources",
       {{"dictionary", RefToJson(dictionary_ref)},
        {"embeddings", RefToJson(embeddings_ref)}}},
      {"held_out_lookup", held_out_lookup},
      {"training", StatsToJson(stats)},
      {"files",
       {{"forest", kForestFile},
        {"lookup", kLookupFile},
        {"training_vocab", kVocabFile},
        {"noisy_lm", kNoisyFile},
        {"canonical_lm", kCanonicalFile}}},
  };
  {
    auto out = OpenOut(root / kManifest);
    out << manifest.dump(2) << '\n';
  }
  {
    auto out = OpenOut(root / kForestFile);
    forest.Write(out);
  }
  {
    auto out = OpenOut(root / kLookupFile);
    lookup.Write(out);
  }
  {
    auto out = OpenOut(root / kVocabFile);
    for (const auto& w : training_vocab) out << w << '\n';
  }
  noisy->WriteFile((root / kNoisyFile).string());
  canonical->WriteFile((root / kCanonicalFile).string());
}

ModelBundle ModelBundle::Load(const std::string& dir) {
  const fs::path root(dir);
  json manifest;
  try {
    auto in = OpenIn(root / kManifest);
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw BundleError("malformed manifest in " + dir + ": " + e.what());
  }
  ModelBundle b;
  try {
    if (manifest.at("format").get<std::string>() != "lexnorm-bundle" ||
        manifest.at("format_version").get<int>() != kFormatVersion) {
      throw BundleError("unsupported bundle format in " + dir);
    }
    const int layout = manifest.at("feature_layout").at("version").get<int>();
    if (layout != kFeatureLayoutVersion) {
      throw BundleError("bundle uses feature layout version " +
                        std::to_string(layout) + ", this build extracts version " +
                        std::to_string(kFeatureLayoutVersion));
    }
    b.feature_mask =
        FeatureMask::Parse(manifest.at("feature_mask").get<std::string>());
    b.generation = GenerationFromJson(manifest.at("generation"));
    b.original_weight =
        ParseDouble(manifest.at("original_weight").get<std::string>());
    const auto& pre = manifest.at("lm_preprocess");
    b.lm_rules.username_placeholder =
        pre.at("username_placeholder").get<std::string>();
    b.lm_rules.url_placeholder = pre.at("url_placeholder").get<std::string>();
    b.lm_rules.lowercase = pre.at("lowercase").get<bool>();
    b.dictionary_ref = RefFromJson(manifest.at("resources").at("dictionary"));
    b.embeddings_ref = RefFromJson(manifest.at("resources").at("embeddings"));
    b.held_out_lookup = manifest.at("held_out_lookup").get<bool>();
    b.stats = StatsFromJson(manifest.at("training"));
  } catch (const json::exception& e) {
    throw BundleError("malformed manifest in " + dir + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw BundleError("malformed manifest in " + dir + ": " + e.what());
  }
  {
    auto in = OpenIn(root / kForestFile);
    b.forest = ForestModel::Read(in);
  }
  if (b.forest.layout_version() != kFeatureLayoutVersion) {
    throw BundleError("forest feature layout version mismatch");
  }
  {
    auto in = OpenIn(root / kLookupFile);
    b.lookup = LookupTable::Read(in);
  }
  {
    auto in = OpenIn(root / kVocabFile);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) b.training_vocab.push_back(line);
    }
  }
  b.noisy = std::make_shared<NGramModel>(
      NGramModel::ReadFile((root / kNoisyFile).string()));
  b.canonical = std::make_shared<NGramModel>(
      NGramModel::ReadFile((root / kCanonicalFile).string()));
  return b;
}

}  // namespace lexnorm
