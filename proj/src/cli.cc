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


#include "lexnorm/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "lexnorm/eval.h"
#include "lexnorm/experiments.h"
#include "lexnorm/normalizer.h"
#include "lexnorm/text.h"

namespace lexnorm {
namespace {

namespace fs = std::filesystem;

// Raised for inputs that do not exist; maps to kExitUsage.
class MissingInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireFile(const std::string& path, const char* what) {
  if (path == "-") return;
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw MissingInput(std::string(what) + " not found: " + path);
  }
}

void RequireDir(const std::string& path, const char* what) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    throw MissingInput(std::string(what) + " not found: " + path);
  }
}

std::vector<Utterance> ReadCorpusArg(const std::string& path,
                                     std::ostream& err) {
  std::vector<std::string> warnings;
  std::vector<Utterance> utts;
  if (path == "-") {
    utts = ParseCorpus(std::cin, &warnings);
  } else {
    utts = ReadCorpusFile(path, &warnings);
  }
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return utts;
}

// Flags that mirror GenerationConfig.
struct GenerationFlags {
  std::string modules = "all";
  int emb_k = 40;
  int prefix_min_len = 3;
  int split_min_len = 4;
  std::string spell_mode = "normal";
  std::string filter = "none";

  void Register(CLI::App* app) {
    app->add_option("--modules", modules,
                    "generation modules: 'all' or a comma list of "
                    "original,embeddings,spell,lookup,prefix,split")
        ->capture_default_str();
    app->add_option("--emb-k", emb_k, "embedding neighbors per token")
        ->capture_default_str();
    app->add_option("--prefix-min-len", prefix_min_len)->capture_default_str();
    app->add_option("--split-min-len", split_min_len)->capture_default_str();
    app->add_option("--spell-mode", spell_mode, "normal or bad-spellers")
        ->capture_default_str();
    app->add_option("--filter", filter, "none, train or train+dict")
        ->capture_default_str();
  }

  GenerationConfig Build() const {
    GenerationConfig g;
    g.modules = ModuleSet::Parse(modules);
    if (!g.modules.Has(Module::kOriginal)) {
      throw std::invalid_argument("--modules must include 'original'");
    }
    if (emb_k < 1) throw std::invalid_argument("--emb-k must be at least 1");
    g.emb_k = emb_k;
    g.prefix_min_len = prefix_min_len;
    g.split_min_len = split_min_len;
    const SpellModeName name = SpellModeFromString(spell_mode);
    g.spell_mode =
        name == SpellModeName::kNormal ? SpellMode::Normal() : SpellMode::BadSpellers();
    g.filter = FilterFromName(filter);
    return g;
  }
};

// Flags that mirror ForestConfig.
struct ForestFlags {
  ForestConfig config;

  void Register(CLI::App* app) {
    app->add_option("--num-trees", config.num_trees)->capture_default_str();
    app->add_option("--mtry", config.mtry, "features tried per split; 0 = sqrt")
        ->capture_default_str();
    app->add_option("--min-node-size", config.min_node_size)->capture_default_str();
    app->add_option("--max-depth", config.max_depth, "0 = unlimited")
        ->capture_default_str();
    app->add_option("--sample-fraction", config.sample_fraction)
        ->capture_default_str();
    app->add_option("--replace", config.replace,
                    "bootstrap with replacement (true/false)")
        ->capture_default_str();
    app->add_option("--class-weight", config.class_weight)->capture_default_str();
    app->add_option("--seed", config.seed)->capture_default_str();
  }
};

struct ResourceFlags {
  std::string dictionary;
  std::string embeddings;
  std::string noisy_lm;
  std::string canonical_lm;

  void Register(CLI::App* app) {
    app->add_option("--dictionary", dictionary, "word list, one per line")->required();
    app->add_option("--embeddings", embeddings, "text vectors (optional)");
    app->add_option("--noisy-lm", noisy_lm, "n-gram model from noisy text")->required();
    app->add_option("--canonical-lm", canonical_lm, "n-gram model from canonical text")
        ->required();
  }

  void Check() const {
    RequireFile(dictionary, "dictionary");
    if (!embeddings.empty()) RequireFile(embeddings, "embeddings");
    RequireFile(noisy_lm, "noisy n-gram model");
    RequireFile(canonical_lm, "canonical n-gram model");
  }

  Resources Load() const {
    return Resources::Load(dictionary, embeddings, noisy_lm, canonical_lm);
  }
};

struct TrainFlags {
  GenerationFlags generation;
  ForestFlags forest;
  std::string disable_features;
  double original_weight = 1.0;
  bool held_out_lookup = false;

  void Register(CLI::App* app) {
    generation.Register(app);
    forest.Register(app);
    app->add_option("--disable-features", disable_features,
                    "comma list of feature groups to zero out");
    app->add_option("--original-weight", original_weight,
                    "multiplier for the original token's score")
        ->capture_default_str();
    app->add_flag("--held-out-lookup", held_out_lookup,
                  "build lookup features for each half from the other half");
  }

  TrainConfig Build(int threads) const {
    TrainConfig c;
    c.generation = generation.Build();
    c.forest = forest.config;
    c.forest.Validate(kNumFeatures);
    c.feature_mask = FeatureMask::Parse(disable_features);
    c.original_weight = original_weight;
    c.held_out_lookup = held_out_lookup;
    c.threads = threads;
    return c;
  }
};

NormalizeMode ParseMode(const std::string& mode) {
  if (mode == "auto") return NormalizeMode::kAuto;
  if (mode == "gold-ed") return NormalizeMode::kGoldErrorDetection;
  throw std::invalid_argument("unknown mode '" + mode + "' (auto or gold-ed)");
}

void WriteReport(const Report& report, const std::string& format,
                 std::ostream& out) {
  if (format == "tsv") {
    report.WriteTsv(out);
  } else if (format == "text") {
    report.WriteText(out);
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (text or tsv)");
  }
}

int CmdBuildResources(const std::string& noisy_text,
                      const std::string& canonical_text,
                      const std::string& out_dir, double alpha,
                      int64_t min_bigram_count, const std::string& dictionary,
                      const std::string& embeddings, std::ostream& out,
                      std::ostream& err) {
  RequireFile(noisy_text, "noisy text");
  RequireFile(canonical_text, "canonical text");
  if (!dictionary.empty()) RequireFile(dictionary, "dictionary");
  if (!embeddings.empty()) RequireFile(embeddings, "embeddings");

  const PreprocessRules rules;
  fs::create_directories(out_dir);
  auto build = [&](const std::string& src, const std::string& name) {
    std::ifstream in(src);
    if (!in) throw MissingInput("cannot read " + src);
    RawTextReader reader(in, rules);
    const NGramModel model = BuildNGram(
        [&reader](std::vector<std::string>* tokens) { return reader.Next(tokens); },
        alpha, min_bigram_count);
    const std::string path = (fs::path(out_dir) / name).string();
    model.WriteFile(path);
    out << name << "\tsentences=" << model.sentences()
        << "\ttokens=" << model.total_tokens() << "\ttypes=" << model.vocab_size()
        << '\n';
  };
  build(noisy_text, "noisy.lm");
  build(canonical_text, "canonical.lm");
  if (!dictionary.empty()) {
    const Dictionary dict = Dictionary::LoadFile(dictionary);
    out << "dictionary\twords=" << dict.size() << '\n';
  }
  if (!embeddings.empty()) {
    std::vector<std::string> warnings;
    const EmbeddingStore store = EmbeddingStore::LoadFile(embeddings, &warnings);
    for (const auto& w : warnings) err << "warning: " << embeddings << ": " << w << '\n';
    out << "embeddings\twords=" << store.size() << "\tdim=" << store.dim() << '\n';
  }
  return kExitOk;
}

int CmdTrain(const std::string& train_path, const ResourceFlags& res,
             const TrainFlags& flags, const std::string& model_dir, int threads,
             std::ostream& out, std::ostream& err) {
  RequireFile(train_path, "training corpus");
  res.Check();
  const TrainConfig config = flags.Build(threads);
  const auto training = ReadCorpusArg(train_path, err);
  const Resources resources = res.Load();
  const auto start = std::chrono::steady_clock::now();
  const ModelBundle bundle = Train(training, resources, config);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bundle.Save(model_dir);
  const auto& s = bundle.stats;
  out << "utterances\t" << s.utterances << '\n'
      << "tokens\t" << s.tokens << '\n'
      << "instances\t" << s.instances << '\n'
      << "positives\t" << s.positives << '\n'
      << "reachable\t" << s.reachable << '\n';
  const long total = static_cast<long>(secs + 0.5);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%ld:%02ld", total / 60, total % 60);
  // Timings are informational and go to the error stream so that the data
  // stream stays reproducible.
  err << "train time (m:s)\t" << buf << '\n'
      << "words/sec\t" << (secs > 0 ? static_cast<long>(s.tokens / secs) : 0)
      << '\n';
  return kExitOk;
}

Normalizer LoadNormalizer(const std::string& model_dir, double original_weight) {
  RequireDir(model_dir, "model bundle");
  Normalizer normalizer = Normalizer::Load(model_dir);
  if (original_weight > 0) normalizer.set_original_weight(original_weight);
  return normalizer;
}

int CmdNormalize(const std::string& model_dir, const std::string& input,
                 int top_n, const std::string& mode_name, double original_weight,
                 int threads, std::ostream& out, std::ostream& err) {
  RequireFile(input, "input");
  if (top_n < 1) throw std::invalid_argument("--top-n must be at least 1");
  const NormalizeMode mode = ParseMode(mode_name);
  const Normalizer normalizer = LoadNormalizer(model_dir, original_weight);
  const auto utts = ReadCorpusArg(input, err);
  if (mode == NormalizeMode::kGoldErrorDetection) {
    for (const auto& u : utts) {
      if (!u.HasGold()) throw std::invalid_argument("gold-ed mode needs a gold column");
    }
  }
  const auto ranked = normalizer.NormalizeAll(utts, top_n, mode, threads);
  for (size_t u = 0; u < ranked.size(); ++u) {
    if (u > 0) out << '\n';
    for (const auto& t : ranked[u]) {
      out << t.raw;
      if (top_n == 1) {
        out << '\t' << t.chosen;
      } else {
        for (const auto& c : t.candidates) {
          out << '\t' << c.surface << '\t' << FormatDouble(c.score);
        }
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int CmdEvaluate(const std::string& model_dir, const std::string& gold_path,
                const std::string& mode_name, double original_weight, int threads,
                int max_n, const std::string& format, std::ostream& out,
                std::ostream& err) {
  RequireFile(gold_path, "gold corpus");
  const NormalizeMode mode = ParseMode(mode_name);
  const Normalizer normalizer = LoadNormalizer(model_dir, original_weight);
  const auto gold = ReadCorpusArg(gold_path, err);
  for (const auto& u : gold) {
    if (!u.HasGold()) throw std::invalid_argument("gold corpus lacks a gold column");
  }
  Report report;
  if (mode == NormalizeMode::kGoldErrorDetection) {
    const auto ranked = normalizer.NormalizeAll(gold, 1, mode, threads);
    report.title = "gold error detection";
    report.columns = {"accuracy"};
    report.rows.push_back({FormatPercent(AccuracyGoldEd(gold, ranked))});
    WriteReport(report, format, out);
    return kExitOk;
  }
  const auto ranked = normalizer.NormalizeAll(gold, 0, mode, threads);
  const EvalCounts counts = CountOutcomes(gold, ranked);
  Metrics m = Prf(counts);
  m.wer = Wer(gold, ranked);
  report.title = "evaluation";
  report.notes.push_back(
      "a token normalized to the wrong word counts as one false positive and "
      "one false negative");
  report.columns = {"tp", "fp", "tn", "fn", "wrong", "recall", "precision",
                    "f1", "accuracy", "wer"};
  report.rows.push_back({std::to_string(counts.tp), std::to_string(counts.fp),
                         std::to_string(counts.tn), std::to_string(counts.fn),
                         std::to_string(counts.wrong_normalizations),
                         FormatPercent(m.recall), FormatPercent(m.precision),
                         FormatPercent(m.f1), FormatPercent(m.accuracy),
                         FormatPercent(m.wer)});
  WriteReport(report, format, out);

  Report topn;
  topn.title = "top-N recall over all tokens";
  topn.columns = {"n", "recall"};
  const size_t ceiling = MaxCandidates(ranked);
  for (int n = 1; n <= max_n && static_cast<size_t>(n) < ceiling; ++n) {
    topn.rows.push_back({std::to_string(n), FormatPercent(TopNRecall(gold, ranked, n))});
  }
  topn.rows.push_back(
      {"ceil", FormatPercent(TopNRecall(gold, ranked, static_cast<int>(
                                                          std::max<size_t>(ceiling, 1))))});
  out << '\n';
  WriteReport(topn, format, out);
  return kExitOk;
}

int CmdExperiment(const std::string& name, const std::string& train_path,
                  const std::string& dev_path, const ResourceFlags& res,
                  const TrainFlags& flags, const std::vector<size_t>& sizes,
                  uint64_t subsample_seed, int threads, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  const auto& names = ExperimentNames();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown experiment '" + name + "'");
  }
  RequireFile(train_path, "training corpus");
  RequireFile(dev_path, "dev corpus");
  res.Check();
  ExperimentSetup setup;
  setup.base = flags.Build(threads);
  setup.train = ReadCorpusArg(train_path, err);
  setup.dev = ReadCorpusArg(dev_path, err);
  setup.resources = res.Load();
  if (!sizes.empty()) setup.learning_sizes = sizes;
  setup.subsample_seed = subsample_seed;
  WriteReport(RunGrid(name, setup), format, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Lexical normalization: candidate generation and ranking"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads; 0 = all cores")
      ->capture_default_str();

  // build-resources
  auto* build = app.add_subcommand("build-resources",
                                   "build n-gram models from raw text");
  std::string noisy_text, canonical_text, out_dir, check_dict, check_emb;
  double alpha = 1.0;
  int64_t min_bigram_count = 1;
  build->add_option("--noisy-text", noisy_text, "noisy raw text")->required();
  build->add_option("--canonical-text", canonical_text, "canonical raw text")
      ->required();
  build->add_option("--out-dir", out_dir, "output directory")->required();
  build->add_option("--alpha", alpha, "additive smoothing constant")
      ->capture_default_str();
  build->add_option("--min-bigram-count", min_bigram_count)->capture_default_str();
  build->add_option("--dictionary", check_dict, "dictionary to validate");
  build->add_option("--embeddings", check_emb, "embeddings to validate");

  // train
  auto* train = app.add_subcommand("train", "train a model bundle");
  std::string train_path, model_dir;
  ResourceFlags train_res;
  TrainFlags train_flags;
  train->add_option("--train", train_path, "training corpus")->required();
  train->add_option("--model", model_dir, "bundle directory to write")->required();
  train_res.Register(train);
  train_flags.Register(train);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "normalize a corpus");
  std::string norm_model, norm_input = "-", norm_mode = "auto";
  int top_n = 1;
  double norm_weight = 0.0;
  normalize->add_option("--model", norm_model, "bundle directory")->required();
  normalize->add_option("--input", norm_input, "vertical corpus, '-' for stdin")
      ->capture_default_str();
  normalize->add_option("--top-n", top_n, "candidates per token")
      ->capture_default_str();
  normalize->add_option("--mode", norm_mode, "auto or gold-ed")->capture_default_str();
  normalize->add_option("--original-weight", norm_weight,
                        "override the bundle's original weight");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score a bundle on a gold corpus");
  std::string eval_model, eval_gold, eval_mode = "auto", eval_format = "text";
  double eval_weight = 0.0;
  int max_n = 5;
  evaluate->add_option("--model", eval_model, "bundle directory")->required();
  evaluate->add_option("--gold", eval_gold, "gold vertical corpus")->required();
  evaluate->add_option("--mode", eval_mode, "auto or gold-ed")->capture_default_str();
  evaluate->add_option("--original-weight", eval_weight,
                       "override the bundle's original weight");
  evaluate->add_option("--max-n", max_n, "largest N for top-N recall")
      ->capture_default_str();
  evaluate->add_option("--format", eval_format, "text or tsv")->capture_default_str();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run an experiment grid");
  std::string exp_name, exp_train, exp_dev, exp_format = "text";
  ResourceFlags exp_res;
  TrainFlags exp_flags;
  std::vector<size_t> sizes;
  uint64_t subsample_seed = 1;
  experiment->add_option("name", exp_name,
                         "ablate_features, ablate_generators, learning_curve "
                         "or mode_filter_grid")
      ->required();
  experiment->add_option("--train", exp_train, "training corpus")->required();
  experiment->add_option("--dev", exp_dev, "evaluation corpus")->required();
  experiment->add_option("--sizes", sizes, "learning curve training sizes");
  experiment->add_option("--subsample-seed", subsample_seed)->capture_default_str();
  experiment->add_option("--format", exp_format, "text or tsv")->capture_default_str();
  exp_res.Register(experiment);
  exp_flags.Register(experiment);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build) {
      return CmdBuildResources(noisy_text, canonical_text, out_dir, alpha,
                               min_bigram_count, check_dict, check_emb, out, err);
    }
    if (*train) {
      return CmdTrain(train_path, train_res, train_flags, model_dir, threads, out,
                      err);
    }
    if (*normalize) {
      return CmdNormalize(norm_model, norm_input, top_n, norm_mode, norm_weight,
                          threads, out, err);
    }
    if (*evaluate) {
      return CmdEvaluate(eval_model, eval_gold, eval_mode, eval_weight, threads,
                         max_n, eval_format, out, err);
    }
    if (*experiment) {
      return CmdExperiment(exp_name, exp_train, exp_dev, exp_res, exp_flags, sizes,
                           subsample_seed, threads, exp_format, out, err);
    }
  } catch (const MissingInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lexnorm
