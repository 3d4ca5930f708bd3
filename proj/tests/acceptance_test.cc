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


// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.
//
// Criterion 7 reads LEXNORM_DATA_DIR when set (train.txt, dev.txt, dict.txt,
// noisy.txt, canonical.txt, optional vectors.txt). Without it the bundled
// synthetic corpus stands in and the learning curve is scaled down.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lexnorm/cli.h"
#include "lexnorm/eval.h"
#include "lexnorm/experiments.h"
#include "lexnorm/forest.h"
#include "lexnorm/generation.h"
#include "lexnorm/lexicon.h"
#include "lexnorm/ngram.h"
#include "lexnorm/normalizer.h"
#include "lexnorm/spellcheck.h"
#include "lexnorm/text.h"
#include "oracles.h"
#include "test_util.h"

namespace lexnorm {
namespace {

using testing::Gen;
using testing::OracleDistance;
using testing::OracleSuggest;
using testing::ReadAll;
using testing::SyntheticPath;
using testing::TempDir;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string Lower(std::string s) {
  for (auto& ch : s) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return s;
}

std::vector<std::string> Words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

size_t OracleTokenDistance(const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
  std::vector<std::vector<size_t>> d(a.size() + 1, std::vector<size_t>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

Outcome MetricOracle() {
  const auto start = Clock::now();
  Outcome r;
  Gen gen(1001);
  const std::vector<std::string> words = {"u", "you", "U", "You", "r", "are",
                                          "ok", "okay", "b", "be", "by", "i don't know"};
  std::vector<Utterance> gold;
  std::vector<std::vector<RankedToken>> sys;
  int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  size_t edits = 0, gold_len = 0;
  int triples = 0;
  while (triples < 1000) {
    Utterance u;
    std::vector<RankedToken> out;
    const int n = gen.Int(1, 12);
    for (int i = 0; i < n && triples < 1000; ++i, ++triples) {
      std::string raw = gen.Pick(words);
      if (raw.find(' ') != std::string::npos) raw = "idk";
      const std::string g = gen.Coin(0.4) ? raw : gen.Pick(words);
      const std::string c = gen.Coin(0.4) ? raw : (gen.Coin(0.5) ? g : gen.Pick(words));
      u.tokens.push_back({raw, g});
      RankedToken t;
      t.raw = raw;
      t.chosen = c;
      t.candidates = {{c, 1.0, c == raw}};
      out.push_back(t);
      const std::string lr = Lower(raw), lg = Lower(g), lc = Lower(c);
      if (lg == lr) {
        (lc == lr ? tn : fp) += 1;
      } else if (lc == lg) {
        ++tp;
      } else if (lc == lr) {
        ++fn;
      } else {
        ++fp;
        ++fn;
      }
    }
    std::vector<std::string> gw, cw;
    for (size_t i = 0; i < u.tokens.size(); ++i) {
      for (const auto& w : Words(Lower(*u.tokens[i].gold))) gw.push_back(w);
      for (const auto& w : Words(Lower(out[i].chosen))) cw.push_back(w);
    }
    edits += OracleTokenDistance(cw, gw);
    gold_len += gw.size();
    gold.push_back(u);
    sys.push_back(out);
  }
  const double recall = tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0;
  const double precision = tp + fp ? static_cast<double>(tp) / (tp + fp) : 0.0;
  const double f1 =
      precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
  const double accuracy = static_cast<double>(tp + tn) / 1000.0;
  const double wer = static_cast<double>(edits) / static_cast<double>(gold_len);

  const Metrics m = Evaluate(gold, sys);
  const EvalCounts c = CountOutcomes(gold, sys);
  r.Require(c.tp == tp && c.fp == fp && c.tn == tn && c.fn == fn, "counts differ");
  r.Require(m.recall == recall, "recall differs");
  r.Require(m.precision == precision, "precision differs");
  r.Require(m.f1 == f1, "f1 differs");
  r.Require(m.accuracy == accuracy, "accuracy differs");
  r.Require(m.wer == wer, "wer differs");
  const double t = Since(start);
  r.Require(t < 5.0, "too slow");
  r.detail = (r.pass ? "" : r.detail + "; ") + "1000 triples, F1 " + FormatPercent(f1) +
             ", WER " + FormatPercent(wer) + ", " + Seconds(t);
  return r;
}

Outcome GenerationOracles() {
  const auto start = Clock::now();
  Outcome r;
  Gen gen(2002);
  const std::string alphabet = "abdeiklmnorstu";
  std::set<std::string> unique;
  while (unique.size() < 1000) unique.insert(gen.String(alphabet, 1, 8));
  const std::vector<std::string> words(unique.begin(), unique.end());
  const Dictionary dict(words);
  const SpellChecker checker(dict);
  for (int q = 0; q < 200; ++q) {
    const std::string query = gen.String(alphabet, 1, 9);
    std::vector<std::string> split;
    for (size_t i = 1; i < query.size(); ++i) {
      if (unique.count(query.substr(0, i)) && unique.count(query.substr(i))) {
        split.push_back(query.substr(0, i) + " " + query.substr(i));
      }
    }
    r.Require(GenSplit(query, dict) == split, "split differs on " + query);
    for (const auto& mode : {SpellMode::Normal(), SpellMode::BadSpellers()}) {
      std::vector<std::string> got;
      for (const auto& s : checker.Suggest(query, mode)) got.push_back(s.word);
      r.Require(got == OracleSuggest(words, query, mode), "suggest differs on " + query);
    }
  }
  const double t = Since(start);
  r.Require(t < 10.0, "too slow");
  r.detail = (r.pass ? "" : r.detail + "; ") +
             "1000-word dictionary, 200 queries, both spell modes, " + Seconds(t);
  return r;
}

Outcome EditDistanceMetric() {
  const auto start = Clock::now();
  Outcome r;
  Gen gen(3003);
  const std::string alphabet = "abcde";
  for (int i = 0; i < 10000; ++i) {
    const std::string a = gen.String(alphabet, 0, 12);
    const std::string b = gen.String(alphabet, 0, 12);
    const std::string c = gen.String(alphabet, 0, 12);
    const int ab = EditDistance(a, b);
    r.Require(ab == OracleDistance(a, b), "differs from table");
    r.Require(ab == EditDistance(b, a), "not symmetric");
    r.Require(EditDistance(a, a) == 0, "identity");
    r.Require((ab == 0) == (a == b), "zero only for equal strings");
    r.Require(EditDistance(a, c) <= ab + EditDistance(b, c), "triangle");
  }
  const double t = Since(start);
  r.Require(t < 5.0, "too slow");
  r.detail = (r.pass ? "" : r.detail + "; ") + "10000 pairs, " + Seconds(t);
  return r;
}

Outcome NGramNormalization() {
  Outcome r;
  Gen gen(4004);
  NGramModel m(0.5);
  for (int s = 0; s < 400; ++s) {
    std::vector<std::string> sentence(gen.Int(1, 10));
    for (auto& w : sentence) w = "w" + std::to_string(gen.Int(0, 49));
    m.AddSentence(sentence);
  }
  r.Require(m.vocab_size() == 50, "vocab is not 50 words");
  std::vector<std::string> outcomes;
  for (const auto& [w, c] : m.unigrams()) outcomes.push_back(w);
  outcomes.emplace_back(kSentenceEnd);
  std::vector<std::string> contexts(outcomes.begin(), outcomes.end() - 1);
  contexts.emplace_back(kSentenceStart);
  double worst = 0.0;
  for (const auto& prev : contexts) {
    double sum = 0.0;
    for (const auto& w : outcomes) sum += std::exp(m.LogProbBigram(prev, w));
    worst = std::max(worst, std::fabs(sum - 1.0));
  }
  r.Require(worst <= 1e-9, "a conditional does not sum to one");
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |sum - 1| = %.1e over %zu contexts", worst,
                contexts.size());
  r.detail = (r.pass ? "" : r.detail + "; ") + buf;
  return r;
}

Dataset Separable(int n, uint64_t seed) {
  Gen gen(seed);
  Dataset data(6);
  std::vector<double> x(6);
  for (int i = 0; i < n; ++i) {
    for (auto& v : x) v = gen.Real();
    data.Add(x, x[0] + x[1] > 1.0);
  }
  return data;
}

Outcome ForestSanity() {
  const auto start = Clock::now();
  Outcome r;
  const Dataset train = Separable(2000, 5005);
  const Dataset test = Separable(1000, 5006);
  ForestConfig c;
  c.num_trees = 100;
  c.seed = 11;
  c.threads = 1;
  const auto model = ForestModel::Fit(train, c);
  int correct = 0;
  for (size_t i = 0; i < test.size(); ++i) {
    correct += (model.PredictProba(test.Row(i)) > 0.5) == test.Label(i);
  }
  const double accuracy = correct / static_cast<double>(test.size());
  r.Require(accuracy >= 0.95, "held-out accuracy below 0.95");
  const auto again = ForestModel::Fit(train, c);
  c.threads = 4;
  const auto parallel = ForestModel::Fit(train, c);
  std::ostringstream a, b, p;
  model.Write(a);
  again.Write(b);
  parallel.Write(p);
  r.Require(a.str() == b.str(), "two runs differ");
  r.Require(a.str() == p.str(), "1 vs 4 threads differ");
  const double t = Since(start);
  r.Require(t < 30.0, "too slow");
  r.detail = (r.pass ? "" : r.detail + "; ") + "held-out accuracy " +
             FormatPercent(accuracy) + "%, " + Seconds(t);
  return r;
}

Outcome Memorization() {
  const auto start = Clock::now();
  Outcome r;
  const auto& s = testing::LoadSynthetic();
  TrainConfig config;
  config.forest.seed = 1;
  const auto bundle = std::make_shared<const ModelBundle>(Train(s.train, s.resources, config));
  const Normalizer n(bundle, s.resources);
  const double gold_ed =
      AccuracyGoldEd(s.train, n.NormalizeAll(s.train, 1, NormalizeMode::kGoldErrorDetection, 0));
  const Metrics dev = Evaluate(s.dev, n.NormalizeAll(s.dev, 1, NormalizeMode::kAuto, 0));
  r.Require(gold_ed >= 0.95, "gold-ED training accuracy below 95%");
  r.Require(dev.f1 >= 0.80, "held-out F1 below 80%");
  const double t = Since(start);
  r.Require(t < 120.0, "too slow");
  r.detail = (r.pass ? "" : r.detail + "; ") + "train gold-ED accuracy " +
             FormatPercent(gold_ed) + "%, held-out F1 " + FormatPercent(dev.f1) + "%, " +
             Seconds(t);
  return r;
}

// Inputs for the structural checks.
struct StructuralData {
  std::vector<Utterance> train;
  std::vector<Utterance> dev;
  Resources resources;
  size_t small = 0;
  size_t large = 0;
  std::string label;
};

StructuralData LoadStructural() {
  StructuralData d;
  const char* env = std::getenv("LEXNORM_DATA_DIR");
  if (env != nullptr && *env != '\0') {
    const std::filesystem::path dir(env);
    auto file = [&](const char* name) { return (dir / name).string(); };
    d.train = ReadCorpusFile(file("train.txt"));
    d.dev = ReadCorpusFile(file("dev.txt"));
    auto dict = std::make_shared<Dictionary>(Dictionary::LoadFile(file("dict.txt")));
    std::shared_ptr<EmbeddingStore> emb;
    if (std::filesystem::exists(file("vectors.txt"))) {
      emb = std::make_shared<EmbeddingStore>(EmbeddingStore::LoadFile(file("vectors.txt")));
    }
    auto noisy = std::make_shared<NGramModel>(testing::ModelFromText(file("noisy.txt")));
    auto canonical =
        std::make_shared<NGramModel>(testing::ModelFromText(file("canonical.txt")));
    d.resources = Resources::Create(dict, emb, noisy, canonical);
    d.small = 500;
    d.large = 2000;
    d.label = "user data in " + dir.string();
  } else {
    const auto& s = testing::LoadSynthetic();
    d.train = s.train;
    d.dev = s.dev;
    d.resources = s.resources;
    d.small = 50;
    d.large = 200;
    d.label = "synthetic stand-in, LEXNORM_DATA_DIR unset";
  }
  return d;
}

Outcome Structural(const StructuralData& d) {
  const auto start = Clock::now();
  Outcome r;
  TrainConfig config;
  config.forest.seed = 1;

  // (a) top-N recall rises to the generation upperbound.
  const auto bundle = std::make_shared<const ModelBundle>(Train(d.train, d.resources, config));
  const Normalizer n(bundle, d.resources);
  const auto ranked = n.NormalizeAll(d.dev, 0, NormalizeMode::kAuto, 0);
  const size_t ceiling = MaxCandidates(ranked);
  double prev = 0.0;
  for (size_t k = 1; k <= ceiling; ++k) {
    const double rec = TopNRecall(d.dev, ranked, static_cast<int>(k));
    r.Require(rec >= prev, "(a) top-N recall decreases");
    prev = rec;
  }
  const GenerationStats gen_all =
      MeasureGeneration(d.dev, d.train, d.resources, config.generation, 0);
  r.Require(prev == gen_all.upperbound_all, "(a) recall at ceiling != upperbound");

  // (b) candidate counts shrink with stricter filters.
  double avg[3];
  const CandidateFilter filters[3] = {CandidateFilter::kNone, CandidateFilter::kTrainDict,
                                      CandidateFilter::kTrain};
  for (int i = 0; i < 3; ++i) {
    GenerationConfig g = config.generation;
    g.filter = filters[i];
    avg[i] = MeasureGeneration(d.dev, d.train, d.resources, g, 0).avg_candidates;
  }
  r.Require(avg[0] >= avg[1] && avg[1] >= avg[2], "(b) filter ordering");

  // (c) bad-spellers candidates contain the normal ones, token by token.
  const LookupTable lookup = LookupTable::Build(d.train);
  const auto vocab = TrainingVocabulary(d.train);
  GenerationResources res;
  res.embeddings = d.resources.embeddings.get();
  res.dictionary = d.resources.dictionary.get();
  res.spell = d.resources.spell.get();
  res.lookup = &lookup;
  res.training_vocab = &vocab;
  GenerationConfig normal = config.generation;
  GenerationConfig bad = normal;
  bad.spell_mode = SpellMode::BadSpellers();
  std::set<std::string> seen;
  size_t checked = 0;
  for (const auto& u : d.dev) {
    for (const auto& t : u.tokens) {
      const std::string token = ToLower(t.raw);
      if (!seen.insert(token).second) continue;
      std::set<std::string> big;
      for (const auto& c : Generate(token, bad, res)) big.insert(c.surface);
      for (const auto& c : Generate(token, normal, res)) {
        r.Require(big.count(c.surface) > 0, "(c) '" + c.surface + "' missing for " + token);
      }
      ++checked;
    }
  }

  // (d) more training data does not hurt.
  double f1[2];
  const size_t sizes[2] = {d.small, d.large};
  for (int i = 0; i < 2; ++i) {
    const auto sub = Subsample(d.train, sizes[i], 1);
    const auto b = std::make_shared<const ModelBundle>(Train(sub, d.resources, config));
    const Normalizer sn(b, d.resources);
    f1[i] = Evaluate(d.dev, sn.NormalizeAll(d.dev, 1, NormalizeMode::kAuto, 0)).f1;
  }
  r.Require(f1[1] >= f1[0], "(d) F1 at the larger size is lower");

  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s; (a) ceiling %zu, recall %s%% = upperbound %s%%; (b) avg candidates "
                "%.2f >= %.2f >= %.2f; (c) %zu tokens; (d) F1 %s%% at %zu, %s%% at %zu; %s",
                d.label.c_str(), ceiling, FormatPercent(prev).c_str(),
                FormatPercent(gen_all.upperbound_all).c_str(), avg[0], avg[1], avg[2],
                checked, FormatPercent(f1[0]).c_str(), sizes[0],
                FormatPercent(f1[1]).c_str(), sizes[1], Seconds(Since(start)).c_str());
  r.detail = (r.pass ? "" : r.detail + "; ") + buf;
  return r;
}

int Cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = RunCli(args, o, e);
  if (out != nullptr) *out = o.str();
  if (code != 0) std::cerr << e.str();
  return code;
}

// Bundle files compared byte for byte; the manifest is compared without
// its wall-clock timings.
bool SameBundle(const std::string& a, const std::string& b) {
  for (const char* f : {"forest.txt", "lookup.tsv", "train_vocab.txt", "noisy.lm",
                        "canonical.lm"}) {
    if (ReadAll(a + "/" + f) != ReadAll(b + "/" + f)) return false;
  }
  auto manifest = [](const std::string& dir) {
    auto j = nlohmann::json::parse(ReadAll(dir + "/manifest.json"));
    j["training"].erase("generation_seconds");
    j["training"].erase("fit_seconds");
    return j;
  };
  return manifest(a) == manifest(b);
}

Outcome Determinism() {
  const auto start = Clock::now();
  Outcome r;
  TempDir dir;
  const std::vector<std::string> resources = {
      "--dictionary", SyntheticPath("dict.txt"), "--embeddings", SyntheticPath("vectors.txt"),
      "--noisy-lm", dir.File("res/noisy.lm"), "--canonical-lm", dir.File("res/canonical.lm")};
  r.Require(Cli({"build-resources", "--noisy-text", SyntheticPath("noisy.txt"),
                 "--canonical-text", SyntheticPath("canonical.txt"), "--out-dir",
                 dir.File("res")}) == 0,
            "build-resources failed");
  std::string outputs[2];
  const char* threads[2] = {"1", "4"};
  for (int i = 0; i < 2; ++i) {
    const std::string model = dir.File(std::string("model") + threads[i]);
    std::vector<std::string> train = {"--threads", threads[i], "train", "--train",
                                      SyntheticPath("train.txt"), "--model", model,
                                      "--seed", "9"};
    train.insert(train.end(), resources.begin(), resources.end());
    r.Require(Cli(train) == 0, "train failed");
    r.Require(Cli({"--threads", threads[i], "normalize", "--model", model, "--input",
                   SyntheticPath("dev.txt"), "--top-n", "10"},
                  &outputs[i]) == 0,
              "normalize failed");
  }
  r.Require(SameBundle(dir.File("model1"), dir.File("model4")), "bundles differ");
  r.Require(!outputs[0].empty() && outputs[0] == outputs[1], "normalize outputs differ");
  r.detail = (r.pass ? "" : r.detail + "; ") + "train + normalize, 1 vs 4 threads, " +
             std::to_string(outputs[0].size()) + " output bytes, " + Seconds(Since(start));
  return r;
}

Outcome RoundTrips() {
  Outcome r;
  Gen gen(9009);
  const std::string alpha = "abcdefgh'12#@.";
  int corpora = 0;
  for (; corpora < 100; ++corpora) {
    std::vector<Utterance> utts(gen.Int(0, 6));
    for (auto& u : utts) {
      const int n = gen.Int(1, 8);
      for (int i = 0; i < n; ++i) {
        TokenEntry t;
        t.raw = gen.String(alpha, 1, 6);
        if (gen.Coin(0.3)) {
          t.gold = gen.String(alpha, 1, 4) + " " + gen.String(alpha, 1, 4);
        } else if (gen.Coin(0.3)) {
          t.gold = gen.String(alpha, 1, 6);
        } else {
          t.gold = t.raw;
        }
        u.tokens.push_back(t);
      }
    }
    std::ostringstream out;
    WriteCorpus(out, utts);
    const auto back = testing::ParseString(out.str());
    std::ostringstream again;
    WriteCorpus(again, back);
    r.Require(back == utts && again.str() == out.str(), "corpus round trip");
  }

  const auto& s = testing::LoadSynthetic();
  TrainConfig config = testing::SmallTrainConfig();
  const auto bundle = std::make_shared<const ModelBundle>(Train(s.train, s.resources, config));
  TempDir dir;
  bundle->Save(dir.File("a"));
  const Normalizer loaded = Normalizer::Load(dir.File("a"));
  loaded.bundle().Save(dir.File("b"));
  r.Require(ReadAll(dir.File("a/manifest.json")) == ReadAll(dir.File("b/manifest.json")) &&
                SameBundle(dir.File("a"), dir.File("b")),
            "bundle files change on re-save");
  const Normalizer original(bundle, s.resources);
  const auto x = original.NormalizeAll(s.dev, 0, NormalizeMode::kAuto, 1);
  const auto y = loaded.NormalizeAll(s.dev, 0, NormalizeMode::kAuto, 1);
  size_t compared = 0;
  bool same = x.size() == y.size();
  for (size_t u = 0; same && u < x.size(); ++u) {
    same = x[u].size() == y[u].size();
    for (size_t i = 0; same && i < x[u].size(); ++i) {
      same = x[u][i].chosen == y[u][i].chosen &&
             x[u][i].candidates.size() == y[u][i].candidates.size();
      for (size_t k = 0; same && k < x[u][i].candidates.size(); ++k) {
        same = x[u][i].candidates[k].surface == y[u][i].candidates[k].surface &&
               x[u][i].candidates[k].score == y[u][i].candidates[k].score;
        ++compared;
      }
    }
  }
  r.Require(same, "predictions differ after reload");
  r.detail = (r.pass ? "" : r.detail + "; ") + std::to_string(corpora) +
             " corpora; bundle reload, " + std::to_string(compared) + " scores identical";
  return r;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace lexnorm

int main() {
  using namespace lexnorm;
  const std::vector<Criterion> criteria = {
      {1, "metric oracle", MetricOracle},
      {2, "generation oracles", GenerationOracles},
      {3, "edit distance metric", EditDistanceMetric},
      {4, "n-gram normalization", NGramNormalization},
      {5, "forest sanity", ForestSanity},
      {6, "memorization end-to-end", Memorization},
      {7, "structural reproductions", [] { return Structural(LoadStructural()); }},
      {8, "serial vs parallel determinism", Determinism},
      {9, "round trips", RoundTrips},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    failures += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name
              << "): " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
