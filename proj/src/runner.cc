// Copyright 2026 The kpath Authors.
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

#include "kpath/runner.h"

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "kpath/backends.h"
#include "kpath/baseline.h"
#include "kpath/corpus.h"
#include "kpath/embed_store.h"
#include "kpath/error.h"
#include "kpath/eval.h"
#include "kpath/extract.h"
#include "kpath/kg_store.h"
#include "kpath/pathfind.h"
#include "kpath/pos.h"
#include "kpath/remote.h"
#include "kpath/result_io.h"
#include "kpath/text.h"

namespace kpath {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> &KnownKeys() {
  static const std::set<std::string> keys = {
      "annotations", "backend",      "beam",       "bidirectional", "concurrency",
      "corpus",      "embeddings",   "format",     "frontier_cap",  "graph",
      "inventory",   "label_inventory", "lexicon", "max_hops",      "method",
      "n",           "out",          "pos_filter", "pos_table",     "pre_extracted",
      "remote_url",  "replace_vague", "results",   "retries",       "scoring",
      "seed",        "setting",      "sim_gate",   "stopwords",     "templates",
      "terminate",   "threshold",    "timeout_ms", "top_k",         "use_inverse",
      "workers"};
  return keys;
}

class Config {
 public:
  explicit Config(const Options &options) : options_(options) {
    for (const auto &[key, value] : options_) {
      if (!KnownKeys().count(key)) {
        throw Error(ErrorCode::kInvalidArgument, "unknown option '" + key + "'");
      }
    }
  }

  bool Has(const std::string &key) const {
    auto it = options_.find(key);
    return it != options_.end() && !it->second.empty();
  }

  std::string Get(const std::string &key, const std::string &fallback = "") const {
    return Has(key) ? options_.at(key) : fallback;
  }

  std::string Require(const std::string &key) const {
    if (!Has(key)) throw Error(ErrorCode::kInvalidArgument, "missing required option '" + key + "'");
    return options_.at(key);
  }

  double Double(const std::string &key, double fallback) const {
    if (!Has(key)) return fallback;
    const std::string &v = options_.at(key);
    try {
      size_t used = 0;
      double d = std::stod(v, &used);
      if (used == v.size()) return d;
    } catch (const std::exception &) {
    }
    throw Error(ErrorCode::kInvalidArgument, "option '" + key + "' is not a number: " + v);
  }

  long Int(const std::string &key, long fallback) const {
    if (!Has(key)) return fallback;
    const std::string &v = options_.at(key);
    try {
      size_t used = 0;
      long i = std::stol(v, &used);
      if (used == v.size()) return i;
    } catch (const std::exception &) {
    }
    throw Error(ErrorCode::kInvalidArgument, "option '" + key + "' is not an integer: " + v);
  }

  bool Bool(const std::string &key, bool fallback) const {
    if (!Has(key)) return fallback;
    std::string v = ToLower(options_.at(key));
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw Error(ErrorCode::kInvalidArgument, "option '" + key + "' is not a boolean: " + v);
  }

 private:
  const Options &options_;
};

// Writes to the "out" file, or stdout when it is absent or "-".
class Output {
 public:
  explicit Output(const Config &config) : path_(config.Get("out", "-")) {
    if (path_ != "-") {
      file_.open(path_, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path_);
    }
  }

  std::ostream &stream() { return path_ == "-" ? std::cout : file_; }
  bool to_file() const { return path_ != "-"; }
  const std::string &path() const { return path_; }

  void Close() {
    stream().flush();
    if (!stream()) throw Error(ErrorCode::kIo, "write failed: " + path_);
    if (to_file()) file_.close();
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void WriteSidecar(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
}

StopwordSet LoadStopwords(const Config &config) {
  return config.Has("stopwords") ? StopwordSet::FromFile(config.Get("stopwords")) : StopwordSet();
}

ChainParams LoadChainParams(const Config &config) {
  ChainParams p;
  p.beam = static_cast<int>(config.Int("beam", p.beam));
  p.sim_gate = config.Double("sim_gate", p.sim_gate);
  p.terminate = config.Double("terminate", p.terminate);
  p.max_hops = static_cast<int>(config.Int("max_hops", p.max_hops));
  p.frontier_cap = static_cast<int>(config.Int("frontier_cap", p.frontier_cap));
  p.use_inverse = config.Bool("use_inverse", p.use_inverse);
  p.bidirectional = config.Bool("bidirectional", p.bidirectional);
  p.Validate();
  return p;
}

double LoadThreshold(const Config &config) {
  double t = config.Double("threshold", 0.9);
  if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "threshold must be in (0, 1]");
  return t;
}

int LoadTopK(const Config &config) {
  long k = config.Int("top_k", 1);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "top_k must be >= 1");
  return static_cast<int>(k);
}

// Relation classifier and target generator selected by "backend".
struct Backends {
  std::unique_ptr<GraphClassifier> graph_classifier;
  std::unique_ptr<GraphGenerator> graph_generator;
  std::unique_ptr<RemoteBackend> remote;
  std::unique_ptr<MemoClassifier> classifier;
  std::unique_ptr<MemoGenerator> generator;
};

Backends MakeBackends(const Config &config, const KnowledgeGraph &graph,
                      const RelationInventory &labels) {
  Backends b;
  const std::string kind = config.Get("backend", "oracle");
  if (kind == "oracle") {
    b.graph_classifier = std::make_unique<GraphClassifier>(graph, labels);
    b.graph_generator = std::make_unique<GraphGenerator>(graph);
    b.classifier = std::make_unique<MemoClassifier>(*b.graph_classifier);
    b.generator = std::make_unique<MemoGenerator>(*b.graph_generator);
  } else if (kind == "remote") {
    RemoteConfig rc;
    rc.base_url = config.Require("remote_url");
    rc.timeout_ms = static_cast<int>(config.Int("timeout_ms", rc.timeout_ms));
    rc.max_retries = static_cast<int>(config.Int("retries", rc.max_retries));
    rc.max_concurrent = static_cast<int>(config.Int("concurrency", rc.max_concurrent));
    b.remote = std::make_unique<RemoteBackend>(rc, labels.ClassifierLabels());
    b.classifier = std::make_unique<MemoClassifier>(*b.remote);
    b.generator = std::make_unique<MemoGenerator>(*b.remote);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "backend must be 'oracle' or 'remote'");
  }
  return b;
}

// Concept mentions per corpus sentence pair, from the extractor or from a
// pre-extracted file.
class MentionSource {
 public:
  MentionSource(const Config &config, const std::vector<SentencePair> &corpus,
                const ConceptExtractor &extractor)
      : extractor_(extractor) {
    if (config.Has("pre_extracted")) {
      std::set<std::string> ids;
      for (const auto &p : corpus) ids.insert(p.id);
      pre_ = LoadPreExtractedFile(config.Get("pre_extracted"), ids, extractor);
    }
  }

  PreExtractedMentions Get(const SentencePair &pair) const {
    if (pre_) {
      auto it = pre_->by_id.find(pair.id);
      if (it != pre_->by_id.end()) return it->second;
    }
    return PreExtractedMentions{extractor_.Extract(pair.s1), extractor_.Extract(pair.s2)};
  }

  size_t dropped() const { return pre_ ? pre_->dropped : 0; }

 private:
  const ConceptExtractor &extractor_;
  std::optional<PreExtracted> pre_;
};

std::string PairId(const std::string &sentence_id, size_t k) {
  return sentence_id + "#" + std::to_string(k);
}

struct SentenceOutcome {
  std::vector<ResultRecord> records;
  ChainDiagnostics diagnostics;
  std::optional<std::string> failure;  // JSON line
};

// Runs `work(i)` for i in [0, n) on `workers` threads; results are stored by
// index so the output order does not depend on scheduling.
template <typename Fn>
std::vector<SentenceOutcome> ParallelMap(size_t n, int workers, Fn work) {
  std::vector<SentenceOutcome> outcomes(n);
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  auto loop = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        outcomes[i] = work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (threads <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(loop);
    for (auto &th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return outcomes;
}

std::string FailureLine(const SentencePair &pair, const std::string &pair_id, const Error &e) {
  ordered_json j;
  j["sentence_id"] = pair.id;
  j["pair_id"] = pair_id;
  j["code"] = static_cast<int>(e.code());
  j["error"] = e.what();
  return j.dump();
}

int LoadWorkers(const Config &config) {
  long w = config.Int("workers", 1);
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  return static_cast<int>(w);
}

RunSummary Finish(Output &out, const std::vector<SentenceOutcome> &outcomes,
                  ordered_json stats) {
  RunSummary summary;
  std::vector<ResultRecord> records;
  std::string failures;
  size_t truncations = 0, uncovered = 0, calls = 0, direct = 0, multihop = 0;
  for (const auto &o : outcomes) {
    if (o.failure) {
      failures += *o.failure + "\n";
      ++summary.failed;
      continue;
    }
    truncations += o.diagnostics.frontier_truncations;
    uncovered += o.diagnostics.target_uncovered ? 1 : 0;
    calls += o.diagnostics.generator_calls;
    for (const auto &r : o.records) {
      records.push_back(r);
      if (r.result.verdict == Verdict::kDirect) ++direct;
      if (r.result.verdict == Verdict::kMultihop) ++multihop;
    }
  }
  WriteResults(out.stream(), records);
  out.Close();
  summary.items = records.size();
  summary.linked = direct + multihop;

  stats["pairs"] = records.size();
  stats["direct"] = direct;
  stats["multihop"] = multihop;
  stats["unconnected"] = records.size() - direct - multihop;
  stats["failed_sentences"] = summary.failed;
  stats["frontier_truncations"] = truncations;
  stats["target_uncovered"] = uncovered;
  stats["generator_calls"] = calls;
  if (out.to_file()) {
    WriteSidecar(out.path() + ".stats.json", stats.dump(2) + "\n");
    if (summary.failed > 0) WriteSidecar(out.path() + ".failures.jsonl", failures);
  } else if (summary.failed > 0) {
    std::cerr << failures;
  }
  return summary;
}

std::vector<std::pair<std::string, std::string>> ParseResultsList(const std::string &spec) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &item : Split(spec, ',')) {
    std::string entry = Trim(item);
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      throw Error(ErrorCode::kInvalidArgument, "results entries must be METHOD=path: " + entry);
    }
    out.push_back({Trim(entry.substr(0, eq)), Trim(entry.substr(eq + 1))});
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no results given");
  return out;
}

}  // namespace

Options LoadOptionsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config: " + path);
  Options options;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse,
                  path + ": line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = Trim(line.substr(0, eq));
    for (char &c : key) {
      if (c == '-') c = '_';
    }
    options[key] = Trim(line.substr(eq + 1));
  }
  return options;
}

RunSummary RunConnect(const Options &options) {
  Config config(options);
  const std::string method = config.Get("method", "connect");
  if (method != "connect" && method != "classifier" && method != "generator") {
    throw Error(ErrorCode::kInvalidArgument,
                "method must be 'connect', 'classifier' or 'generator'");
  }
  const auto inventory = RelationInventory::Resolve(config.Get("inventory", "cn13"));
  const auto labels = config.Has("label_inventory")
                          ? RelationInventory::Resolve(config.Get("label_inventory"))
                          : inventory;
  const auto graph = KnowledgeGraph::LoadFile(config.Require("graph"), inventory);
  const auto embeddings =
      EmbeddingStore::LoadFile(config.Require("embeddings"), LoadStopwords(config));
  const auto corpus = LoadCorpusFile(config.Require("corpus"));
  const ChainParams params = LoadChainParams(config);
  const double threshold = LoadThreshold(config);
  const int top_k = LoadTopK(config);
  const int workers = LoadWorkers(config);

  std::optional<PosPatternTable> table;
  std::optional<LexiconTagger> tagger;
  PosFilter filter;
  const PosFilter *filter_ptr = nullptr;
  if (config.Bool("pos_filter", false)) {
    table = config.Has("pos_table") ? PosPatternTable::FromFile(config.Get("pos_table"))
                                    : PosPatternTable::Default();
    tagger = config.Has("lexicon") ? LexiconTagger::FromFile(config.Get("lexicon"))
                                   : LexiconTagger();
    filter = PosFilter{&*table, &*tagger};
    filter_ptr = &filter;
  }

  const ConceptExtractor extractor(graph.vocab(), embeddings.stopwords());
  const MentionSource mentions(config, corpus, extractor);
  Backends backends = MakeBackends(config, graph, labels);
  const ForwardChainer chainer(*backends.generator, embeddings, labels.ChainRelations(), params,
                               filter_ptr);
  Output out(config);

  auto work = [&](size_t i) {
    const SentencePair &sp = corpus[i];
    SentenceOutcome outcome;
    const auto m = mentions.Get(sp);
    const auto pairs = PairConcepts(m.s1, m.s2);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const ConceptPair &pair = pairs[k];
      try {
        std::vector<DirectLink> links;
        std::vector<KnowledgePath> paths;
        if (method != "generator") {
          links = LinkDirect(pair, *backends.classifier, threshold, filter_ptr);
        }
        if (method != "classifier") paths = chainer.Chain(pair, &outcome.diagnostics);
        outcome.records.push_back(ResultRecord{PairId(sp.id, k), sp.id,
                                               Combine(pair, std::move(links), std::move(paths),
                                                       top_k)});
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kBackendTransport && e.code() != ErrorCode::kBackendProtocol) {
          throw;
        }
        outcome.records.clear();
        outcome.failure = FailureLine(sp, PairId(sp.id, k), e);
        break;
      }
    }
    return outcome;
  };

  auto outcomes = ParallelMap(corpus.size(), workers, work);
  ordered_json stats;
  stats["method"] = method;
  stats["sentences"] = corpus.size();
  stats["graph_self_loops_skipped"] = graph.stats().self_loops;
  stats["pre_extracted_dropped"] = mentions.dropped();
  return Finish(out, outcomes, std::move(stats));
}

RunSummary RunBaseline(const Options &options) {
  Config config(options);
  const auto inventory = RelationInventory::Resolve(config.Get("inventory", "baseline"));
  const auto graph = KnowledgeGraph::LoadFile(config.Require("graph"), inventory);
  const auto corpus = LoadCorpusFile(config.Require("corpus"));
  const int top_k = LoadTopK(config);
  const long max_hops = config.Int("max_hops", 3);
  if (max_hops < 1) throw Error(ErrorCode::kInvalidArgument, "max_hops must be >= 1");
  const PathScoring scoring = ParsePathScoring(config.Get("scoring", "mean-product"));
  const bool replace = config.Bool("replace_vague", false);
  const double threshold = LoadThreshold(config);
  const int workers = LoadWorkers(config);

  const ConceptExtractor extractor(graph.vocab(), LoadStopwords(config));
  const MentionSource mentions(config, corpus, extractor);
  const UndirectedIndex index(graph);

  // Vague relations are re-labelled with the CN-13 classifier.
  std::optional<Backends> backends;
  if (replace) {
    backends = MakeBackends(config, graph,
                            config.Has("label_inventory")
                                ? RelationInventory::Resolve(config.Get("label_inventory"))
                                : RelationInventory::Cn13());
  }
  Output out(config);
  std::vector<VagueReplacementStats> vague(corpus.size());

  auto work = [&](size_t i) {
    const SentencePair &sp = corpus[i];
    SentenceOutcome outcome;
    const auto m = mentions.Get(sp);
    const auto pairs = PairConcepts(m.s1, m.s2);
    std::vector<std::string> seeds;
    for (const auto *side : {&m.s1, &m.s2}) {
      for (const auto &mention : *side) seeds.push_back(mention.node.normalized);
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::optional<Subgraph> sub;
    NodeScores scores;
    if (!seeds.empty()) {
      try {
        sub = BuildSubgraph(index, seeds);
        scores.pagerank = PageRank(*sub);
        scores.closeness = Closeness(*sub);
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kMissingData) throw;
        std::cerr << "warning: sentence pair " + sp.id + ": " + e.what() +
                         "; its concept pairs are Unconnected\n";
      }
    }
    for (size_t k = 0; k < pairs.size(); ++k) {
      const ConceptPair &pair = pairs[k];
      try {
        std::vector<KnowledgePath> paths;
        if (sub && sub->HasNode(pair.source.normalized) &&
            sub->HasNode(pair.target.normalized)) {
          paths = RankPaths(*sub, pair, scores, static_cast<int>(max_hops), top_k, scoring);
        }
        if (replace && !paths.empty()) {
          paths = ReplaceVague(std::move(paths), *backends->classifier, threshold, &vague[i]);
        }
        ConnectResult result;
        result.pair = pair;
        result.verdict = paths.empty() ? Verdict::kUnconnected : Verdict::kMultihop;
        result.paths = std::move(paths);
        outcome.records.push_back(ResultRecord{PairId(sp.id, k), sp.id, std::move(result)});
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kBackendTransport && e.code() != ErrorCode::kBackendProtocol) {
          throw;
        }
        outcome.records.clear();
        outcome.failure = FailureLine(sp, PairId(sp.id, k), e);
        break;
      }
    }
    return outcome;
  };

  auto outcomes = ParallelMap(corpus.size(), workers, work);
  VagueReplacementStats total;
  for (const auto &v : vague) {
    total.related_to += v.related_to;
    total.related_to_replaced += v.related_to_replaced;
    total.has_context += v.has_context;
    total.has_context_replaced += v.has_context_replaced;
  }
  ordered_json stats;
  stats["method"] = "static";
  stats["sentences"] = corpus.size();
  stats["scoring"] = config.Get("scoring", "mean-product");
  if (replace) {
    stats["related_to"] = total.related_to;
    stats["related_to_replaced"] = total.related_to_replaced;
    stats["has_context"] = total.has_context;
    stats["has_context_replaced"] = total.has_context_replaced;
  }
  return Finish(out, outcomes, std::move(stats));
}

RunSummary RunEvaluate(const Options &options) {
  Config config(options);
  const EvalSetting setting = ParseEvalSetting(config.Require("setting"));
  const auto corpus = LoadCorpusFile(config.Require("corpus"));
  const auto embeddings =
      EmbeddingStore::LoadFile(config.Require("embeddings"), LoadStopwords(config));
  const auto methods = ParseResultsList(config.Require("results"));
  const double threshold = LoadThreshold(config);

  std::optional<KnowledgeGraph> graph;
  std::optional<ConceptExtractor> extractor;
  std::optional<Backends> backends;
  std::optional<TemplateTable> templates;
  EvalContext context;
  context.embeddings = &embeddings;
  context.threshold = threshold;
  if (setting == EvalSetting::kSilver) {
    const auto inventory = RelationInventory::Resolve(config.Get("inventory", "cn13"));
    graph = KnowledgeGraph::LoadFile(config.Require("graph"), inventory);
    extractor.emplace(graph->vocab(), embeddings.stopwords());
    backends = MakeBackends(config, *graph,
                            config.Has("label_inventory")
                                ? RelationInventory::Resolve(config.Get("label_inventory"))
                                : inventory);
    context.extractor = &*extractor;
    context.classifier = backends->classifier.get();
  }
  if (setting == EvalSetting::kGoldNl) {
    templates = config.Has("templates") ? TemplateTable::FromFile(config.Get("templates"))
                                        : TemplateTable::Default();
    context.templates = &*templates;
  }

  ordered_json report;
  report["setting"] = SettingKey(setting);
  report["title"] = SettingTitle(setting);
  ordered_json rows = ordered_json::object();
  RunSummary summary;
  for (const auto &[name, path] : methods) {
    MethodScores s = ScoreSetting(setting, corpus, ReadResultsFile(path), context);
    ordered_json row;
    row["cosim"] = s.cosim ? ordered_json(*s.cosim) : ordered_json();
    if (s.greedy_f1) {
      row["greedy_precision"] = s.greedy_f1->precision;
      row["greedy_recall"] = s.greedy_f1->recall;
      row["greedy_f1"] = s.greedy_f1->f1;
    } else {
      row["greedy_precision"] = nullptr;
      row["greedy_recall"] = nullptr;
      row["greedy_f1"] = nullptr;
    }
    row["items"] = s.items;
    row["skipped"] = s.skipped;
    rows[name] = std::move(row);
    summary.items += s.items;
  }
  report["methods"] = std::move(rows);
  Output out(config);
  out.stream() << report.dump(2) << "\n";
  out.Close();
  return summary;
}

RunSummary RunStats(const Options &options) {
  Config config(options);
  const auto methods = ParseResultsList(config.Require("results"));
  const std::string format = config.Get("format", "table");
  if (format != "table" && format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "format must be 'table' or 'json'");
  }
  std::vector<std::pair<std::string, CorpusStats>> columns;
  RunSummary summary;
  for (const auto &[name, path] : methods) {
    std::vector<ConnectResult> results;
    for (auto &r : ReadResultsFile(path)) results.push_back(std::move(r.result));
    columns.push_back({name, ComputeCorpusStats(results)});
    summary.items += columns.back().second.pairs;
    summary.linked += columns.back().second.linked_pairs;
  }
  Output out(config);
  if (format == "table") {
    out.stream() << FormatStatsTable(columns);
  } else {
    ordered_json j = ordered_json::object();
    for (const auto &[name, s] : columns) {
      ordered_json col;
      col["pairs"] = s.pairs;
      col["linked_pairs"] = s.linked_pairs;
      col["avg_hops"] = s.avg_hops ? ordered_json(*s.avg_hops) : ordered_json();
      col["relation_counts"] = s.relation_counts;
      col["relation_histogram"] = s.relation_histogram;
      j[name] = std::move(col);
    }
    out.stream() << j.dump(2) << "\n";
  }
  out.Close();
  return summary;
}

RunSummary RunRandomClass(const Options &options) {
  Config config(options);
  const auto inventory = RelationInventory::Resolve(config.Get("inventory", "cn13"));
  const auto graph = KnowledgeGraph::LoadFile(config.Require("graph"), inventory);
  const long n = config.Int("n", static_cast<long>(kRandomClassTrain));
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  const long seed = config.Int("seed", 0);
  const auto pairs = BuildRandomClass(graph, static_cast<size_t>(n), static_cast<uint64_t>(seed));
  Output out(config);
  for (const auto &p : pairs) {
    ordered_json j;
    j["head"] = p.head;
    j["relation"] = std::string(kRandom);
    j["tail"] = p.tail;
    j["kind"] = p.opposite ? "opposite" : "corrupt";
    j["source_relation"] = p.source_relation;
    out.stream() << j.dump() << "\n";
  }
  out.Close();
  RunSummary summary;
  summary.items = pairs.size();
  return summary;
}

RunSummary RunKappa(const Options &options) {
  Config config(options);
  const auto report = AnnotationAgreement(LoadAnnotationsFile(config.Require("annotations")));
  ordered_json j;
  j["annotators"] = {report.annotator_a, report.annotator_b};
  j["items"] = report.items;
  j["relevance_kappa"] = report.relevance_kappa;
  j["implicit_kappa"] = report.implicit_kappa;
  j["best_model_kappa"] = report.best_model_kappa;
  Output out(config);
  out.stream() << j.dump(2) << "\n";
  out.Close();
  RunSummary summary;
  summary.items = report.items;
  return summary;
}

}  // namespace kpath
