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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpath/kpath.h"

namespace {

// Flag values of one subcommand, keyed by option name.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option *>> options;

  CLI::Option *Add(CLI::App *app, const std::string &name, const std::string &help) {
    options.push_back({name, app->add_option("--" + name, values[name], help)});
    return options.back().second;
  }
  void AddSwitch(CLI::App *app, const std::string &name, const std::string &help) {
    options.push_back({name, app->add_flag("--" + name, help)});
  }
};

void AddGraphFlags(CLI::App *app, FlagSet &flags) {
  flags.Add(app, "graph", "knowledge graph TSV");
  flags.Add(app, "inventory", "relation inventory: cn13, baseline or a file");
  flags.Add(app, "corpus", "sentence-pair corpus JSONL");
  flags.Add(app, "pre-extracted", "pre-extracted concepts JSONL");
  flags.Add(app, "stopwords", "stopword list, one word per line");
  flags.Add(app, "workers", "worker threads");
  flags.Add(app, "out", "output path ('-' for stdout)");
}

void AddBackendFlags(CLI::App *app, FlagSet &flags) {
  flags.Add(app, "backend", "oracle or remote")->check(CLI::IsMember({"oracle", "remote"}));
  flags.Add(app, "remote-url", "model service base URL");
  flags.Add(app, "timeout-ms", "remote request timeout");
  flags.Add(app, "retries", "remote retries on transport errors");
  flags.Add(app, "concurrency", "maximum in-flight remote requests");
  flags.Add(app, "label-inventory", "relation labels of the classifier");
  flags.Add(app, "threshold", "classifier acceptance threshold");
}

int ExitCode(kp_status status, const kp_summary &summary) {
  if (status == KP_OK) return summary.failed > 0 ? 1 : 0;
  std::fprintf(stderr, "kpath: %s\n", kp_last_error());
  return status == KP_INTERNAL ? 3 : 2;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Knowledge paths between sentence pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kp_version());
  std::string config;
  app.add_option("--config", config, "key = value configuration file; flags win")
      ->check(CLI::ExistingFile);

  std::map<std::string, FlagSet> flags;
  std::vector<CLI::App *> commands;

  auto *connect = app.add_subcommand("connect", "link concept pairs directly or via paths");
  AddGraphFlags(connect, flags["connect"]);
  AddBackendFlags(connect, flags["connect"]);
  {
    FlagSet &f = flags["connect"];
    f.Add(connect, "embeddings", "word vectors");
    f.Add(connect, "method", "connect, classifier or generator");
    f.Add(connect, "beam", "generator beam size");
    f.Add(connect, "sim-gate", "similarity to keep a node");
    f.Add(connect, "terminate", "similarity to complete a path");
    f.Add(connect, "max-hops", "maximum path length");
    f.Add(connect, "frontier-cap", "nodes kept per search level");
    f.Add(connect, "use-inverse", "also query inverted relations (true/false)");
    f.Add(connect, "bidirectional", "also search from the target (true/false)");
    f.Add(connect, "top-k", "paths kept per pair");
    f.Add(connect, "pos-filter", "filter relations by part-of-speech patterns (true/false)");
    f.Add(connect, "pos-table", "part-of-speech pattern table");
    f.Add(connect, "lexicon", "part-of-speech lexicon");
  }

  auto *baseline = app.add_subcommand("baseline", "static shortest-path baseline");
  AddGraphFlags(baseline, flags["baseline"]);
  AddBackendFlags(baseline, flags["baseline"]);
  {
    FlagSet &f = flags["baseline"];
    f.Add(baseline, "max-hops", "maximum path length");
    f.Add(baseline, "top-k", "paths kept per pair");
    f.Add(baseline, "scoring", "mean-product, mean-pagerank or mean-closeness");
    f.AddSwitch(baseline, "replace-vague", "relabel RelatedTo/HasContext hops");
  }

  auto *evaluate = app.add_subcommand("evaluate", "score results against references");
  {
    FlagSet &f = flags["evaluate"];
    f.Add(evaluate, "setting", "a, b or c")->check(CLI::IsMember({"a", "b", "c"}))->required();
    f.Add(evaluate, "results", "METHOD=path[,METHOD=path...]");
    f.Add(evaluate, "corpus", "sentence-pair corpus JSONL");
    f.Add(evaluate, "embeddings", "word vectors");
    f.Add(evaluate, "stopwords", "stopword list");
    f.Add(evaluate, "graph", "knowledge graph TSV (setting a)");
    f.Add(evaluate, "inventory", "relation inventory");
    f.Add(evaluate, "templates", "relation templates (setting b)");
    f.Add(evaluate, "out", "report path");
    AddBackendFlags(evaluate, f);
  }

  auto *stats = app.add_subcommand("stats", "linked pairs and average hops per method");
  {
    FlagSet &f = flags["stats"];
    f.Add(stats, "results", "METHOD=path[,METHOD=path...]");
    f.Add(stats, "format", "table or json")->check(CLI::IsMember({"table", "json"}));
    f.Add(stats, "out", "report path");
  }

  auto *random_class = app.add_subcommand("random-class", "negative pairs for the Random label");
  {
    FlagSet &f = flags["random-class"];
    f.Add(random_class, "graph", "knowledge graph TSV");
    f.Add(random_class, "inventory", "relation inventory");
    f.Add(random_class, "n", "number of pairs (even)");
    f.Add(random_class, "seed", "random seed");
    f.Add(random_class, "out", "output path");
  }

  auto *kappa = app.add_subcommand("kappa", "annotator agreement");
  {
    FlagSet &f = flags["kappa"];
    f.Add(kappa, "annotations", "annotation CSV");
    f.Add(kappa, "out", "report path");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App *chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  FlagSet &f = flags[command];

  std::unique_ptr<kp_options, decltype(&kp_options_free)> options(kp_options_new(),
                                                                  &kp_options_free);
  if (!options) {
    std::fprintf(stderr, "kpath: out of memory\n");
    return 3;
  }
  kp_summary summary{};
  if (!config.empty() && kp_options_load(options.get(), config.c_str()) != KP_OK) {
    return ExitCode(KP_INVALID_ARGUMENT, summary);
  }
  for (const auto &[name, opt] : f.options) {
    if (opt->count() == 0) continue;
    const std::string value = opt->get_expected_min() == 0 ? "true" : f.values[name];
    kp_options_set(options.get(), name.c_str(), value.c_str());
  }
  kp_status status = kp_run(command.c_str(), options.get(), &summary);
  return ExitCode(status, summary);
}
