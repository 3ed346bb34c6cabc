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

#include "kpath/kpath.h"

#include <exception>
#include <string>

#include "kpath/error.h"
#include "kpath/kg_store.h"
#include "kpath/runner.h"

struct kp_options {
  kpath::Options values;
};

struct kp_graph {
  kpath::KnowledgeGraph graph;
};

namespace {

thread_local std::string last_error;

std::string NormalizeKey(const char *key) {
  std::string k(key);
  for (char &c : k) {
    if (c == '-') c = '_';
  }
  return k;
}

template <typename Fn>
kp_status Guard(Fn fn) {
  try {
    fn();
    last_error.clear();
    return KP_OK;
  } catch (const kpath::Error &e) {
    last_error = e.what();
    return static_cast<kp_status>(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return KP_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return KP_INTERNAL;
  }
}

kp_status Invalid(const char *message) {
  last_error = message;
  return KP_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char *kp_version(void) { return "0.1.0"; }

const char *kp_last_error(void) { return last_error.c_str(); }

kp_options *kp_options_new(void) { return new (std::nothrow) kp_options(); }

void kp_options_free(kp_options *options) { delete options; }

kp_status kp_options_set(kp_options *options, const char *key, const char *value) {
  if (options == nullptr || key == nullptr || value == nullptr) {
    return Invalid("kp_options_set: null argument");
  }
  return Guard([&] { options->values[NormalizeKey(key)] = value; });
}

const char *kp_options_get(const kp_options *options, const char *key) {
  if (options == nullptr || key == nullptr) return nullptr;
  auto it = options->values.find(NormalizeKey(key));
  return it == options->values.end() ? nullptr : it->second.c_str();
}

kp_status kp_options_load(kp_options *options, const char *path) {
  if (options == nullptr || path == nullptr) return Invalid("kp_options_load: null argument");
  return Guard([&] {
    for (auto &[k, v] : kpath::LoadOptionsFile(path)) options->values[k] = v;
  });
}

kp_status kp_run(const char *command, const kp_options *options, kp_summary *summary) {
  if (command == nullptr || options == nullptr) return Invalid("kp_run: null argument");
  const std::string cmd(command);
  return Guard([&] {
    kpath::RunSummary s;
    if (cmd == "connect") {
      s = kpath::RunConnect(options->values);
    } else if (cmd == "baseline") {
      s = kpath::RunBaseline(options->values);
    } else if (cmd == "evaluate") {
      s = kpath::RunEvaluate(options->values);
    } else if (cmd == "stats") {
      s = kpath::RunStats(options->values);
    } else if (cmd == "random-class") {
      s = kpath::RunRandomClass(options->values);
    } else if (cmd == "kappa") {
      s = kpath::RunKappa(options->values);
    } else {
      throw kpath::Error(kpath::ErrorCode::kInvalidArgument, "unknown command '" + cmd + "'");
    }
    if (summary != nullptr) *summary = kp_summary{s.items, s.linked, s.failed};
  });
}

kp_status kp_graph_load(const char *path, const char *inventory, kp_graph **graph) {
  if (path == nullptr || graph == nullptr) return Invalid("kp_graph_load: null argument");
  *graph = nullptr;
  return Guard([&] {
    auto inv = kpath::RelationInventory::Resolve(inventory != nullptr ? inventory : "cn13");
    *graph = new kp_graph{kpath::KnowledgeGraph::LoadFile(path, inv)};
  });
}

void kp_graph_free(kp_graph *graph) { delete graph; }

size_t kp_graph_triple_count(const kp_graph *graph) {
  return graph == nullptr ? 0 : graph->graph.triples().size();
}

size_t kp_graph_concept_count(const kp_graph *graph) {
  return graph == nullptr ? 0 : graph->graph.vocab().size();
}

int kp_graph_has_triple(const kp_graph *graph, const char *head, const char *relation,
                        const char *tail) {
  if (graph == nullptr || head == nullptr || relation == nullptr || tail == nullptr) return -1;
  try {
    const auto rel = kpath::Relation::Parse(relation);
    if (!graph->graph.inventory().Contains(rel.name)) {
      last_error = std::string("unknown relation ") + relation;
      return -1;
    }
    return graph->graph.HasTriple(kpath::NormalizeConcept(head).normalized,
                                  rel, kpath::NormalizeConcept(tail).normalized)
               ? 1
               : 0;
  } catch (const std::exception &e) {
    last_error = e.what();
    return -1;
  }
}

}  // extern "C"
