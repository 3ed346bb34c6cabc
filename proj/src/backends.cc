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

#include "kpath/backends.h"

#include <algorithm>

#include "kpath/error.h"

namespace kpath {

double RelationDistribution::Score(std::string_view label) const {
  auto it = scores.find(std::string(label));
  return it == scores.end() ? 0.0 : it->second;
}

void ValidateTargets(const std::vector<GeneratedTarget> &targets, const std::string &source,
                     int beam) {
  if (static_cast<int>(targets.size()) > beam) {
    throw Error(ErrorCode::kBackendProtocol, "generator returned more targets than beam size");
  }
  for (size_t i = 0; i < targets.size(); ++i) {
    const auto &t = targets[i];
    if (t.rank != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::kBackendProtocol, "generator ranks are not 1..k");
    }
    if (!(t.confidence >= 0.0 && t.confidence <= 1.0)) {
      throw Error(ErrorCode::kBackendProtocol, "generator confidence outside [0, 1]");
    }
    if (i > 0 && t.confidence > targets[i - 1].confidence) {
      throw Error(ErrorCode::kBackendProtocol, "generator confidences increase with rank");
    }
    if (t.node.normalized == source) {
      throw Error(ErrorCode::kBackendProtocol, "generator returned the source concept");
    }
  }
}

GraphClassifier::GraphClassifier(const KnowledgeGraph &graph)
    : GraphClassifier(graph, graph.inventory()) {}

GraphClassifier::GraphClassifier(const KnowledgeGraph &graph, const RelationInventory &labels)
    : graph_(graph), labels_(labels.ClassifierLabels()) {}

RelationDistribution GraphClassifier::Classify(const std::string &head,
                                               const std::string &tail) {
  RelationDistribution dist;
  bool any = false;
  for (const auto &label : labels_) {
    if (label == kRandom) continue;
    bool present = graph_.HasTriple(head, Relation(label), tail);
    dist.scores[label] = present ? 1.0 : 0.0;
    any = any || present;
  }
  dist.scores[std::string(kRandom)] = any ? 0.0 : 1.0;
  return dist;
}

std::vector<GeneratedTarget> GraphGenerator::Generate(const std::string &source,
                                                      const Relation &relation, int beam) {
  if (beam < 1) throw Error(ErrorCode::kInvalidArgument, "beam must be >= 1");
  // r^-1 asks for heads of (., r, source): the backward index of r.
  const Relation base(relation.name);
  auto neighbors = graph_.Neighbors(source, base,
                                    relation.inverted ? Direction::kBackward : Direction::kForward);
  std::vector<GeneratedTarget> out;
  for (const auto &n : neighbors) {
    if (static_cast<int>(out.size()) == beam) break;
    if (n.node == source) continue;
    GeneratedTarget t;
    t.node = Concept{n.node, n.node};
    t.confidence = n.weight;
    t.rank = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(t));
  }
  double max_weight = out.empty() ? 0.0 : out.front().confidence;
  for (auto &t : out) t.confidence = max_weight > 0.0 ? t.confidence / max_weight : 1.0;
  return out;
}

RelationDistribution MemoClassifier::Classify(const std::string &head, const std::string &tail) {
  auto key = std::make_pair(head, tail);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  RelationDistribution dist = inner_.Classify(head, tail);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::move(key), std::move(dist)).first->second;
}

std::vector<GeneratedTarget> MemoGenerator::Generate(const std::string &source,
                                                     const Relation &relation, int beam) {
  auto key = std::make_tuple(source, relation, beam);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto targets = inner_.Generate(source, relation, beam);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::move(key), std::move(targets)).first->second;
}

}  // namespace kpath
