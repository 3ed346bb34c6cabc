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

#ifndef KPATH_BACKENDS_H_
#define KPATH_BACKENDS_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/kg_store.h"
#include "kpath/relation.h"

namespace kpath {

// Independent per-label probabilities (sigmoid semantics; they need not sum
// to one). Keys are the classifier labels, Random included.
struct RelationDistribution {
  std::map<std::string, double> scores;

  double Score(std::string_view label) const;
};

struct GeneratedTarget {
  Concept node;
  double confidence = 0.0;
  int rank = 0;  // 1-based
};

// Predicts which relations hold between an ordered concept pair.
class RelationClassifier {
 public:
  virtual ~RelationClassifier() = default;
  virtual RelationDistribution Classify(const std::string &head,
                                        const std::string &tail) = 0;
  // Labels every distribution carries, Random last.
  virtual const std::vector<std::string> &labels() const = 0;
};

// Generates ranked target concepts for (source, relation). An inverted
// relation asks for heads h with (h, r, source).
class TargetGenerator {
 public:
  virtual ~TargetGenerator() = default;
  virtual std::vector<GeneratedTarget> Generate(const std::string &source,
                                                const Relation &relation, int beam) = 0;
};

// Checks the shape invariants every generator response must satisfy:
// at most `beam` entries, ranks 1..k without gaps, confidences in [0, 1]
// and non-increasing, no entry equal to the source. Throws
// Error(kBackendProtocol) on violation.
void ValidateTargets(const std::vector<GeneratedTarget> &targets, const std::string &source,
                     int beam);

// Answers from graph membership: 1.0 for every relation r with
// (head, r, tail) in the graph, Random = 1.0 when there is none.
class GraphClassifier : public RelationClassifier {
 public:
  explicit GraphClassifier(const KnowledgeGraph &graph);
  GraphClassifier(const KnowledgeGraph &graph, const RelationInventory &labels);

  RelationDistribution Classify(const std::string &head, const std::string &tail) override;
  const std::vector<std::string> &labels() const override { return labels_; }

 private:
  const KnowledgeGraph &graph_;
  std::vector<std::string> labels_;
};

// Returns graph neighbors ordered by weight then name; confidence is
// weight / max weight in the returned list.
class GraphGenerator : public TargetGenerator {
 public:
  explicit GraphGenerator(const KnowledgeGraph &graph) : graph_(graph) {}

  std::vector<GeneratedTarget> Generate(const std::string &source, const Relation &relation,
                                        int beam) override;

 private:
  const KnowledgeGraph &graph_;
};

// Thread-safe memo tables in front of another backend. Results are
// identical to the wrapped backend's.
class MemoClassifier : public RelationClassifier {
 public:
  explicit MemoClassifier(RelationClassifier &inner) : inner_(inner) {}
  RelationDistribution Classify(const std::string &head, const std::string &tail) override;
  const std::vector<std::string> &labels() const override { return inner_.labels(); }

 private:
  RelationClassifier &inner_;
  std::mutex mu_;
  std::map<std::pair<std::string, std::string>, RelationDistribution> cache_;
};

class MemoGenerator : public TargetGenerator {
 public:
  explicit MemoGenerator(TargetGenerator &inner) : inner_(inner) {}
  std::vector<GeneratedTarget> Generate(const std::string &source, const Relation &relation,
                                        int beam) override;

 private:
  TargetGenerator &inner_;
  std::mutex mu_;
  std::map<std::tuple<std::string, Relation, int>, std::vector<GeneratedTarget>> cache_;
};

}  // namespace kpath

#endif  // KPATH_BACKENDS_H_
