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

#ifndef KPATH_BASELINE_H_
#define KPATH_BASELINE_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpath/backends.h"
#include "kpath/kg_store.h"
#include "kpath/pathfind.h"

namespace kpath {

// Shortest-path structure found between two seeds.
struct SeedConnection {
  std::string a;
  std::string b;
  int distance = -1;  // -1 when disconnected
  // Indices into Subgraph::edges of every edge on some shortest a-b path.
  std::vector<size_t> edges;
};

// Focused subgraph around a sentence pair's concepts.
struct Subgraph {
  std::vector<std::string> nodes;  // sorted
  std::vector<Triple> edges;       // sorted, unique
  std::vector<std::string> seeds;  // sorted
  std::vector<SeedConnection> connections;
  size_t dropped_seeds = 0;        // requested concepts absent from the graph

  bool HasNode(const std::string &n) const;
  // Undirected simple adjacency over `nodes` (neighbor indices, sorted).
  std::vector<std::vector<size_t>> Adjacency() const;
  size_t IndexOf(const std::string &n) const;
};

// Undirected view of a graph's (non-inverted) triples, built once and
// shared by every subgraph construction.
class UndirectedIndex {
 public:
  explicit UndirectedIndex(const KnowledgeGraph &graph);

  const KnowledgeGraph &graph() const { return graph_; }
  size_t size() const { return names_.size(); }
  // SIZE_MAX when absent.
  size_t Find(const std::string &node) const;
  const std::string &Name(size_t node) const { return names_[node]; }
  const std::vector<size_t> &Neighbors(size_t node) const { return adjacency_[node]; }
  // Indices into graph().triples() incident to the node.
  const std::vector<size_t> &Incident(size_t node) const { return incident_[node]; }
  // Triples joining u and v in either orientation.
  std::vector<size_t> Between(size_t u, size_t v) const;
  // BFS hop distances from `source`; -1 when unreachable.
  std::vector<int> Distances(size_t source) const;

 private:
  const KnowledgeGraph &graph_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> ids_;
  std::vector<std::vector<size_t>> adjacency_;
  std::vector<std::vector<size_t>> incident_;
};

// Builds G' = (V', E'): the seed concepts, every edge on a shortest path
// between any two seeds (direction-agnostic BFS), then every concept
// directly connected to a node of G' together with those edges.
// Throws when no seed is present in the graph.
Subgraph BuildSubgraph(const UndirectedIndex &index, const std::vector<std::string> &concepts);
Subgraph BuildSubgraph(const KnowledgeGraph &graph, const std::vector<std::string> &concepts);

// PageRank by power iteration on the undirected adjacency. Dangling mass is
// spread uniformly. Stops when the L1 change drops below eps.
std::map<std::string, double> PageRank(const Subgraph &sub, double damping = 0.85,
                                       double eps = 1e-8, int max_iter = 100);

// Normalized closeness (n_c - 1) / sum(d) within the node's component,
// scaled by (n_c - 1) / (n - 1). Isolated nodes score 0.
std::map<std::string, double> Closeness(const Subgraph &sub);

struct NodeScores {
  std::map<std::string, double> pagerank;
  std::map<std::string, double> closeness;
};

enum class PathScoring { kMeanProduct, kMeanPageRank, kMeanCloseness };

PathScoring ParsePathScoring(std::string_view text);

// Acyclic paths of at most max_hops edges of sub between pair.source and
// pair.target, scored by the mean of a per-node centrality value; the
// top_k by score (ties lexicographic) come back with origin = static.
std::vector<KnowledgePath> RankPaths(const Subgraph &sub, const ConceptPair &pair,
                                     const NodeScores &scores, int max_hops = 3,
                                     int top_k = 1,
                                     PathScoring scoring = PathScoring::kMeanProduct);

struct VagueReplacementStats {
  size_t related_to = 0;
  size_t related_to_replaced = 0;
  size_t has_context = 0;
  size_t has_context_replaced = 0;
};

// Relabels RelatedTo/HasContext hops with the classifier's best non-Random
// relation when it scores >= threshold. Topology is never changed.
std::vector<KnowledgePath> ReplaceVague(std::vector<KnowledgePath> paths,
                                        RelationClassifier &classifier, double threshold = 0.9,
                                        VagueReplacementStats *stats = nullptr);

}  // namespace kpath

#endif  // KPATH_BASELINE_H_
