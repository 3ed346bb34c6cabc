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

#include "kpath/baseline.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>

#include "kpath/error.h"

namespace kpath {
namespace {

constexpr size_t kAbsent = SIZE_MAX;

bool TripleLess(const Triple &a, const Triple &b) {
  if (a.head.normalized != b.head.normalized) return a.head.normalized < b.head.normalized;
  if (a.relation != b.relation) return a.relation < b.relation;
  return a.tail.normalized < b.tail.normalized;
}

bool TripleEqual(const Triple &a, const Triple &b) {
  return a.head == b.head && a.relation == b.relation && a.tail == b.tail;
}

std::vector<int> Bfs(const std::vector<std::vector<size_t>> &adjacency, size_t source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::deque<size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t v : adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

UndirectedIndex::UndirectedIndex(const KnowledgeGraph &graph) : graph_(graph) {
  names_ = graph.vocab();
  for (size_t i = 0; i < names_.size(); ++i) ids_.emplace(names_[i], i);
  adjacency_.resize(names_.size());
  incident_.resize(names_.size());
  const auto &triples = graph.triples();
  for (size_t i = 0; i < triples.size(); ++i) {
    const Triple &t = triples[i];
    if (t.relation.inverted) continue;
    size_t h = ids_.at(t.head.normalized), k = ids_.at(t.tail.normalized);
    adjacency_[h].push_back(k);
    adjacency_[k].push_back(h);
    incident_[h].push_back(i);
    incident_[k].push_back(i);
  }
  for (auto &list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

size_t UndirectedIndex::Find(const std::string &node) const {
  auto it = ids_.find(node);
  return it == ids_.end() ? kAbsent : it->second;
}

std::vector<size_t> UndirectedIndex::Between(size_t u, size_t v) const {
  std::vector<size_t> out;
  const auto &triples = graph_.triples();
  for (size_t i : incident_[u]) {
    const Triple &t = triples[i];
    if ((t.head.normalized == names_[u] && t.tail.normalized == names_[v]) ||
        (t.head.normalized == names_[v] && t.tail.normalized == names_[u])) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> UndirectedIndex::Distances(size_t source) const {
  return Bfs(adjacency_, source);
}

bool Subgraph::HasNode(const std::string &n) const {
  return std::binary_search(nodes.begin(), nodes.end(), n);
}

size_t Subgraph::IndexOf(const std::string &n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  if (it == nodes.end() || *it != n) return kAbsent;
  return static_cast<size_t>(it - nodes.begin());
}

std::vector<std::vector<size_t>> Subgraph::Adjacency() const {
  std::vector<std::vector<size_t>> adjacency(nodes.size());
  for (const auto &e : edges) {
    size_t h = IndexOf(e.head.normalized), t = IndexOf(e.tail.normalized);
    adjacency[h].push_back(t);
    adjacency[t].push_back(h);
  }
  for (auto &list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adjacency;
}

Subgraph BuildSubgraph(const UndirectedIndex &index, const std::vector<std::string> &concepts) {
  if (concepts.empty()) throw Error(ErrorCode::kInvalidArgument, "empty concept set");
  Subgraph sub;
  std::vector<size_t> seed_ids;
  for (const auto &c : concepts) {
    size_t id = index.Find(c);
    if (id == kAbsent) {
      ++sub.dropped_seeds;
      continue;
    }
    seed_ids.push_back(id);
  }
  std::sort(seed_ids.begin(), seed_ids.end());
  seed_ids.erase(std::unique(seed_ids.begin(), seed_ids.end()), seed_ids.end());
  if (seed_ids.empty()) {
    throw Error(ErrorCode::kMissingData, "none of the concepts occur in the graph");
  }

  const auto &triples = index.graph().triples();
  std::vector<std::vector<int>> dist;
  for (size_t s : seed_ids) dist.push_back(index.Distances(s));

  std::vector<char> in_core(index.size(), 0);
  std::vector<size_t> chosen;  // triple indices
  for (size_t s : seed_ids) in_core[s] = 1;

  struct PendingConnection {
    size_t a, b;
    int distance;
    std::vector<size_t> triples;
  };
  std::vector<PendingConnection> pending;

  for (size_t i = 0; i < seed_ids.size(); ++i) {
    for (size_t j = i + 1; j < seed_ids.size(); ++j) {
      const auto &ds = dist[i];
      const auto &dt = dist[j];
      const int d = ds[seed_ids[j]];
      PendingConnection conn{seed_ids[i], seed_ids[j], d, {}};
      if (d > 0) {
        // u -> v is a shortest-path step iff ds(u) + 1 + dt(v) == d.
        for (size_t u = 0; u < index.size(); ++u) {
          if (ds[u] < 0 || dt[u] < 0 || ds[u] + dt[u] != d) continue;
          in_core[u] = 1;
          for (size_t v : index.Neighbors(u)) {
            if (ds[v] == ds[u] + 1 && dt[v] >= 0 && ds[v] + dt[v] == d) {
              for (size_t t : index.Between(u, v)) {
                if (triples[t].relation.inverted) continue;
                conn.triples.push_back(t);
                chosen.push_back(t);
              }
            }
          }
        }
      }
      pending.push_back(std::move(conn));
    }
  }

  // One-hop expansion of every node gathered so far.
  std::vector<char> in_sub = in_core;
  for (size_t u = 0; u < index.size(); ++u) {
    if (!in_core[u]) continue;
    for (size_t t : index.Incident(u)) chosen.push_back(t);
    for (size_t v : index.Neighbors(u)) in_sub[v] = 1;
  }

  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (size_t t : chosen) sub.edges.push_back(triples[t]);
  std::sort(sub.edges.begin(), sub.edges.end(), TripleLess);
  sub.edges.erase(std::unique(sub.edges.begin(), sub.edges.end(), TripleEqual), sub.edges.end());

  for (size_t u = 0; u < index.size(); ++u) {
    if (in_sub[u]) sub.nodes.push_back(index.Name(u));
  }
  for (size_t s : seed_ids) sub.seeds.push_back(index.Name(s));
  std::sort(sub.nodes.begin(), sub.nodes.end());
  std::sort(sub.seeds.begin(), sub.seeds.end());

  auto edge_index = [&](size_t t) {
    auto it = std::lower_bound(sub.edges.begin(), sub.edges.end(), triples[t], TripleLess);
    return static_cast<size_t>(it - sub.edges.begin());
  };
  for (auto &p : pending) {
    SeedConnection conn;
    conn.a = index.Name(p.a);
    conn.b = index.Name(p.b);
    if (conn.b < conn.a) std::swap(conn.a, conn.b);
    conn.distance = p.distance;
    for (size_t t : p.triples) conn.edges.push_back(edge_index(t));
    std::sort(conn.edges.begin(), conn.edges.end());
    conn.edges.erase(std::unique(conn.edges.begin(), conn.edges.end()), conn.edges.end());
    sub.connections.push_back(std::move(conn));
  }
  return sub;
}

Subgraph BuildSubgraph(const KnowledgeGraph &graph, const std::vector<std::string> &concepts) {
  UndirectedIndex index(graph);
  return BuildSubgraph(index, concepts);
}

std::map<std::string, double> PageRank(const Subgraph &sub, double damping, double eps,
                                       int max_iter) {
  const size_t n = sub.nodes.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "pagerank on an empty subgraph");
  const auto adjacency = sub.Adjacency();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n), next(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (size_t u = 0; u < n; ++u) {
      if (adjacency[u].empty()) dangling += rank[u];
    }
    const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
    std::fill(next.begin(), next.end(), base);
    for (size_t u = 0; u < n; ++u) {
      if (adjacency[u].empty()) continue;
      const double share = damping * rank[u] / static_cast<double>(adjacency[u].size());
      for (size_t v : adjacency[u]) next[v] += share;
    }
    double change = 0.0;
    for (size_t u = 0; u < n; ++u) change += std::abs(next[u] - rank[u]);
    rank.swap(next);
    if (change < eps) break;
  }
  double total = 0.0;
  for (double r : rank) total += r;
  std::map<std::string, double> out;
  for (size_t u = 0; u < n; ++u) out[sub.nodes[u]] = rank[u] / total;
  return out;
}

std::map<std::string, double> Closeness(const Subgraph &sub) {
  const size_t n = sub.nodes.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "closeness on an empty subgraph");
  const auto adjacency = sub.Adjacency();
  std::map<std::string, double> out;
  for (size_t u = 0; u < n; ++u) {
    auto dist = Bfs(adjacency, u);
    long long total = 0;
    size_t reachable = 0;
    for (int d : dist) {
      if (d > 0) {
        total += d;
        ++reachable;
      }
    }
    double value = 0.0;
    if (total > 0 && n > 1) {
      value = static_cast<double>(reachable) / static_cast<double>(total);
      value *= static_cast<double>(reachable) / static_cast<double>(n - 1);
    }
    out[sub.nodes[u]] = value;
  }
  return out;
}

PathScoring ParsePathScoring(std::string_view text) {
  if (text == "mean-product" || text.empty()) return PathScoring::kMeanProduct;
  if (text == "mean-pagerank") return PathScoring::kMeanPageRank;
  if (text == "mean-closeness") return PathScoring::kMeanCloseness;
  throw Error(ErrorCode::kInvalidArgument, "unknown path scoring '" + std::string(text) + "'");
}

std::vector<KnowledgePath> RankPaths(const Subgraph &sub, const ConceptPair &pair,
                                     const NodeScores &scores, int max_hops, int top_k,
                                     PathScoring scoring) {
  const std::string &source = pair.source.normalized;
  const std::string &target = pair.target.normalized;
  if (!sub.HasNode(source) || !sub.HasNode(target)) {
    throw Error(ErrorCode::kInvalidArgument, "rank_paths: pair concepts are not in the subgraph");
  }
  if (max_hops < 1 || top_k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "rank_paths: max_hops and top_k must be >= 1");
  }
  // node -> (neighbor, edge index)
  std::map<std::string, std::vector<std::pair<std::string, size_t>>> incident;
  for (size_t i = 0; i < sub.edges.size(); ++i) {
    const Triple &e = sub.edges[i];
    incident[e.head.normalized].push_back({e.tail.normalized, i});
    incident[e.tail.normalized].push_back({e.head.normalized, i});
  }
  auto node_value = [&](const std::string &node) {
    auto get = [](const std::map<std::string, double> &m, const std::string &k) {
      auto it = m.find(k);
      return it == m.end() ? 0.0 : it->second;
    };
    switch (scoring) {
      case PathScoring::kMeanPageRank: return get(scores.pagerank, node);
      case PathScoring::kMeanCloseness: return get(scores.closeness, node);
      case PathScoring::kMeanProduct: break;
    }
    return get(scores.pagerank, node) * get(scores.closeness, node);
  };

  std::vector<KnowledgePath> paths;
  std::vector<std::string> nodes{source};
  std::vector<Hop> hops;
  std::function<void()> dfs = [&]() {
    const std::string u = nodes.back();  // nodes grows below
    if (u == target) {
      KnowledgePath p;
      p.hops = hops;
      p.origin = PathOrigin::kStatic;
      p.terminal_similarity = 1.0;
      double sum = 0.0;
      for (const auto &n : nodes) sum += node_value(n);
      p.score = sum / static_cast<double>(nodes.size());
      paths.push_back(std::move(p));
      return;
    }
    if (static_cast<int>(hops.size()) == max_hops) return;
    for (const auto &[v, edge] : incident[u]) {
      if (std::find(nodes.begin(), nodes.end(), v) != nodes.end()) continue;
      const Triple &e = sub.edges[edge];
      const bool forward = e.head.normalized == u;
      Relation rel = forward ? e.relation : e.relation.Inverse();
      nodes.push_back(v);
      hops.push_back(Hop{u, rel, v, e.weight});
      dfs();
      hops.pop_back();
      nodes.pop_back();
    }
  };
  dfs();

  std::sort(paths.begin(), paths.end(), [](const KnowledgePath &a, const KnowledgePath &b) {
    if (*a.score != *b.score) return *a.score > *b.score;
    auto na = a.Nodes(), nb = b.Nodes();
    if (na != nb) return na < nb;
    for (size_t i = 0; i < std::min(a.hops.size(), b.hops.size()); ++i) {
      if (a.hops[i].relation != b.hops[i].relation) return a.hops[i].relation < b.hops[i].relation;
    }
    return a.hops.size() < b.hops.size();
  });
  if (paths.size() > static_cast<size_t>(top_k)) paths.resize(top_k);
  return paths;
}

std::vector<KnowledgePath> ReplaceVague(std::vector<KnowledgePath> paths,
                                        RelationClassifier &classifier, double threshold,
                                        VagueReplacementStats *stats) {
  VagueReplacementStats local;
  VagueReplacementStats &st = stats != nullptr ? *stats : local;
  const auto &labels = classifier.labels();
  for (auto &path : paths) {
    for (auto &hop : path.hops) {
      if (!hop.relation.IsVague()) continue;
      const bool related = hop.relation.name == kRelatedTo;
      ++(related ? st.related_to : st.has_context);
      // Classify in the orientation the triple is stored.
      const std::string &head = hop.relation.inverted ? hop.target : hop.source;
      const std::string &tail = hop.relation.inverted ? hop.source : hop.target;
      RelationDistribution dist = classifier.Classify(head, tail);
      const std::string *best = nullptr;
      double best_score = -1.0;
      for (const auto &label : labels) {
        if (label == kRandom) continue;
        double s = dist.Score(label);
        if (s > best_score) {
          best_score = s;
          best = &label;
        }
      }
      if (best != nullptr && best_score >= threshold) {
        hop.relation.name = *best;
        ++(related ? st.related_to_replaced : st.has_context_replaced);
      }
    }
  }
  return paths;
}

}  // namespace kpath
