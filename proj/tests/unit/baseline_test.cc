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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kpath/baseline.h"
#include "kpath/error.h"
#include "support/oracles.h"

namespace kpath {
namespace {

Triple T(const std::string &h, const std::string &r, const std::string &t) {
  return Triple{Concept{h, h}, Relation(r), Concept{t, t}, 1.0};
}

Subgraph Manual(std::vector<Triple> edges) {
  Subgraph sub;
  std::set<std::string> nodes;
  for (const auto &e : edges) {
    nodes.insert(e.head.normalized);
    nodes.insert(e.tail.normalized);
  }
  sub.nodes.assign(nodes.begin(), nodes.end());
  sub.edges = std::move(edges);
  return sub;
}

ConceptPair Pair(const std::string &a, const std::string &b) {
  return ConceptPair{Concept{a, a}, Concept{b, b}};
}

TEST_CASE("pagerank on a ring is uniform") {
  auto sub = Manual({T("a", "IsA", "b"), T("b", "IsA", "c"), T("c", "IsA", "d"),
                     T("d", "IsA", "e"), T("e", "IsA", "a")});
  auto pr = PageRank(sub);
  double total = 0;
  for (const auto &[n, v] : pr) {
    CHECK(std::abs(v - 0.2) <= 1e-6);
    total += v;
  }
  CHECK(std::abs(total - 1.0) <= 1e-9);
}

TEST_CASE("pagerank on a star matches the closed form") {
  auto sub = Manual({T("hub", "IsA", "x"), T("hub", "HasA", "y"), T("z", "AtLocation", "hub")});
  auto pr = PageRank(sub, 0.85, 1e-12, 1000);
  auto [c, l] = testing::StarPageRank(3);
  CHECK(std::abs(pr["hub"] - c) <= 1e-6);
  for (const char *leaf : {"x", "y", "z"}) CHECK(std::abs(pr[leaf] - l) <= 1e-6);
}

TEST_CASE("pagerank handles isolated nodes and parallel edges") {
  Subgraph sub = Manual({T("a", "IsA", "b"), T("a", "HasA", "b")});
  sub.nodes.push_back("lonely");
  std::sort(sub.nodes.begin(), sub.nodes.end());
  auto pr = PageRank(sub);
  double total = 0;
  for (const auto &[n, v] : pr) total += v;
  CHECK(std::abs(total - 1.0) <= 1e-9);
  CHECK(pr["a"] == doctest::Approx(pr["b"]));
  CHECK(pr["lonely"] < pr["a"]);
  CHECK_THROWS_AS(PageRank(Subgraph{}), Error);
}

TEST_CASE("closeness with Wasserman-Faust normalization") {
  auto sub = Manual({T("a", "IsA", "b"), T("b", "IsA", "c")});
  sub.nodes.push_back("d");
  std::sort(sub.nodes.begin(), sub.nodes.end());
  auto c = Closeness(sub);
  // b reaches 2 of 3 others at total distance 2: (2/2) * (2/3).
  CHECK(c["b"] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // a reaches 2 at total distance 3: (2/3) * (2/3).
  CHECK(c["a"] == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(c["d"] == 0.0);
}

KnowledgeGraph Load(const std::string &text) {
  std::istringstream in(text);
  return KnowledgeGraph::Load(in, RelationInventory::Baseline());
}

TEST_CASE("subgraph of shortest paths plus one-hop context") {
  auto g = Load(
      "ReceivesAction\twaste\trecycle\n"
      "RelatedTo\tenvironmental_protection\trecycle\n"
      "IsA\trecycle\tprocess\n"
      "AtLocation\tprocess\tfactory\n"
      "IsA\tcar\tvehicle\n");
  auto sub = BuildSubgraph(g, {"waste", "environmental protection", "unicorn"});
  CHECK(sub.dropped_seeds == 1);
  CHECK(sub.seeds == std::vector<std::string>{"environmental protection", "waste"});
  REQUIRE(sub.connections.size() == 1);
  CHECK(sub.connections[0].distance == 2);
  CHECK(sub.connections[0].edges.size() == 2);
  CHECK(sub.HasNode("recycle"));
  CHECK(sub.HasNode("process"));  // one hop from recycle
  CHECK_FALSE(sub.HasNode("factory"));
  CHECK_FALSE(sub.HasNode("car"));
  CHECK_THROWS_AS(BuildSubgraph(g, {"unicorn"}), Error);
  CHECK_THROWS_AS(BuildSubgraph(g, {}), Error);

  auto pr = PageRank(sub);
  auto cl = Closeness(sub);
  auto paths = RankPaths(sub, Pair("waste", "environmental protection"), {pr, cl}, 3, 5);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].Key() == "waste|ReceivesAction|recycle|RelatedTo^-1|environmental protection");
  CHECK(paths[0].origin == PathOrigin::kStatic);
  CHECK(paths[0].terminal_similarity == 1.0);
  REQUIRE(paths[0].score.has_value());
  double expected = (pr["waste"] * cl["waste"] + pr["recycle"] * cl["recycle"] +
                     pr["environmental protection"] * cl["environmental protection"]) /
                    3.0;
  CHECK(*paths[0].score == doctest::Approx(expected).epsilon(1e-12));
  auto by_pr = RankPaths(sub, Pair("waste", "environmental protection"), {pr, cl}, 3, 5,
                         PathScoring::kMeanPageRank);
  CHECK(*by_pr[0].score ==
        doctest::Approx((pr["waste"] + pr["recycle"] + pr["environmental protection"]) / 3.0));
  CHECK(RankPaths(sub, Pair("waste", "environmental protection"), {pr, cl}, 1, 5).empty());
  CHECK_THROWS_AS(RankPaths(sub, Pair("waste", "car"), {pr, cl}, 3, 5), Error);
}

TEST_CASE("path scoring names") {
  CHECK(ParsePathScoring("mean-product") == PathScoring::kMeanProduct);
  CHECK(ParsePathScoring("mean-pagerank") == PathScoring::kMeanPageRank);
  CHECK(ParsePathScoring("mean-closeness") == PathScoring::kMeanCloseness);
  CHECK_THROWS_AS(ParsePathScoring("max"), Error);
}

class TableClassifier : public RelationClassifier {
 public:
  TableClassifier() : labels_(RelationInventory::Cn13().ClassifierLabels()) {}
  RelationDistribution Classify(const std::string &h, const std::string &t) override {
    RelationDistribution d;
    if (h == "environmental protection" && t == "recycle") d.scores["HasSubevent"] = 0.93;
    if (h == "a" && t == "b") d.scores["IsA"] = 0.5;
    return d;
  }
  const std::vector<std::string> &labels() const override { return labels_; }

 private:
  std::vector<std::string> labels_;
};

TEST_CASE("vague relations are replaced when the classifier is confident") {
  KnowledgePath p;
  p.hops = {Hop{"waste", Relation("ReceivesAction"), "recycle", 1.0},
            Hop{"recycle", Relation("RelatedTo", true), "environmental protection", 1.0}};
  KnowledgePath q;
  q.hops = {Hop{"a", Relation("HasContext"), "b", 1.0}};
  TableClassifier c;
  VagueReplacementStats stats;
  auto out = ReplaceVague({p, q}, c, 0.9, &stats);
  CHECK(out[0].hops[1].relation == Relation("HasSubevent", true));
  CHECK(out[0].hops[0].relation == Relation("ReceivesAction"));
  CHECK(out[1].hops[0].relation == Relation("HasContext"));
  CHECK(stats.related_to == 1);
  CHECK(stats.related_to_replaced == 1);
  CHECK(stats.has_context == 1);
  CHECK(stats.has_context_replaced == 0);
}

// Property: seed distances equal BFS distances, and every recorded edge lies
// on a shortest path between its seeds.
TEST_CASE("shortest-path edges agree with a BFS oracle") {
  std::mt19937_64 rng(17);
  auto rels = RelationInventory::Cn13().ChainRelations();
  for (int round = 0; round < 25; ++round) {
    auto raw = testing::RandomRawGraph(rng, 60, 90, rels);
    auto graph = KnowledgeGraph::FromTriples(testing::ToTriples(raw), RelationInventory::Cn13());
    auto nodes = testing::RawNodes(raw);
    std::vector<std::string> list(nodes.begin(), nodes.end());
    std::vector<std::string> seeds;
    for (int k = 0; k < 4; ++k) seeds.push_back(list[rng() % list.size()]);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    if (!graph.HasConcept(seeds[0])) continue;
    std::vector<std::string> present;
    for (const auto &s : seeds) {
      if (graph.HasConcept(s)) present.push_back(s);
    }
    if (present.empty()) continue;
    auto sub = BuildSubgraph(graph, present);
    for (const auto &conn : sub.connections) {
      auto da = testing::BfsDistances(raw, conn.a);
      auto db = testing::BfsDistances(raw, conn.b);
      CHECK(conn.distance == da[conn.b]);
      for (size_t e : conn.edges) {
        const auto &u = sub.edges[e].head.normalized;
        const auto &v = sub.edges[e].tail.normalized;
        bool on_path = da[u] + 1 + db[v] == conn.distance || da[v] + 1 + db[u] == conn.distance;
        CHECK(on_path);
      }
      if (conn.distance > 0 && conn.distance <= 3) {
        NodeScores none;
        auto paths = RankPaths(sub, Pair(conn.a, conn.b), none, conn.distance, 1000);
        REQUIRE_FALSE(paths.empty());
        for (const auto &p : paths) CHECK(p.hops.size() >= static_cast<size_t>(conn.distance));
        CHECK(std::any_of(paths.begin(), paths.end(), [&](const KnowledgePath &p) {
          return p.hops.size() == static_cast<size_t>(conn.distance);
        }));
      }
    }
  }
}

}  // namespace
}  // namespace kpath
