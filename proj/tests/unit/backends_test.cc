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

#include <atomic>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "kpath/backends.h"
#include "kpath/error.h"

namespace kpath {
namespace {

KnowledgeGraph Graph() {
  std::istringstream in(
      "UsedFor\toven\tbaking\t2\n"
      "UsedFor\toven\troasting\t1\n"
      "UsedFor\tstove\tbaking\t0.5\n"
      "AtLocation\toven\tkitchen\n"
      "HasA\toven\tdoor\n");
  return KnowledgeGraph::Load(in, RelationInventory::Cn13());
}

TEST_CASE("graph classifier") {
  auto g = Graph();
  GraphClassifier c(g);
  CHECK(c.labels().size() == 14);
  auto d = c.Classify("oven", "baking");
  CHECK(d.Score("UsedFor") == 1.0);
  CHECK(d.Score("Random") == 0.0);
  CHECK(d.Score("IsA") == 0.0);
  auto none = c.Classify("baking", "oven");
  CHECK(none.Score("Random") == 1.0);
  CHECK(none.Score("UsedFor") == 0.0);
  CHECK(none.scores.size() == 14);
}

TEST_CASE("graph generator") {
  auto g = Graph();
  GraphGenerator gen(g);
  auto fwd = gen.Generate("oven", Relation("UsedFor"), 10);
  REQUIRE(fwd.size() == 2);
  CHECK(fwd[0].node.normalized == "baking");
  CHECK(fwd[0].confidence == 1.0);
  CHECK(fwd[1].confidence == 0.5);
  CHECK(fwd[1].rank == 2);
  auto beam1 = gen.Generate("oven", Relation("UsedFor"), 1);
  CHECK(beam1.size() == 1);
  auto inv = gen.Generate("baking", Relation("UsedFor", true), 10);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0].node.normalized == "oven");
  CHECK(inv[1].node.normalized == "stove");
  CHECK(inv[1].confidence == 0.25);
  CHECK(gen.Generate("kitchen", Relation("UsedFor"), 10).empty());
  CHECK_THROWS_AS(gen.Generate("oven", Relation("UsedFor"), 0), Error);
  CHECK_NOTHROW(ValidateTargets(fwd, "oven", 10));
}

TEST_CASE("target validation") {
  auto t = [](const char *n, double c, int r) { return GeneratedTarget{Concept{n, n}, c, r}; };
  CHECK_THROWS_AS(ValidateTargets({t("a", 1, 1), t("b", 1, 2)}, "x", 1), Error);
  CHECK_THROWS_AS(ValidateTargets({t("a", 1, 2)}, "x", 5), Error);
  CHECK_THROWS_AS(ValidateTargets({t("a", 1.5, 1)}, "x", 5), Error);
  CHECK_THROWS_AS(ValidateTargets({t("a", 0.5, 1), t("b", 0.9, 2)}, "x", 5), Error);
  CHECK_THROWS_AS(ValidateTargets({t("x", 0.5, 1)}, "x", 5), Error);
  CHECK_NOTHROW(ValidateTargets({t("a", 0.9, 1), t("b", 0.9, 2)}, "x", 5));
}

// Exhaustive agreement with direct lookups on the small fixture.
TEST_CASE("oracle backends agree with graph lookups") {
  auto g = Graph();
  GraphClassifier c(g);
  GraphGenerator gen(g);
  for (const auto &h : g.vocab()) {
    for (const auto &t : g.vocab()) {
      auto d = c.Classify(h, t);
      bool any = false;
      for (const auto &rel : RelationInventory::Cn13().ChainRelations()) {
        const bool present = g.HasTriple(h, Relation(rel), t);
        any |= present;
        CHECK(d.Score(rel) == (present ? 1.0 : 0.0));
        bool generated = false;
        for (const auto &x : gen.Generate(h, Relation(rel), 10)) generated |= x.node.normalized == t;
        CHECK(generated == present);
        bool inverse = false;
        for (const auto &x : gen.Generate(t, Relation(rel, true), 10)) inverse |= x.node.normalized == h;
        CHECK(inverse == present);
      }
      CHECK(d.Score("Random") == (any ? 0.0 : 1.0));
    }
  }
}

class CountingGenerator : public TargetGenerator {
 public:
  std::vector<GeneratedTarget> Generate(const std::string &, const Relation &, int) override {
    ++calls;
    return {GeneratedTarget{Concept{"t", "t"}, 1.0, 1}};
  }
  std::atomic<int> calls{0};
};

TEST_CASE("memoization is shared across threads") {
  CountingGenerator inner;
  MemoGenerator memo(inner);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      for (int k = 0; k < 100; ++k) memo.Generate("s" + std::to_string(k % 5), Relation("IsA"), 3);
    });
  }
  for (auto &t : threads) t.join();
  CHECK(inner.calls <= 5 * 8);
  int before = inner.calls;
  memo.Generate("s1", Relation("IsA"), 3);
  CHECK(inner.calls == before);
  memo.Generate("s1", Relation("IsA", true), 3);
  CHECK(inner.calls == before + 1);

  auto g = Graph();
  GraphClassifier c(g);
  MemoClassifier mc(c);
  CHECK(mc.Classify("oven", "door").Score("HasA") == 1.0);
  CHECK(mc.labels() == c.labels());
}

}  // namespace
}  // namespace kpath
