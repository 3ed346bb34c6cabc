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

#include <random>
#include <sstream>

#include "doctest.h"
#include "kpath/corpus.h"
#include "kpath/error.h"
#include "kpath/result_io.h"

namespace kpath {
namespace {

TEST_CASE("corpus loading") {
  std::istringstream in(
      "{\"id\": \"a\", \"s1\": \"x\", \"s2\": \"y\"}\n\n"
      "{\"id\": \"b\", \"s1\": \"x\", \"s2\": \"y\", \"gold_implicit\": \"z\","
      " \"gold_path\": [[\"h\", \"IsA\", \"t\"], {\"head\": \"t\", \"relation\": \"UsedFor^-1\","
      " \"tail\": \"u\"}]}\n");
  auto c = LoadCorpus(in);
  REQUIRE(c.size() == 2);
  CHECK_FALSE(c[0].gold_implicit.has_value());
  CHECK(*c[1].gold_implicit == "z");
  REQUIRE(c[1].gold_path->size() == 2);
  CHECK((*c[1].gold_path)[1].relation == Relation("UsedFor", true));

  std::istringstream dup("{\"id\": \"a\", \"s1\": \"x\", \"s2\": \"y\"}\n"
                         "{\"id\": \"a\", \"s1\": \"x\", \"s2\": \"y\"}\n");
  CHECK_THROWS_AS(LoadCorpus(dup), Error);
  std::istringstream blank("{\"id\": \"a\", \"s1\": \" \", \"s2\": \"y\"}\n");
  CHECK_THROWS_AS(LoadCorpus(blank), Error);
  std::istringstream missing("{\"id\": \"a\", \"s1\": \"x\"}\n");
  CHECK_THROWS_AS(LoadCorpus(missing), Error);
  std::istringstream empty("");
  CHECK(LoadCorpus(empty).empty());
}

ResultRecord RandomRecord(std::mt19937_64 &rng, int k) {
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<std::string> names = {"car", "engine", "oven", "environmental protection"};
  auto pick = [&] { return names[rng() % names.size()]; };
  ResultRecord rec;
  rec.sentence_id = "s" + std::to_string(k / 3);
  rec.pair_id = rec.sentence_id + "#" + std::to_string(k % 3);
  auto &r = rec.result;
  std::string a = pick(), b = pick();
  r.pair = ConceptPair{Concept{a, a}, Concept{b, b}};
  switch (rng() % 3) {
    case 0:
      r.verdict = Verdict::kDirect;
      r.links = {DirectLink{r.pair, "HasA", u(rng)}};
      r.discarded_multihop = rng() % 4;
      break;
    case 1: {
      r.verdict = Verdict::kMultihop;
      KnowledgePath p;
      p.origin = rng() % 2 ? PathOrigin::kGenerator : PathOrigin::kStatic;
      p.direction = rng() % 2 ? PathDirection::kForward : PathDirection::kBackward;
      p.hops = {Hop{a, Relation("UsedFor", rng() % 2 == 0), pick(), u(rng)},
                Hop{"x", Relation("IsA"), b, u(rng)}};
      p.terminal_similarity = u(rng);
      if (p.origin == PathOrigin::kStatic) p.score = u(rng);
      r.paths = {p};
      break;
    }
    default:
      break;
  }
  return rec;
}

// Property: write -> read -> write is the identity on random records.
TEST_CASE("results round trip") {
  std::mt19937_64 rng(21);
  std::vector<ResultRecord> records;
  for (int k = 0; k < 200; ++k) records.push_back(RandomRecord(rng, k));
  std::ostringstream first;
  WriteResults(first, records);
  std::istringstream in(first.str());
  auto back = ReadResults(in);
  REQUIRE(back.size() == records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    const auto &x = records[i].result;
    const auto &y = back[i].result;
    CHECK(back[i].pair_id == records[i].pair_id);
    CHECK(y.pair == x.pair);
    CHECK(y.verdict == x.verdict);
    CHECK(y.links.size() == x.links.size());
    for (size_t l = 0; l < x.links.size(); ++l) {
      CHECK(y.links[l].probability == x.links[l].probability);
    }
    REQUIRE(y.paths.size() == x.paths.size());
    for (size_t p = 0; p < x.paths.size(); ++p) {
      CHECK(y.paths[p].hops == x.paths[p].hops);
      CHECK(y.paths[p].origin == x.paths[p].origin);
      CHECK(y.paths[p].direction == x.paths[p].direction);
      CHECK(y.paths[p].score == x.paths[p].score);
      CHECK(y.paths[p].terminal_similarity == x.paths[p].terminal_similarity);
    }
    CHECK(y.discarded_multihop == x.discarded_multihop);
  }
  std::ostringstream second;
  WriteResults(second, back);
  CHECK(second.str() == first.str());
}

TEST_CASE("output schema") {
  ResultRecord rec;
  rec.pair_id = "p#0";
  rec.sentence_id = "p";
  rec.result.pair = ConceptPair{Concept{"car", "car"}, Concept{"engine", "engine"}};
  rec.result.verdict = Verdict::kDirect;
  rec.result.links = {DirectLink{rec.result.pair, "HasA", 1.0}};
  CHECK(ToJson(rec).dump() ==
        "{\"pair_id\":\"p#0\",\"sentence_id\":\"p\",\"c_s\":\"car\",\"c_t\":\"engine\","
        "\"verdict\":\"Direct\",\"links\":[{\"relation\":\"HasA\",\"prob\":1.0}],\"paths\":[],"
        "\"discarded_multihop\":0}");
  std::istringstream bad("{\"pair_id\": 1}\n");
  CHECK_THROWS_AS(ReadResults(bad), Error);
  std::istringstream verdict(
      "{\"pair_id\":\"a\",\"sentence_id\":\"a\",\"c_s\":\"x\",\"c_t\":\"y\",\"verdict\":\"?\"}\n");
  CHECK_THROWS_AS(ReadResults(verdict), Error);
}

}  // namespace
}  // namespace kpath
