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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kpath/error.h"
#include "kpath/result_io.h"
#include "kpath/runner.h"

namespace kpath {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kDir = KPATH_FIXTURES;

fs::path Tmp(const std::string &name) {
  auto dir = fs::temp_directory_path() / "kpath_runner_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Options Intro(const std::string &out) {
  return {{"graph", kDir + "/intro_graph.tsv"},
          {"inventory", kDir + "/intro_inventory.txt"},
          {"embeddings", kDir + "/intro_vectors.txt"},
          {"corpus", kDir + "/intro_corpus.jsonl"},
          {"out", Tmp(out).string()}};
}

TEST_CASE("connect writes results and statistics") {
  auto opts = Intro("connect.jsonl");
  auto s = RunConnect(opts);
  CHECK(s.items == 3);
  CHECK(s.linked == 3);
  CHECK(s.failed == 0);
  std::ifstream in(opts["out"]);
  auto records = ReadResults(in);
  REQUIRE(records.size() == 3);
  CHECK(records[0].pair_id == "car#0");
  CHECK(records[0].result.verdict == Verdict::kDirect);
  auto stats = json::parse(Slurp(opts["out"] + ".stats.json"));
  CHECK(stats["direct"] == 1);
  CHECK(stats["multihop"] == 2);
  CHECK_FALSE(fs::exists(opts["out"] + ".failures.jsonl"));
}

TEST_CASE("classifier-only and generator-only methods") {
  auto cor = Intro("cor.jsonl");
  cor["method"] = "classifier";
  auto s = RunConnect(cor);
  CHECK(s.linked == 1);
  auto com = Intro("com.jsonl");
  com["method"] = "generator";
  auto g = RunConnect(com);
  CHECK(g.linked == 3);
  std::ifstream in(com["out"]);
  auto records = ReadResults(in);
  CHECK(records[0].result.verdict == Verdict::kMultihop);
  auto bad = Intro("bad.jsonl");
  bad["method"] = "magic";
  CHECK_THROWS_AS(RunConnect(bad), Error);
}

TEST_CASE("empty corpus gives empty output") {
  std::ofstream(Tmp("empty_corpus.jsonl")).close();
  auto opts = Intro("empty.jsonl");
  opts["corpus"] = Tmp("empty_corpus.jsonl").string();
  auto s = RunConnect(opts);
  CHECK(s.items == 0);
  CHECK(Slurp(opts["out"]).empty());
}

TEST_CASE("configuration errors") {
  auto opts = Intro("x.jsonl");
  opts["bogus"] = "1";
  CHECK_THROWS_AS(RunConnect(opts), Error);
  opts = Intro("x.jsonl");
  opts["threshold"] = "1.5";
  CHECK_THROWS_AS(RunConnect(opts), Error);
  opts = Intro("x.jsonl");
  opts["beam"] = "ten";
  CHECK_THROWS_AS(RunConnect(opts), Error);
  opts = Intro("x.jsonl");
  opts["graph"] = "/nonexistent.tsv";
  try {
    RunConnect(opts);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  opts = Intro("x.jsonl");
  opts.erase("embeddings");
  CHECK_THROWS_AS(RunConnect(opts), Error);
  opts = Intro("x.jsonl");
  opts["backend"] = "remote";
  CHECK_THROWS_AS(RunConnect(opts), Error);  // no URL
}

TEST_CASE("options files") {
  {
    std::ofstream f(Tmp("run.conf"));
    f << "# settings\ngraph = a.tsv\nsim-gate = 0.6  # comment\n\n";
  }
  auto opts = LoadOptionsFile(Tmp("run.conf").string());
  CHECK(opts["graph"] == "a.tsv");
  CHECK(opts["sim_gate"] == "0.6");
  {
    std::ofstream f(Tmp("bad.conf"));
    f << "no equals sign\n";
  }
  CHECK_THROWS_AS(LoadOptionsFile(Tmp("bad.conf").string()), Error);
}

TEST_CASE("static baseline with vague-relation replacement") {
  Options opts = {{"graph", kDir + "/baseline_graph.tsv"},
                  {"corpus", kDir + "/intro_corpus.jsonl"},
                  {"top_k", "2"},
                  {"out", Tmp("baseline.jsonl").string()}};
  auto s = RunBaseline(opts);
  CHECK(s.items == 1);
  CHECK(s.linked == 1);
  std::string plain = Slurp(opts["out"]);
  CHECK(plain.find("\"origin\":\"static\"") != std::string::npos);
  CHECK(plain.find("RelatedTo") != std::string::npos);

  opts["replace_vague"] = "true";
  opts["out"] = Tmp("baseline_cn.jsonl").string();
  RunBaseline(opts);
  std::ifstream in(opts["out"]);
  auto records = ReadResults(in);
  REQUIRE(records.size() == 1);
  REQUIRE(records[0].result.paths.size() == 2);
  for (const auto &p : records[0].result.paths) {
    REQUIRE(p.hops.size() == 2);
    CHECK(p.hops[0].relation == Relation("ReceivesAction"));
    CHECK(p.hops[1].relation == Relation("HasSubevent", true));
  }
  auto stats = json::parse(Slurp(opts["out"] + ".stats.json"));
  CHECK(stats["related_to"] == 1);
  CHECK(stats["related_to_replaced"] == 1);
}

TEST_CASE("evaluate, stats, random class and kappa") {
  auto connect = Intro("eval_connect.jsonl");
  RunConnect(connect);

  Options eval = {{"setting", "c"},
                  {"corpus", kDir + "/intro_corpus.jsonl"},
                  {"embeddings", kDir + "/intro_vectors.txt"},
                  {"results", "CONN=" + connect["out"]},
                  {"out", Tmp("eval.json").string()}};
  auto s = RunEvaluate(eval);
  CHECK(s.items == 1);
  auto report = json::parse(Slurp(eval["out"]));
  // The gold linearization repeats the shared middle concept.
  CHECK(report["methods"]["CONN"]["cosim"].get<double>() > 0.99);
  CHECK(report["methods"]["CONN"]["greedy_f1"].get<double>() == doctest::Approx(1.0));

  eval["setting"] = "a";
  eval["graph"] = kDir + "/intro_graph.tsv";
  eval["inventory"] = kDir + "/intro_inventory.txt";
  CHECK_NOTHROW(RunEvaluate(eval));
  eval["setting"] = "b";
  CHECK_NOTHROW(RunEvaluate(eval));

  std::ofstream(Tmp("no_gold.jsonl")) << "{\"id\": \"x\", \"s1\": \"a\", \"s2\": \"b\"}\n";
  eval["setting"] = "c";
  eval["corpus"] = Tmp("no_gold.jsonl").string();
  try {
    RunEvaluate(eval);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingData);
  }

  Options stats = {{"results", "CONN=" + connect["out"]}, {"out", Tmp("stats.txt").string()}};
  RunStats(stats);
  std::string table = Slurp(stats["out"]);
  CHECK(table.find("linked pairs") != std::string::npos);
  stats["format"] = "json";
  stats["out"] = Tmp("stats.json").string();
  RunStats(stats);
  auto j = json::parse(Slurp(stats["out"]));
  CHECK(j["CONN"]["linked_pairs"] == 3);
  CHECK(j["CONN"]["avg_hops"].get<double>() == doctest::Approx(4.0 / 3.0));

  {
    std::ofstream g(Tmp("ring.tsv"));
    for (int i = 0; i < 30; ++i) g << "IsA\tn" << i << "\tn" << (i + 1) % 30 << "\n";
  }
  Options rc = {{"graph", Tmp("ring.tsv").string()}, {"n", "10"}, {"seed", "5"},
                {"out", Tmp("random.jsonl").string()}};
  CHECK(RunRandomClass(rc).items == 10);
  std::string first = Slurp(rc["out"]);
  RunRandomClass(rc);
  CHECK(Slurp(rc["out"]) == first);
  rc["n"] = "3";
  CHECK_THROWS_AS(RunRandomClass(rc), Error);

  Options kappa = {{"annotations", kDir + "/annotations.csv"}, {"out", Tmp("kappa.json").string()}};
  CHECK(RunKappa(kappa).items == 3);
  auto k = json::parse(Slurp(kappa["out"]));
  CHECK(k["best_model_kappa"].get<double>() < 1.0);
}

}  // namespace
}  // namespace kpath
