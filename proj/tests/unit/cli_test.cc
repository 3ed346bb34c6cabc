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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = KPATH_CLI;
const std::string kDir = KPATH_FIXTURES;

fs::path Tmp(const std::string &name) {
  auto dir = fs::temp_directory_path() / "kpath_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

int Run(const std::string &args) {
  const std::string cmd = kCli + " " + args + " >" + Tmp("stdout.txt").string() + " 2>" +
                          Tmp("stderr.txt").string();
  int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string IntroFlags() {
  return " --graph " + kDir + "/intro_graph.tsv --inventory " + kDir +
         "/intro_inventory.txt --embeddings " + kDir + "/intro_vectors.txt --corpus " + kDir +
         "/intro_corpus.jsonl";
}

TEST_CASE("connect succeeds with exit code 0") {
  const auto out = Tmp("connect.jsonl");
  CHECK(Run("connect" + IntroFlags() + " --out " + out.string()) == 0);
  CHECK(Slurp(out).find("\"pair_id\":\"waste#0\"") != std::string::npos);
  CHECK(Run("connect" + IntroFlags() + " --out -") == 0);
  CHECK(Slurp(Tmp("stdout.txt")) == Slurp(out));
}

TEST_CASE("failed sentences give exit code 1") {
  const auto out = Tmp("dead.jsonl");
  CHECK(Run("connect" + IntroFlags() +
            " --backend remote --remote-url http://127.0.0.1:1 --retries 0 --timeout-ms 200 --out " +
            out.string()) == 1);
  CHECK(Slurp(out).empty());
  CHECK(fs::exists(out.string() + ".failures.jsonl"));
}

TEST_CASE("errors give exit code 2") {
  CHECK(Run("connect --graph /nonexistent.tsv --embeddings x --corpus y") == 2);
  CHECK(Slurp(Tmp("stderr.txt")).find("kpath:") != std::string::npos);
  CHECK(Run("connect" + IntroFlags() + " --beam zero --out -") == 2);

  std::ofstream(Tmp("no_gold.jsonl")) << "{\"id\": \"x\", \"s1\": \"a car\", \"s2\": \"b\"}\n";
  const auto results = Tmp("connect.jsonl");
  CHECK(Run("evaluate --setting c --corpus " + Tmp("no_gold.jsonl").string() + " --embeddings " +
            kDir + "/intro_vectors.txt --results CONN=" + results.string() + " --out -") == 2);
  CHECK(Slurp(Tmp("stderr.txt")).find("gold") != std::string::npos);
}

TEST_CASE("command-line errors are rejected") {
  CHECK(Run("") != 0);
  CHECK(Run("evaluate --results X=y") != 0);  // --setting is required
  CHECK(Run("evaluate --setting d") != 0);
}

TEST_CASE("flags override the configuration file") {
  const auto from_config = Tmp("from_config.jsonl");
  const auto from_flag = Tmp("from_flag.jsonl");
  fs::remove(from_config);
  fs::remove(from_flag);
  {
    std::ofstream f(Tmp("run.conf"));
    f << "# intro fixture\n"
      << "graph = " << kDir << "/intro_graph.tsv\n"
      << "inventory = " << kDir << "/intro_inventory.txt\n"
      << "embeddings = " << kDir << "/intro_vectors.txt\n"
      << "corpus = " << kDir << "/intro_corpus.jsonl\n"
      << "sim-gate = 0.7\n"
      << "out = " << from_config.string() << "\n";
  }
  CHECK(Run("--config " + Tmp("run.conf").string() + " connect") == 0);
  CHECK(fs::exists(from_config));
  CHECK(Run("--config " + Tmp("run.conf").string() + " connect --out " + from_flag.string()) == 0);
  CHECK(fs::exists(from_flag));
  CHECK(Slurp(from_flag) == Slurp(from_config));
}

TEST_CASE("stats prints the table") {
  const auto results = Tmp("connect.jsonl");
  REQUIRE(Run("connect" + IntroFlags() + " --out " + results.string()) == 0);
  CHECK(Run("stats --results CONN=" + results.string()) == 0);
  const std::string table = Slurp(Tmp("stdout.txt"));
  CHECK(table.find("linked pairs") != std::string::npos);
  CHECK(table.find("avg. hops") != std::string::npos);
}

}  // namespace
