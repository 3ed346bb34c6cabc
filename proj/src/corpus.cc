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

#include "kpath/corpus.h"

#include <fstream>
#include <set>

#include "json.hpp"
#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {
namespace {

using nlohmann::json;

GoldTriple ParseGoldTriple(const json &j, size_t line_no) {
  auto fail = [&](const std::string &what) {
    return Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
  };
  if (j.is_array()) {
    if (j.size() != 3) throw fail("gold_path triple must have 3 elements");
    return GoldTriple{j[0].get<std::string>(), Relation::Parse(j[1].get<std::string>()),
                      j[2].get<std::string>()};
  }
  if (j.is_object()) {
    return GoldTriple{j.at("head").get<std::string>(),
                      Relation::Parse(j.at("relation").get<std::string>()),
                      j.at("tail").get<std::string>()};
  }
  throw fail("gold_path entries must be arrays or objects");
}

}  // namespace

std::vector<SentencePair> LoadCorpus(std::istream &in) {
  std::vector<SentencePair> corpus;
  std::set<std::string> ids;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    SentencePair p;
    try {
      json j = json::parse(line);
      p.id = j.at("id").get<std::string>();
      p.s1 = j.at("s1").get<std::string>();
      p.s2 = j.at("s2").get<std::string>();
      if (j.contains("gold_implicit") && !j["gold_implicit"].is_null()) {
        p.gold_implicit = j["gold_implicit"].get<std::string>();
      }
      if (j.contains("gold_path") && !j["gold_path"].is_null()) {
        std::vector<GoldTriple> triples;
        for (const auto &t : j["gold_path"]) triples.push_back(ParseGoldTriple(t, line_no));
        p.gold_path = std::move(triples);
      }
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParse, "corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    if (Trim(p.s1).empty() || Trim(p.s2).empty()) {
      throw Error(ErrorCode::kParse,
                  "corpus line " + std::to_string(line_no) + ": empty sentence");
    }
    if (!ids.insert(p.id).second) {
      throw Error(ErrorCode::kParse, "corpus line " + std::to_string(line_no) +
                                         ": duplicate id '" + p.id + "'");
    }
    corpus.push_back(std::move(p));
  }
  return corpus;
}

std::vector<SentencePair> LoadCorpusFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus: " + path);
  return LoadCorpus(in);
}

}  // namespace kpath
