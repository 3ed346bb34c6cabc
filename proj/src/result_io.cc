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

#include "kpath/result_io.h"

#include <fstream>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json PathToJson(const KnowledgePath &path) {
  ordered_json j;
  j["origin"] = ToString(path.origin);
  j["direction"] = ToString(path.direction);
  ordered_json hops = ordered_json::array();
  for (const auto &h : path.hops) {
    ordered_json hop;
    hop["source"] = h.source;
    hop["relation"] = h.relation.name;
    hop["inverted"] = h.relation.inverted;
    hop["target"] = h.target;
    hop["confidence"] = h.confidence;
    hops.push_back(std::move(hop));
  }
  j["hops"] = std::move(hops);
  j["terminal_similarity"] = path.terminal_similarity;
  if (path.score) j["score"] = *path.score;
  return j;
}

KnowledgePath PathFromJson(const json &j) {
  KnowledgePath p;
  p.origin = ParsePathOrigin(j.value("origin", std::string("generator")));
  p.direction = ParsePathDirection(j.value("direction", std::string("s1->s2")));
  for (const auto &h : j.at("hops")) {
    p.hops.push_back(Hop{h.at("source").get<std::string>(),
                         Relation(h.at("relation").get<std::string>(),
                                  h.value("inverted", false)),
                         h.at("target").get<std::string>(), h.value("confidence", 0.0)});
  }
  p.terminal_similarity = j.value("terminal_similarity", 0.0);
  if (j.contains("score")) p.score = j["score"].get<double>();
  return p;
}

ordered_json ToJson(const ResultRecord &record) {
  const ConnectResult &r = record.result;
  ordered_json j;
  j["pair_id"] = record.pair_id;
  j["sentence_id"] = record.sentence_id;
  j["c_s"] = r.pair.source.normalized;
  j["c_t"] = r.pair.target.normalized;
  j["verdict"] = ToString(r.verdict);
  ordered_json links = ordered_json::array();
  for (const auto &l : r.links) {
    ordered_json link;
    link["relation"] = l.relation;
    link["prob"] = l.probability;
    links.push_back(std::move(link));
  }
  j["links"] = std::move(links);
  ordered_json paths = ordered_json::array();
  for (const auto &p : r.paths) paths.push_back(PathToJson(p));
  j["paths"] = std::move(paths);
  j["discarded_multihop"] = r.discarded_multihop;
  return j;
}

ResultRecord ResultFromJson(const json &j) {
  ResultRecord rec;
  rec.pair_id = j.at("pair_id").get<std::string>();
  rec.sentence_id = j.at("sentence_id").get<std::string>();
  ConnectResult &r = rec.result;
  std::string cs = j.at("c_s").get<std::string>();
  std::string ct = j.at("c_t").get<std::string>();
  r.pair = ConceptPair{Concept{cs, cs}, Concept{ct, ct}};
  r.verdict = ParseVerdict(j.at("verdict").get<std::string>());
  for (const auto &l : j.value("links", json::array())) {
    r.links.push_back(DirectLink{r.pair, l.at("relation").get<std::string>(),
                                 l.at("prob").get<double>()});
  }
  for (const auto &p : j.value("paths", json::array())) r.paths.push_back(PathFromJson(p));
  r.discarded_multihop = j.value("discarded_multihop", size_t{0});
  return rec;
}

void WriteResults(std::ostream &out, const std::vector<ResultRecord> &records) {
  for (const auto &r : records) out << ToJson(r).dump() << '\n';
}

std::vector<ResultRecord> ReadResults(std::istream &in) {
  std::vector<ResultRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      records.push_back(ResultFromJson(json::parse(line)));
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParse, "results line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::vector<ResultRecord> ReadResultsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open results: " + path);
  return ReadResults(in);
}

}  // namespace kpath
