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

#ifndef KPATH_RESULT_IO_H_
#define KPATH_RESULT_IO_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpath/pathfind.h"

namespace kpath {

// One output line: a ConnectResult plus its identifiers.
struct ResultRecord {
  std::string pair_id;
  std::string sentence_id;
  ConnectResult result;
};

// {pair_id, sentence_id, c_s, c_t, verdict, links: [{relation, prob}],
//  paths: [{origin, direction, hops: [{source, relation, inverted, target,
//  confidence}], terminal_similarity, score?}], discarded_multihop}
nlohmann::ordered_json ToJson(const ResultRecord &record);
ResultRecord ResultFromJson(const nlohmann::json &j);
nlohmann::ordered_json PathToJson(const KnowledgePath &path);
KnowledgePath PathFromJson(const nlohmann::json &j);

// One compact JSON object per line.
void WriteResults(std::ostream &out, const std::vector<ResultRecord> &records);
std::vector<ResultRecord> ReadResults(std::istream &in);
std::vector<ResultRecord> ReadResultsFile(const std::string &path);

}  // namespace kpath

#endif  // KPATH_RESULT_IO_H_
