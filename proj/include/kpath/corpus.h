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

#ifndef KPATH_CORPUS_H_
#define KPATH_CORPUS_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "kpath/relation.h"

namespace kpath {

// A relation triple as written in corpus annotations (not validated against
// a graph).
struct GoldTriple {
  std::string head;
  Relation relation;
  std::string tail;

  bool operator==(const GoldTriple &) const = default;
};

struct SentencePair {
  std::string id;
  std::string s1;
  std::string s2;
  std::optional<std::string> gold_implicit;
  std::optional<std::vector<GoldTriple>> gold_path;
};

// Reads JSON-lines `{id, s1, s2, gold_implicit?, gold_path?}`. gold_path
// entries are either [head, relation, tail] arrays or
// {head, relation, tail} objects. Ids must be unique and sentences
// non-empty.
std::vector<SentencePair> LoadCorpus(std::istream &in);
std::vector<SentencePair> LoadCorpusFile(const std::string &path);

}  // namespace kpath

#endif  // KPATH_CORPUS_H_
