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

#include "kpath/relation.h"

#include <algorithm>
#include <fstream>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {

const std::vector<std::string> &Cn13Relations() {
  static const std::vector<std::string> relations = {
      "AtLocation",     "Causes",      "CapableOf",    "IsA",
      "HasPrerequisite", "HasProperty", "HasSubevent", "UsedFor",
      "CausesDesire",   "Desires",     "HasA",         "MotivatedByGoal",
      "ReceivesAction"};
  return relations;
}

std::string Relation::ToString() const {
  return inverted ? name + "^-1" : name;
}

Relation Relation::Parse(std::string_view text) {
  constexpr std::string_view kSuffix = "^-1";
  if (text.size() > kSuffix.size() &&
      text.substr(text.size() - kSuffix.size()) == kSuffix) {
    return Relation(std::string(text.substr(0, text.size() - kSuffix.size())),
                    true);
  }
  if (text.empty()) throw Error(ErrorCode::kParse, "empty relation label");
  return Relation(std::string(text));
}

RelationInventory::RelationInventory(std::vector<std::string> names) {
  for (auto &n : names) {
    if (n.empty()) continue;
    if (std::find(names_.begin(), names_.end(), n) == names_.end()) {
      names_.push_back(std::move(n));
    }
  }
}

RelationInventory RelationInventory::Cn13() {
  std::vector<std::string> names = Cn13Relations();
  names.emplace_back(kRandom);
  return RelationInventory(std::move(names));
}

RelationInventory RelationInventory::Baseline() {
  std::vector<std::string> names = Cn13Relations();
  names.emplace_back(kRandom);
  names.emplace_back(kRelatedTo);
  names.emplace_back(kHasContext);
  return RelationInventory(std::move(names));
}

RelationInventory RelationInventory::FromStream(std::istream &in) {
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string name = Trim(line);
    if (name.empty()) continue;
    if (name.find_first_of(" \t^") != std::string::npos) {
      throw Error(ErrorCode::kParse, "invalid relation name in inventory: " + name);
    }
    names.push_back(std::move(name));
  }
  return RelationInventory(std::move(names));
}

RelationInventory RelationInventory::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open relation inventory: " + path);
  return FromStream(in);
}

RelationInventory RelationInventory::Resolve(const std::string &spec) {
  if (spec.empty() || spec == "cn13") return Cn13();
  if (spec == "baseline") return Baseline();
  return FromFile(spec);
}

bool RelationInventory::Contains(std::string_view name) const {
  return IndexOf(name) < names_.size();
}

size_t RelationInventory::IndexOf(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<size_t>(it - names_.begin());
}

std::vector<std::string> RelationInventory::ChainRelations() const {
  std::vector<std::string> out;
  for (const auto &n : names_) {
    if (n == kRandom || n == kRelatedTo || n == kHasContext) continue;
    out.push_back(n);
  }
  return out;
}

std::vector<std::string> RelationInventory::ClassifierLabels() const {
  auto out = ChainRelations();
  out.emplace_back(kRandom);
  return out;
}

}  // namespace kpath
