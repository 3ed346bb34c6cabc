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

#ifndef KPATH_RELATION_H_
#define KPATH_RELATION_H_

#include <compare>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace kpath {

inline constexpr std::string_view kRandom = "Random";
inline constexpr std::string_view kRelatedTo = "RelatedTo";
inline constexpr std::string_view kHasContext = "HasContext";

// The 13 most frequent ConceptNet relations, in canonical order.
const std::vector<std::string> &Cn13Relations();

// A relation label, possibly inverted (r^-1 swaps head and tail).
struct Relation {
  std::string name;
  bool inverted = false;

  Relation() = default;
  explicit Relation(std::string n, bool inv = false)
      : name(std::move(n)), inverted(inv) {}

  Relation Inverse() const { return Relation(name, !inverted); }

  // "UsedFor" or "UsedFor^-1".
  std::string ToString() const;

  // Parses the ToString() form.
  static Relation Parse(std::string_view text);

  bool IsRandom() const { return name == kRandom; }
  bool IsVague() const { return name == kRelatedTo || name == kHasContext; }

  auto operator<=>(const Relation &) const = default;
};

// The set of relation names a graph or classifier may use.
//
// Built-in inventories:
//   cn13      the 13 CN-13 relations plus Random
//   baseline  cn13 plus the vague RelatedTo and HasContext labels
// Custom inventories come from a plain-text file, one name per line,
// '#' starting a comment.
class RelationInventory {
 public:
  RelationInventory() = default;
  explicit RelationInventory(std::vector<std::string> names);

  static RelationInventory Cn13();
  static RelationInventory Baseline();
  static RelationInventory FromStream(std::istream &in);
  static RelationInventory FromFile(const std::string &path);
  // "cn13", "baseline", or a file path.
  static RelationInventory Resolve(const std::string &spec);

  bool Contains(std::string_view name) const;

  // All names, in file order.
  const std::vector<std::string> &names() const { return names_; }

  // Relations used for target generation: everything except Random and the
  // vague labels.
  std::vector<std::string> ChainRelations() const;

  // Labels a classifier scores: ChainRelations() plus Random.
  std::vector<std::string> ClassifierLabels() const;

  // Position of name in names(), or names().size() if absent.
  size_t IndexOf(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace kpath

#endif  // KPATH_RELATION_H_
