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

#ifndef KPATH_KG_STORE_H_
#define KPATH_KG_STORE_H_

#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpath/relation.h"

namespace kpath {

// A concept node. `normalized` is the lookup key: lowercase, single spaces,
// no leading/trailing punctuation.
struct Concept {
  std::string normalized;
  std::string original;

  bool operator==(const Concept &o) const { return normalized == o.normalized; }
  auto operator<=>(const Concept &o) const { return normalized <=> o.normalized; }
};

// Normalizes a surface string into a concept. Underscores become spaces.
// Throws Error(kInvalidArgument) when nothing is left.
Concept NormalizeConcept(std::string_view text);

struct Triple {
  Concept head;
  Relation relation;
  Concept tail;
  double weight = 1.0;
};

struct Neighbor {
  std::string node;
  double weight = 1.0;

  bool operator==(const Neighbor &) const = default;
};

enum class Direction { kForward, kBackward };

// Counters collected while loading a graph.
struct LoadStats {
  size_t lines = 0;
  size_t duplicates = 0;
  size_t self_loops = 0;
};

// Immutable, indexed triple store.
//
// forward_index maps (head, relation) to tails and backward_index maps
// (tail, relation) to heads. Both lists are ordered by weight descending,
// ties broken lexicographically.
class KnowledgeGraph {
 public:
  using Key = std::pair<std::string, Relation>;
  using Index = std::map<Key, std::vector<Neighbor>>;

  KnowledgeGraph() = default;

  // Reads `relation<TAB>head<TAB>tail[<TAB>weight]` lines. Relations outside
  // the inventory and malformed lines are load errors naming the line.
  // Self-loops are skipped and counted in stats().
  static KnowledgeGraph Load(std::istream &in, const RelationInventory &inventory);
  static KnowledgeGraph LoadFile(const std::string &path,
                                 const RelationInventory &inventory);

  // Builds a graph from already-normalized triples. Duplicates collapse to
  // the maximum weight; self-loops are dropped.
  static KnowledgeGraph FromTriples(std::vector<Triple> triples,
                                    RelationInventory inventory);

  // Adds (t, r^-1, h) for every (h, r, t). Throws if the graph already
  // contains inverted relations.
  KnowledgeGraph CloseUnderInverses() const;

  std::span<const Neighbor> Neighbors(std::string_view node,
                                      const Relation &relation,
                                      Direction direction) const;

  bool HasConcept(std::string_view node) const;
  bool HasTriple(std::string_view head, const Relation &relation,
                 std::string_view tail) const;
  // True when any relation links head to tail (in that orientation).
  bool HasAnyRelation(std::string_view head, std::string_view tail) const;
  // Relations r with (head, r, tail) in the graph, in sorted order.
  std::span<const Relation> RelationsBetween(std::string_view head,
                                             std::string_view tail) const;
  bool IsClosed() const;

  // Triples sorted by (head, relation, tail).
  const std::vector<Triple> &triples() const { return triples_; }
  // Sorted normalized concept strings.
  const std::vector<std::string> &vocab() const { return vocab_; }
  const RelationInventory &inventory() const { return inventory_; }
  const Index &forward_index() const { return forward_; }
  const Index &backward_index() const { return backward_; }
  const LoadStats &stats() const { return stats_; }

  // Rebuilds both indices from a triple list; used for consistency checks.
  static std::pair<Index, Index> BuildIndices(const std::vector<Triple> &triples);

 private:
  std::vector<Triple> triples_;
  std::vector<std::string> vocab_;
  RelationInventory inventory_;
  Index forward_;
  Index backward_;
  std::map<std::pair<std::string, std::string>, std::vector<Relation>> pairs_;
  LoadStats stats_;
};

}  // namespace kpath

#endif  // KPATH_KG_STORE_H_
