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

#include "kpath/kg_store.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {
namespace {

bool IsEdgePunct(unsigned char c) { return std::ispunct(c) != 0; }

bool NeighborLess(const Neighbor &a, const Neighbor &b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.node < b.node;
}

double ParseWeight(const std::string &text, size_t line_no) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(w) ||
      w < 0.0) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": invalid weight '" + text + "'");
  }
  return w;
}

}  // namespace

Concept NormalizeConcept(std::string_view text) {
  std::string lowered = ToLower(text);
  for (char &c : lowered) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) c = ' ';
  }
  // Collapse runs of spaces.
  std::string collapsed;
  for (char c : lowered) {
    if (c == ' ' && (collapsed.empty() || collapsed.back() == ' ')) continue;
    collapsed.push_back(c);
  }
  // Strip spaces and punctuation at both ends until stable.
  size_t b = 0, e = collapsed.size();
  while (b < e && (collapsed[b] == ' ' || IsEdgePunct(collapsed[b]))) ++b;
  while (e > b && (collapsed[e - 1] == ' ' || IsEdgePunct(collapsed[e - 1]))) --e;
  std::string normalized = collapsed.substr(b, e - b);
  if (normalized.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "concept is empty after normalization: '" + std::string(text) + "'");
  }
  return Concept{std::move(normalized), std::string(text)};
}

KnowledgeGraph KnowledgeGraph::Load(std::istream &in,
                                    const RelationInventory &inventory) {
  std::vector<Triple> triples;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3 && fields.size() != 4) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) +
                      ": expected relation<TAB>head<TAB>tail[<TAB>weight], got " +
                      std::to_string(fields.size()) + " fields");
    }
    std::string rel = Trim(fields[0]);
    if (!inventory.Contains(rel) || rel == kRandom) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": unknown relation '" + rel + "'");
    }
    Triple t;
    try {
      t.head = NormalizeConcept(fields[1]);
      t.tail = NormalizeConcept(fields[2]);
    } catch (const Error &e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    t.relation = Relation(rel);
    if (fields.size() == 4) t.weight = ParseWeight(Trim(fields[3]), line_no);
    triples.push_back(std::move(t));
  }
  KnowledgeGraph g = FromTriples(std::move(triples), inventory);
  g.stats_.lines = line_no;
  return g;
}

KnowledgeGraph KnowledgeGraph::LoadFile(const std::string &path,
                                        const RelationInventory &inventory) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open graph file: " + path);
  try {
    return Load(in, inventory);
  } catch (const Error &e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

KnowledgeGraph KnowledgeGraph::FromTriples(std::vector<Triple> triples,
                                           RelationInventory inventory) {
  KnowledgeGraph g;
  g.inventory_ = std::move(inventory);

  std::sort(triples.begin(), triples.end(), [](const Triple &a, const Triple &b) {
    if (a.head.normalized != b.head.normalized) return a.head.normalized < b.head.normalized;
    if (a.relation != b.relation) return a.relation < b.relation;
    if (a.tail.normalized != b.tail.normalized) return a.tail.normalized < b.tail.normalized;
    return a.weight > b.weight;
  });
  for (auto &t : triples) {
    if (t.head.normalized == t.tail.normalized) {
      ++g.stats_.self_loops;
      continue;
    }
    if (!g.triples_.empty()) {
      const Triple &last = g.triples_.back();
      if (last.head == t.head && last.relation == t.relation && last.tail == t.tail) {
        // Sorted by weight descending within a key, so the kept one is max.
        ++g.stats_.duplicates;
        continue;
      }
    }
    g.triples_.push_back(std::move(t));
  }

  std::set<std::string> vocab;
  for (const auto &t : g.triples_) {
    vocab.insert(t.head.normalized);
    vocab.insert(t.tail.normalized);
    g.pairs_[{t.head.normalized, t.tail.normalized}].push_back(t.relation);
  }
  g.vocab_.assign(vocab.begin(), vocab.end());
  std::tie(g.forward_, g.backward_) = BuildIndices(g.triples_);
  return g;
}

std::pair<KnowledgeGraph::Index, KnowledgeGraph::Index> KnowledgeGraph::BuildIndices(
    const std::vector<Triple> &triples) {
  Index fwd, bwd;
  for (const auto &t : triples) {
    fwd[{t.head.normalized, t.relation}].push_back({t.tail.normalized, t.weight});
    bwd[{t.tail.normalized, t.relation}].push_back({t.head.normalized, t.weight});
  }
  for (auto &[key, list] : fwd) std::sort(list.begin(), list.end(), NeighborLess);
  for (auto &[key, list] : bwd) std::sort(list.begin(), list.end(), NeighborLess);
  return {std::move(fwd), std::move(bwd)};
}

KnowledgeGraph KnowledgeGraph::CloseUnderInverses() const {
  if (IsClosed()) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph already contains inverted relations");
  }
  std::vector<Triple> all = triples_;
  all.reserve(triples_.size() * 2);
  for (const auto &t : triples_) {
    all.push_back(Triple{t.tail, t.relation.Inverse(), t.head, t.weight});
  }
  KnowledgeGraph closed = FromTriples(std::move(all), inventory_);
  closed.stats_ = stats_;
  return closed;
}

std::span<const Neighbor> KnowledgeGraph::Neighbors(std::string_view node,
                                                    const Relation &relation,
                                                    Direction direction) const {
  const Index &index = direction == Direction::kForward ? forward_ : backward_;
  auto it = index.find(Key{std::string(node), relation});
  if (it == index.end()) return {};
  return it->second;
}

bool KnowledgeGraph::HasConcept(std::string_view node) const {
  return std::binary_search(vocab_.begin(), vocab_.end(), node);
}

bool KnowledgeGraph::HasTriple(std::string_view head, const Relation &relation,
                               std::string_view tail) const {
  auto rels = RelationsBetween(head, tail);
  return std::find(rels.begin(), rels.end(), relation) != rels.end();
}

bool KnowledgeGraph::HasAnyRelation(std::string_view head, std::string_view tail) const {
  return !RelationsBetween(head, tail).empty();
}

std::span<const Relation> KnowledgeGraph::RelationsBetween(std::string_view head,
                                                           std::string_view tail) const {
  auto it = pairs_.find({std::string(head), std::string(tail)});
  if (it == pairs_.end()) return {};
  return it->second;
}

bool KnowledgeGraph::IsClosed() const {
  return std::any_of(triples_.begin(), triples_.end(),
                     [](const Triple &t) { return t.relation.inverted; });
}

}  // namespace kpath
