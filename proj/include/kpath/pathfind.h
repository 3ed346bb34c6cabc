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

#ifndef KPATH_PATHFIND_H_
#define KPATH_PATHFIND_H_

#include <optional>
#include <string>
#include <vector>

#include "kpath/backends.h"
#include "kpath/embed_store.h"
#include "kpath/extract.h"
#include "kpath/pos.h"

namespace kpath {

struct DirectLink {
  ConceptPair pair;
  std::string relation;
  double probability = 0.0;
};

struct Hop {
  std::string source;
  Relation relation;
  std::string target;
  double confidence = 0.0;

  bool operator==(const Hop &) const = default;
};

enum class PathOrigin { kGenerator, kClassifier, kStatic };
// Which side the search started from before presentation normalization.
enum class PathDirection { kForward, kBackward };

const char *ToString(PathOrigin origin);
const char *ToString(PathDirection direction);
PathOrigin ParsePathOrigin(std::string_view text);
PathDirection ParsePathDirection(std::string_view text);

// Chained hops from an S1 concept to an S2 concept. Always presented
// left to right (S1 -> S2).
struct KnowledgePath {
  std::vector<Hop> hops;
  PathOrigin origin = PathOrigin::kGenerator;
  PathDirection direction = PathDirection::kForward;
  double terminal_similarity = 0.0;
  std::optional<double> score;  // static ranking score

  // hops[0].source, hops[0].target, hops[1].target, ...
  std::vector<std::string> Nodes() const;
  double MeanConfidence() const;
  // Canonical "node|rel|node|..." key used for deduplication.
  std::string Key() const;
};

// Ordering used everywhere paths are ranked: terminal similarity desc,
// mean hop confidence desc, then lexicographic node and relation sequence.
bool PathBefore(const KnowledgePath &a, const KnowledgePath &b);

struct ChainParams {
  int beam = 10;
  double sim_gate = 0.7;
  double terminate = 0.95;
  int max_hops = 3;
  int frontier_cap = 50;
  bool use_inverse = true;
  bool bidirectional = true;

  // Throws Error(kInvalidArgument) on out-of-range values.
  void Validate() const;
};

struct ChainDiagnostics {
  bool target_uncovered = false;  // a goal concept encoded to the zero vector
  size_t frontier_truncations = 0;
  size_t generator_calls = 0;
};

// Optional PoS filter applied to classifier and generator predictions.
struct PosFilter {
  const PosPatternTable *table = nullptr;
  const LexiconTagger *tagger = nullptr;

  // Checks the triple in stored orientation (inverted relations swap).
  bool Keep(const std::string &source, const Relation &relation,
            const std::string &target) const;
};

// Relations with score >= threshold (Random excluded) that survive the
// optional filter, ordered by probability desc then label order.
std::vector<DirectLink> LinkDirect(const ConceptPair &pair, RelationClassifier &classifier,
                                   double threshold, const PosFilter *filter = nullptr);

// LinkDirect over many pairs; a backend error names the failing pair.
std::vector<std::vector<DirectLink>> LinkDirectAll(const std::vector<ConceptPair> &pairs,
                                                   RelationClassifier &classifier,
                                                   double threshold,
                                                   const PosFilter *filter = nullptr);

// Similarity-guided forward chaining.
//
// From the source concept, every chain relation (and its inverse) is fed to
// the generator; candidates whose cosine to the goal is >= sim_gate stay on
// the frontier, candidates above `terminate` complete a path. Frontiers
// expand until max_hops and are capped at frontier_cap partial paths per
// level (best by similarity). With `bidirectional`, the search is repeated
// from the target toward the source and those paths are flipped into
// S1 -> S2 presentation. Only completed, acyclic paths are returned,
// deduplicated and ordered by PathBefore.
class ForwardChainer {
 public:
  ForwardChainer(TargetGenerator &generator, const EmbeddingStore &embeddings,
                 std::vector<std::string> relations, ChainParams params,
                 const PosFilter *filter = nullptr);

  std::vector<KnowledgePath> Chain(const ConceptPair &pair,
                                   ChainDiagnostics *diagnostics = nullptr) const;

  const ChainParams &params() const { return params_; }

 private:
  void Search(const std::string &from, const std::string &goal, PathDirection direction,
              std::vector<KnowledgePath> &found, ChainDiagnostics &diag) const;

  TargetGenerator &generator_;
  const EmbeddingStore &embeddings_;
  std::vector<std::string> relations_;
  ChainParams params_;
  const PosFilter *filter_;
};

// Flips a path found from the S2 side: hop order reversed, each hop's
// endpoints swapped and its inversion flag toggled.
KnowledgePath ReversePath(const KnowledgePath &path);

enum class Verdict { kDirect, kMultihop, kUnconnected };

const char *ToString(Verdict verdict);
Verdict ParseVerdict(std::string_view text);

struct ConnectResult {
  ConceptPair pair;
  Verdict verdict = Verdict::kUnconnected;
  std::vector<DirectLink> links;
  std::vector<KnowledgePath> paths;
  size_t discarded_multihop = 0;
};

// Decision table:
//   direct non-empty              -> Direct, all multihop paths discarded
//   direct empty, multihop found  -> Multihop with the top_k paths
//   both empty                    -> Unconnected
ConnectResult Combine(const ConceptPair &pair, std::vector<DirectLink> direct,
                      std::vector<KnowledgePath> multihop, int top_k = 1);

}  // namespace kpath

#endif  // KPATH_PATHFIND_H_
