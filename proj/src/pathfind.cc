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

#include "kpath/pathfind.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "kpath/error.h"

namespace kpath {

const char *ToString(PathOrigin origin) {
  switch (origin) {
    case PathOrigin::kGenerator: return "generator";
    case PathOrigin::kClassifier: return "classifier";
    case PathOrigin::kStatic: return "static";
  }
  return "generator";
}

const char *ToString(PathDirection direction) {
  return direction == PathDirection::kForward ? "s1->s2" : "s2->s1";
}

PathOrigin ParsePathOrigin(std::string_view text) {
  if (text == "generator") return PathOrigin::kGenerator;
  if (text == "classifier") return PathOrigin::kClassifier;
  if (text == "static") return PathOrigin::kStatic;
  throw Error(ErrorCode::kParse, "unknown path origin '" + std::string(text) + "'");
}

PathDirection ParsePathDirection(std::string_view text) {
  if (text == "s1->s2") return PathDirection::kForward;
  if (text == "s2->s1") return PathDirection::kBackward;
  throw Error(ErrorCode::kParse, "unknown path direction '" + std::string(text) + "'");
}

const char *ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kDirect: return "Direct";
    case Verdict::kMultihop: return "Multihop";
    case Verdict::kUnconnected: return "Unconnected";
  }
  return "Unconnected";
}

Verdict ParseVerdict(std::string_view text) {
  if (text == "Direct") return Verdict::kDirect;
  if (text == "Multihop") return Verdict::kMultihop;
  if (text == "Unconnected") return Verdict::kUnconnected;
  throw Error(ErrorCode::kParse, "unknown verdict '" + std::string(text) + "'");
}

std::vector<std::string> KnowledgePath::Nodes() const {
  std::vector<std::string> nodes;
  if (hops.empty()) return nodes;
  nodes.push_back(hops.front().source);
  for (const auto &h : hops) nodes.push_back(h.target);
  return nodes;
}

double KnowledgePath::MeanConfidence() const {
  if (hops.empty()) return 0.0;
  double sum = 0.0;
  for (const auto &h : hops) sum += h.confidence;
  return sum / static_cast<double>(hops.size());
}

std::string KnowledgePath::Key() const {
  std::string key;
  if (hops.empty()) return key;
  key = hops.front().source;
  for (const auto &h : hops) {
    key += '|';
    key += h.relation.ToString();
    key += '|';
    key += h.target;
  }
  return key;
}

bool PathBefore(const KnowledgePath &a, const KnowledgePath &b) {
  if (a.terminal_similarity != b.terminal_similarity) {
    return a.terminal_similarity > b.terminal_similarity;
  }
  double ca = a.MeanConfidence(), cb = b.MeanConfidence();
  if (ca != cb) return ca > cb;
  auto na = a.Nodes(), nb = b.Nodes();
  if (na != nb) return na < nb;
  for (size_t i = 0; i < std::min(a.hops.size(), b.hops.size()); ++i) {
    if (a.hops[i].relation != b.hops[i].relation) return a.hops[i].relation < b.hops[i].relation;
  }
  if (a.hops.size() != b.hops.size()) return a.hops.size() < b.hops.size();
  return a.direction < b.direction;
}

void ChainParams::Validate() const {
  auto fail = [](const std::string &what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (beam < 1) fail("beam must be >= 1");
  if (!(sim_gate >= 0.0 && sim_gate <= terminate && terminate <= 1.0)) {
    fail("require 0 <= sim_gate <= terminate <= 1");
  }
  if (max_hops < 1 || max_hops > 3) fail("max_hops must be 1, 2 or 3");
  if (frontier_cap < 1) fail("frontier_cap must be >= 1");
}

bool PosFilter::Keep(const std::string &source, const Relation &relation,
                     const std::string &target) const {
  if (table == nullptr || tagger == nullptr) return true;
  if (relation.inverted) return PosFilterKeep(target, relation.name, source, *table, *tagger);
  return PosFilterKeep(source, relation.name, target, *table, *tagger);
}

std::vector<DirectLink> LinkDirect(const ConceptPair &pair, RelationClassifier &classifier,
                                   double threshold, const PosFilter *filter) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in (0, 1]");
  }
  const auto &labels = classifier.labels();
  RelationDistribution dist = classifier.Classify(pair.source.normalized, pair.target.normalized);
  std::vector<std::pair<size_t, DirectLink>> ranked;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto &label = labels[i];
    if (label == kRandom) continue;
    double p = dist.Score(label);
    if (p < threshold) continue;
    if (filter != nullptr &&
        !filter->Keep(pair.source.normalized, Relation(label), pair.target.normalized)) {
      continue;
    }
    ranked.push_back({i, DirectLink{pair, label, p}});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.second.probability != b.second.probability) {
      return a.second.probability > b.second.probability;
    }
    return a.first < b.first;
  });
  std::vector<DirectLink> links;
  for (auto &[i, link] : ranked) links.push_back(std::move(link));
  return links;
}

std::vector<std::vector<DirectLink>> LinkDirectAll(const std::vector<ConceptPair> &pairs,
                                                   RelationClassifier &classifier,
                                                   double threshold, const PosFilter *filter) {
  std::vector<std::vector<DirectLink>> out;
  out.reserve(pairs.size());
  for (const auto &pair : pairs) {
    try {
      out.push_back(LinkDirect(pair, classifier, threshold, filter));
    } catch (const Error &e) {
      throw Error(e.code(), "pair (" + pair.source.normalized + ", " + pair.target.normalized +
                                "): " + e.what());
    }
  }
  return out;
}

ForwardChainer::ForwardChainer(TargetGenerator &generator, const EmbeddingStore &embeddings,
                               std::vector<std::string> relations, ChainParams params,
                               const PosFilter *filter)
    : generator_(generator),
      embeddings_(embeddings),
      relations_(std::move(relations)),
      params_(params),
      filter_(filter) {
  params_.Validate();
}

namespace {

struct Partial {
  std::vector<std::string> nodes;
  std::vector<Hop> hops;
  double similarity = 0.0;
  double confidence_sum = 0.0;
};

bool PartialBefore(const Partial &a, const Partial &b) {
  if (a.similarity != b.similarity) return a.similarity > b.similarity;
  double ca = a.confidence_sum / a.hops.size(), cb = b.confidence_sum / b.hops.size();
  if (ca != cb) return ca > cb;
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  for (size_t i = 0; i < a.hops.size(); ++i) {
    if (a.hops[i].relation != b.hops[i].relation) return a.hops[i].relation < b.hops[i].relation;
  }
  return false;
}

}  // namespace

void ForwardChainer::Search(const std::string &from, const std::string &goal,
                            PathDirection direction, std::vector<KnowledgePath> &found,
                            ChainDiagnostics &diag) const {
  const PhraseVector goal_vec = embeddings_.Encode(goal);
  if (goal_vec.IsZero()) {
    diag.target_uncovered = true;
    return;
  }
  std::unordered_map<std::string, double> sim_cache;
  auto similarity = [&](const std::string &node) {
    auto it = sim_cache.find(node);
    if (it != sim_cache.end()) return it->second;
    double s = node == goal ? 1.0 : Cosine(embeddings_.Encode(node), goal_vec);
    sim_cache.emplace(node, s);
    return s;
  };

  std::vector<Partial> frontier(1);
  frontier[0].nodes.push_back(from);
  for (int depth = 1; depth <= params_.max_hops && !frontier.empty(); ++depth) {
    std::vector<Partial> next;
    for (const auto &partial : frontier) {
      const std::string &u = partial.nodes.back();
      for (const auto &name : relations_) {
        for (int inv = 0; inv < (params_.use_inverse ? 2 : 1); ++inv) {
          const Relation relation(name, inv == 1);
          ++diag.generator_calls;
          for (const auto &candidate : generator_.Generate(u, relation, params_.beam)) {
            const std::string &v = candidate.node.normalized;
            if (std::find(partial.nodes.begin(), partial.nodes.end(), v) !=
                partial.nodes.end()) {
              continue;
            }
            if (filter_ != nullptr && !filter_->Keep(u, relation, v)) continue;
            const double s = similarity(v);
            Hop hop{u, relation, v, candidate.confidence};
            if (s > params_.terminate) {
              KnowledgePath path;
              path.hops = partial.hops;
              path.hops.push_back(std::move(hop));
              path.origin = PathOrigin::kGenerator;
              path.direction = direction;
              path.terminal_similarity = s;
              found.push_back(std::move(path));
            } else if (s >= params_.sim_gate && depth < params_.max_hops) {
              Partial extended = partial;
              extended.nodes.push_back(v);
              extended.hops.push_back(std::move(hop));
              extended.similarity = s;
              extended.confidence_sum += candidate.confidence;
              next.push_back(std::move(extended));
            }
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), PartialBefore);
    if (next.size() > static_cast<size_t>(params_.frontier_cap)) {
      next.resize(params_.frontier_cap);
      ++diag.frontier_truncations;
    }
    frontier = std::move(next);
  }
}

KnowledgePath ReversePath(const KnowledgePath &path) {
  KnowledgePath out = path;
  out.hops.clear();
  for (auto it = path.hops.rbegin(); it != path.hops.rend(); ++it) {
    out.hops.push_back(Hop{it->target, it->relation.Inverse(), it->source, it->confidence});
  }
  return out;
}

std::vector<KnowledgePath> ForwardChainer::Chain(const ConceptPair &pair,
                                                 ChainDiagnostics *diagnostics) const {
  ChainDiagnostics local;
  ChainDiagnostics &diag = diagnostics != nullptr ? *diagnostics : local;
  std::vector<KnowledgePath> found;
  Search(pair.source.normalized, pair.target.normalized, PathDirection::kForward, found, diag);
  if (params_.bidirectional) {
    std::vector<KnowledgePath> backward;
    Search(pair.target.normalized, pair.source.normalized, PathDirection::kBackward, backward,
           diag);
    for (const auto &p : backward) found.push_back(ReversePath(p));
  }
  std::sort(found.begin(), found.end(), PathBefore);
  std::set<std::string> seen;
  std::vector<KnowledgePath> unique;
  for (auto &p : found) {
    if (seen.insert(p.Key()).second) unique.push_back(std::move(p));
  }
  return unique;
}

ConnectResult Combine(const ConceptPair &pair, std::vector<DirectLink> direct,
                      std::vector<KnowledgePath> multihop, int top_k) {
  if (top_k < 1) throw Error(ErrorCode::kInvalidArgument, "top_k must be >= 1");
  for (const auto &link : direct) {
    if (!(link.pair == pair)) {
      throw Error(ErrorCode::kInvalidArgument, "direct link belongs to a different pair");
    }
  }
  for (const auto &path : multihop) {
    auto nodes = path.Nodes();
    if (nodes.empty() ||
        (nodes.front() != pair.source.normalized && nodes.back() != pair.target.normalized)) {
      throw Error(ErrorCode::kInvalidArgument, "multihop path belongs to a different pair");
    }
  }
  ConnectResult result;
  result.pair = pair;
  if (!direct.empty()) {
    result.verdict = Verdict::kDirect;
    result.links = std::move(direct);
    result.discarded_multihop = multihop.size();
  } else if (!multihop.empty()) {
    result.verdict = Verdict::kMultihop;
    if (multihop.size() > static_cast<size_t>(top_k)) multihop.resize(top_k);
    result.paths = std::move(multihop);
  } else {
    result.verdict = Verdict::kUnconnected;
  }
  return result;
}

}  // namespace kpath
