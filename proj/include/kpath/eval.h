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

#ifndef KPATH_EVAL_H_
#define KPATH_EVAL_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpath/backends.h"
#include "kpath/corpus.h"
#include "kpath/embed_store.h"
#include "kpath/extract.h"
#include "kpath/kg_store.h"
#include "kpath/pathfind.h"
#include "kpath/result_io.h"

namespace kpath {

// ---------------------------------------------------------------------------
// Reference encodings

// Relational encoding of a gold implicit-knowledge sentence: its concepts are
// extracted and every ordered concept pair is classified; relations scoring
// >= threshold (Random excluded) are kept, ordered by head position, then
// tail position, then label order.
struct SilverPath {
  std::vector<GoldTriple> triples;
  bool no_concepts = false;
};

SilverPath BuildSilverPath(std::string_view sentence, const ConceptExtractor &extractor,
                           RelationClassifier &classifier, double threshold = 0.9);

// "head Relation tail" per triple, joined by ". ".
std::string LinearizeTriples(const std::vector<GoldTriple> &triples);
// Concepts and relations along the path: "a Rel b Rel c".
std::string LinearizePath(const KnowledgePath &path);

// Relation -> sentence template with {h} and {t} placeholders.
class TemplateTable {
 public:
  TemplateTable() = default;
  static TemplateTable Default();
  // `relation<TAB>template` lines.
  static TemplateTable FromFile(const std::string &path);

  void Set(const std::string &relation, const std::string &text) { templates_[relation] = text; }

  // Renders one triple; an inverted relation swaps the arguments into the
  // base template. Throws for a relation without a template.
  std::string Render(const std::string &head, const Relation &relation,
                     const std::string &tail) const;
  std::string Render(const KnowledgePath &path) const;
  std::string Render(const std::vector<GoldTriple> &triples) const;

 private:
  std::map<std::string, std::string> templates_;
};

// ---------------------------------------------------------------------------
// Similarity metrics

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool empty = false;  // one side had no tokens
};

// Cosine between the phrase encodings of two texts.
double EncodeAndCosim(std::string_view generated, std::string_view reference,
                      const EmbeddingStore &embeddings);

// Greedy-match F1 over static embeddings. Every candidate token is matched
// to its most similar reference token (precision) and vice versa (recall).
// Identical tokens score 1; otherwise the cosine of their vectors, 0 for
// unknown words. Stopwords are kept. F1 is 0 when precision + recall <= 0.
Prf TokenMatchF1(std::string_view candidate, std::string_view reference,
                 const EmbeddingStore &embeddings);

// ---------------------------------------------------------------------------
// Classifier / generator metrics

struct LabelPrf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;
};

struct WeightedPrfReport {
  std::map<std::string, LabelPrf> per_label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Multi-label per-label P/R/F1 averaged with gold-support weights.
WeightedPrfReport WeightedPrf(const std::vector<std::set<std::string>> &predictions,
                              const std::vector<std::set<std::string>> &gold);

// Fraction of instances whose gold target is among the first k of its beam.
double HitsAtK(const std::vector<std::vector<std::string>> &beams,
               const std::vector<std::string> &gold, int k);

// ---------------------------------------------------------------------------
// Random class

struct RandomPair {
  std::string head;
  std::string tail;
  std::string source_relation;  // relation the pair was derived from
  bool opposite = false;        // opposite pair (true) or corrupt pair (false)
};

// n/2 opposite pairs (a triple's arguments swapped) and n/2 corrupt pairs
// (one argument replaced by a concept seen in the same role of the same
// relation). No pair is a positive triple under any relation, no pair
// repeats. Deterministic for a given seed.
std::vector<RandomPair> BuildRandomClass(const KnowledgeGraph &graph, size_t n, uint64_t seed);

// Random-class sizes used for the open-world splits.
inline constexpr size_t kRandomClassTrain = 2070;
inline constexpr size_t kRandomClassDev = 260;
inline constexpr size_t kRandomClassTest = 260;

// ---------------------------------------------------------------------------
// Agreement

// (p_o - p_e) / (1 - p_e); 1.0 when p_o = p_e = 1.
double CohensKappa(const std::vector<std::string> &a1, const std::vector<std::string> &a2);

struct AnnotationRecord {
  std::string item_id;
  std::string annotator;
  int relevance = 0;  // -2..+2
  bool implicit = false;
  std::string best_model;
};

// CSV `item_id,annotator,relevance,implicit,best_model` with a header row.
std::vector<AnnotationRecord> LoadAnnotations(std::istream &in);
std::vector<AnnotationRecord> LoadAnnotationsFile(const std::string &path);

struct AgreementReport {
  std::string annotator_a;
  std::string annotator_b;
  size_t items = 0;
  double relevance_kappa = 0.0;
  double implicit_kappa = 0.0;
  double best_model_kappa = 0.0;
};

// Kappa between the two annotators of the file over the items both labeled.
AgreementReport AnnotationAgreement(const std::vector<AnnotationRecord> &records);

// ---------------------------------------------------------------------------
// Corpus statistics

struct CorpusStats {
  size_t pairs = 0;
  size_t linked_pairs = 0;
  std::optional<double> avg_hops;  // empty when nothing is linked
  std::map<std::string, double> relation_histogram;
  std::map<std::string, size_t> relation_counts;
};

// Direct results count as one hop; Multihop results count the hops of
// their best path. The histogram covers every link relation and hop
// relation (inverses folded into their base relation).
CorpusStats ComputeCorpusStats(const std::vector<ConnectResult> &results);

// Methods as columns, {linked pairs, avg. hops} as rows, followed by the
// three most frequent relations per method.
std::string FormatStatsTable(const std::vector<std::pair<std::string, CorpusStats>> &methods);

// ---------------------------------------------------------------------------
// Evaluation settings

enum class EvalSetting {
  kSilver,    // (a) generated paths vs silver paths
  kGoldNl,    // (b) generated paths-NL vs gold NL
  kGoldPath,  // (c) generated paths vs gold paths
};

EvalSetting ParseEvalSetting(std::string_view text);
const char *SettingKey(EvalSetting setting);
const char *SettingTitle(EvalSetting setting);

struct MethodScores {
  std::optional<double> cosim;
  std::optional<Prf> greedy_f1;
  size_t items = 0;    // sentence pairs scored
  size_t skipped = 0;  // no generated output or no reference
};

struct EvalContext {
  const EmbeddingStore *embeddings = nullptr;
  const ConceptExtractor *extractor = nullptr;  // setting (a)
  RelationClassifier *classifier = nullptr;     // setting (a)
  const TemplateTable *templates = nullptr;     // setting (b)
  double threshold = 0.9;
};

// Generated text of one sentence pair: every link and path of its results.
std::string GeneratedText(const std::vector<const ConnectResult *> &results, EvalSetting setting,
                          const TemplateTable *templates);

// Scores one method's results against the corpus references. Throws
// Error(kMissingData) when no sentence pair carries the reference the
// setting needs.
MethodScores ScoreSetting(EvalSetting setting, const std::vector<SentencePair> &corpus,
                          const std::vector<ResultRecord> &results, const EvalContext &context);

}  // namespace kpath

#endif  // KPATH_EVAL_H_
