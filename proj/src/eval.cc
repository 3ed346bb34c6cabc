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

#include "kpath/eval.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {

// ---------------------------------------------------------------------------
// Reference encodings

SilverPath BuildSilverPath(std::string_view sentence, const ConceptExtractor &extractor,
                           RelationClassifier &classifier, double threshold) {
  SilverPath silver;
  auto mentions = extractor.Extract(sentence);
  if (mentions.empty()) {
    silver.no_concepts = true;
    return silver;
  }
  const auto &labels = classifier.labels();
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto &head : mentions) {
    for (const auto &tail : mentions) {
      if (head.node == tail.node) continue;
      if (!seen.insert({head.node.normalized, tail.node.normalized}).second) continue;
      auto dist = classifier.Classify(head.node.normalized, tail.node.normalized);
      for (const auto &label : labels) {
        if (label == kRandom) continue;
        if (dist.Score(label) >= threshold) {
          silver.triples.push_back(
              GoldTriple{head.node.normalized, Relation(label), tail.node.normalized});
        }
      }
    }
  }
  return silver;
}

std::string LinearizeTriples(const std::vector<GoldTriple> &triples) {
  std::vector<std::string> parts;
  for (const auto &t : triples) parts.push_back(t.head + " " + t.relation.name + " " + t.tail);
  return Join(parts, ". ");
}

std::string LinearizePath(const KnowledgePath &path) {
  if (path.hops.empty()) return {};
  std::string out = path.hops.front().source;
  for (const auto &h : path.hops) out += " " + h.relation.name + " " + h.target;
  return out;
}

TemplateTable TemplateTable::Default() {
  TemplateTable table;
  table.Set("AtLocation", "You are likely to find {h} in {t}");
  table.Set("Causes", "The effect of {h} is {t}");
  table.Set("CapableOf", "{h} can {t}");
  table.Set("IsA", "{h} is a {t}");
  table.Set("HasPrerequisite", "{h} requires {t}");
  table.Set("HasProperty", "{h} is {t}");
  table.Set("HasSubevent", "One of the things you do when you {h} is {t}");
  table.Set("UsedFor", "{h} is used for {t}");
  table.Set("CausesDesire", "{h} would make you want to {t}");
  table.Set("Desires", "{h} wants {t}");
  table.Set("HasA", "{h} has {t}");
  table.Set("MotivatedByGoal", "You would {h} because you want to {t}");
  table.Set("ReceivesAction", "{h} can be {t}");
  table.Set("RelatedTo", "{h} is related to {t}");
  table.Set("HasContext", "{h} is used in the context of {t}");
  table.Set("PartOf", "{h} is part of {t}");
  return table;
}

TemplateTable TemplateTable::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open template table: " + path);
  TemplateTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kParse, path + ": line " + std::to_string(line_no) +
                                         ": expected relation<TAB>template");
    }
    table.Set(Trim(line.substr(0, tab)), Trim(line.substr(tab + 1)));
  }
  return table;
}

std::string TemplateTable::Render(const std::string &head, const Relation &relation,
                                  const std::string &tail) const {
  auto it = templates_.find(relation.name);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kMissingData, "no template for relation " + relation.name);
  }
  const std::string &h = relation.inverted ? tail : head;
  const std::string &t = relation.inverted ? head : tail;
  std::string out;
  const std::string &tpl = it->second;
  for (size_t i = 0; i < tpl.size(); ++i) {
    if (tpl.compare(i, 3, "{h}") == 0) {
      out += h;
      i += 2;
    } else if (tpl.compare(i, 3, "{t}") == 0) {
      out += t;
      i += 2;
    } else {
      out += tpl[i];
    }
  }
  return out;
}

std::string TemplateTable::Render(const KnowledgePath &path) const {
  std::vector<std::string> parts;
  for (const auto &h : path.hops) parts.push_back(Render(h.source, h.relation, h.target));
  return Join(parts, ". ");
}

std::string TemplateTable::Render(const std::vector<GoldTriple> &triples) const {
  std::vector<std::string> parts;
  for (const auto &t : triples) parts.push_back(Render(t.head, t.relation, t.tail));
  return Join(parts, ". ");
}

// ---------------------------------------------------------------------------
// Similarity metrics

double EncodeAndCosim(std::string_view generated, std::string_view reference,
                      const EmbeddingStore &embeddings) {
  return Cosine(embeddings.Encode(generated), embeddings.Encode(reference));
}

Prf TokenMatchF1(std::string_view candidate, std::string_view reference,
                 const EmbeddingStore &embeddings) {
  const auto cand = TokenWords(candidate);
  const auto ref = TokenWords(reference);
  Prf out;
  if (cand.empty() || ref.empty()) {
    out.empty = true;
    return out;
  }
  const std::vector<double> zero(embeddings.dim(), 0.0);
  auto vec = [&](const std::string &w) -> const std::vector<double> & {
    const auto *v = embeddings.Lookup(w);
    return v != nullptr ? *v : zero;
  };
  std::vector<std::vector<double>> sim(cand.size(), std::vector<double>(ref.size()));
  for (size_t i = 0; i < cand.size(); ++i) {
    for (size_t j = 0; j < ref.size(); ++j) {
      sim[i][j] = cand[i] == ref[j] ? 1.0 : Cosine(vec(cand[i]), vec(ref[j]));
    }
  }
  double p = 0.0, r = 0.0;
  for (size_t i = 0; i < cand.size(); ++i) p += *std::max_element(sim[i].begin(), sim[i].end());
  for (size_t j = 0; j < ref.size(); ++j) {
    double best = -1.0;
    for (size_t i = 0; i < cand.size(); ++i) best = std::max(best, sim[i][j]);
    r += best;
  }
  out.precision = p / static_cast<double>(cand.size());
  out.recall = r / static_cast<double>(ref.size());
  const double denom = out.precision + out.recall;
  out.f1 = denom > 0.0 ? 2.0 * out.precision * out.recall / denom : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// Classifier / generator metrics

WeightedPrfReport WeightedPrf(const std::vector<std::set<std::string>> &predictions,
                              const std::vector<std::set<std::string>> &gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weighted_prf: prediction/gold length mismatch");
  }
  std::map<std::string, std::array<size_t, 3>> counts;  // tp, fp, fn
  std::map<std::string, size_t> support;
  for (size_t i = 0; i < gold.size(); ++i) {
    for (const auto &l : gold[i]) {
      ++support[l];
      if (predictions[i].count(l)) {
        ++counts[l][0];
      } else {
        ++counts[l][2];
      }
    }
    for (const auto &l : predictions[i]) {
      if (!gold[i].count(l)) ++counts[l][1];
    }
  }
  WeightedPrfReport report;
  size_t total = 0;
  for (const auto &[label, c] : counts) {
    LabelPrf prf;
    const auto [tp, fp, fn] = c;
    prf.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    prf.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    prf.f1 = prf.precision + prf.recall > 0.0
                 ? 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall)
                 : 0.0;
    prf.support = support.count(label) ? support.at(label) : 0;
    total += prf.support;
    report.per_label[label] = prf;
  }
  if (total > 0) {
    for (const auto &[label, prf] : report.per_label) {
      const double w = static_cast<double>(prf.support) / static_cast<double>(total);
      report.precision += w * prf.precision;
      report.recall += w * prf.recall;
      report.f1 += w * prf.f1;
    }
  }
  return report;
}

double HitsAtK(const std::vector<std::vector<std::string>> &beams,
               const std::vector<std::string> &gold, int k) {
  if (beams.size() != gold.size()) {
    throw Error(ErrorCode::kInvalidArgument, "hits@k: beam/gold length mismatch");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "hits@k: k must be >= 1");
  if (beams.empty()) return 0.0;
  size_t hits = 0;
  for (size_t i = 0; i < beams.size(); ++i) {
    const size_t limit = std::min(beams[i].size(), static_cast<size_t>(k));
    if (std::find(beams[i].begin(), beams[i].begin() + limit, gold[i]) !=
        beams[i].begin() + limit) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(beams.size());
}

// ---------------------------------------------------------------------------
// Random class

std::vector<RandomPair> BuildRandomClass(const KnowledgeGraph &graph, size_t n, uint64_t seed) {
  if (n % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "random class size must be even");
  std::vector<RandomPair> out;
  if (n == 0) return out;

  std::vector<const Triple *> positives;
  for (const auto &t : graph.triples()) {
    if (!t.relation.inverted) positives.push_back(&t);
  }
  auto is_positive = [&](const std::string &h, const std::string &t) {
    for (const auto &r : graph.RelationsBetween(h, t)) {
      if (!r.inverted) return true;
    }
    return false;
  };

  std::mt19937_64 rng(seed);
  std::set<std::pair<std::string, std::string>> used;

  // Opposite pairs: enumerate every admissible swap, then sample.
  std::vector<RandomPair> opposite;
  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const Triple *t : positives) {
      const auto &h = t->head.normalized;
      const auto &k = t->tail.normalized;
      if (is_positive(k, h)) continue;
      if (!seen.insert({k, h}).second) continue;
      opposite.push_back(RandomPair{k, h, t->relation.name, true});
    }
  }
  const size_t half = n / 2;
  if (opposite.size() < half) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph too small: only " + std::to_string(opposite.size()) +
                    " opposite pairs available, need " + std::to_string(half));
  }
  std::shuffle(opposite.begin(), opposite.end(), rng);
  opposite.resize(half);
  for (const auto &p : opposite) used.insert({p.head, p.tail});
  out = opposite;

  // Corrupt pairs: rejection sampling over (triple, side, replacement).
  std::map<std::string, std::vector<std::string>> heads_by_rel, tails_by_rel;
  for (const Triple *t : positives) {
    heads_by_rel[t->relation.name].push_back(t->head.normalized);
    tails_by_rel[t->relation.name].push_back(t->tail.normalized);
  }
  for (auto *m : {&heads_by_rel, &tails_by_rel}) {
    for (auto &[rel, list] : *m) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  const size_t budget = 1000 + 200 * n;
  size_t made = 0;
  for (size_t attempt = 0; attempt < budget && made < half; ++attempt) {
    const Triple *t = positives[std::uniform_int_distribution<size_t>(0, positives.size() - 1)(rng)];
    const bool replace_head = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    const auto &pool = replace_head ? heads_by_rel[t->relation.name] : tails_by_rel[t->relation.name];
    const std::string &repl = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
    std::string h = replace_head ? repl : t->head.normalized;
    std::string k = replace_head ? t->tail.normalized : repl;
    if (h == k || is_positive(h, k) || used.count({h, k})) continue;
    used.insert({h, k});
    out.push_back(RandomPair{h, k, t->relation.name, false});
    ++made;
  }
  if (made < half) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph too small: found only " + std::to_string(made) + " of " +
                    std::to_string(half) + " corrupt pairs");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Agreement

double CohensKappa(const std::vector<std::string> &a1, const std::vector<std::string> &a2) {
  if (a1.size() != a2.size()) {
    throw Error(ErrorCode::kInvalidArgument, "kappa: label lists differ in length");
  }
  if (a1.empty()) throw Error(ErrorCode::kInvalidArgument, "kappa: no items");
  const double n = static_cast<double>(a1.size());
  std::map<std::string, std::pair<size_t, size_t>> marginals;
  size_t agree = 0;
  for (size_t i = 0; i < a1.size(); ++i) {
    if (a1[i] == a2[i]) ++agree;
    ++marginals[a1[i]].first;
    ++marginals[a2[i]].second;
  }
  const double po = static_cast<double>(agree) / n;
  double pe = 0.0;
  for (const auto &[label, m] : marginals) {
    pe += (static_cast<double>(m.first) / n) * (static_cast<double>(m.second) / n);
  }
  if (pe >= 1.0) return po >= 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

namespace {

std::vector<std::string> ParseCsvLine(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(Trim(cur));
  return fields;
}

bool ParseYesNo(const std::string &text, size_t line_no) {
  std::string v = ToLower(text);
  if (v == "yes" || v == "true" || v == "1") return true;
  if (v == "no" || v == "false" || v == "0") return false;
  throw Error(ErrorCode::kParse,
              "annotation line " + std::to_string(line_no) + ": implicit must be yes/no");
}

}  // namespace

std::vector<AnnotationRecord> LoadAnnotations(std::istream &in) {
  std::vector<AnnotationRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto fields = ParseCsvLine(line);
    if (header) {
      header = false;
      if (!fields.empty() && fields[0] == "item_id") continue;
    }
    if (fields.size() != 5) {
      throw Error(ErrorCode::kParse, "annotation line " + std::to_string(line_no) +
                                         ": expected 5 fields");
    }
    AnnotationRecord r;
    r.item_id = fields[0];
    r.annotator = fields[1];
    try {
      size_t used = 0;
      r.relevance = std::stoi(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw Error(ErrorCode::kParse, "annotation line " + std::to_string(line_no) +
                                         ": relevance must be an integer");
    }
    if (r.relevance < -2 || r.relevance > 2) {
      throw Error(ErrorCode::kParse, "annotation line " + std::to_string(line_no) +
                                         ": relevance outside -2..+2");
    }
    r.implicit = ParseYesNo(fields[3], line_no);
    r.best_model = fields[4];
    if (!seen.insert({r.item_id, r.annotator}).second) {
      throw Error(ErrorCode::kParse, "annotation line " + std::to_string(line_no) +
                                         ": duplicate (item, annotator)");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AnnotationRecord> LoadAnnotationsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open annotations: " + path);
  return LoadAnnotations(in);
}

AgreementReport AnnotationAgreement(const std::vector<AnnotationRecord> &records) {
  std::set<std::string> annotators;
  for (const auto &r : records) annotators.insert(r.annotator);
  if (annotators.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "agreement needs exactly two annotators, found " +
                    std::to_string(annotators.size()));
  }
  AgreementReport report;
  report.annotator_a = *annotators.begin();
  report.annotator_b = *annotators.rbegin();
  std::map<std::string, const AnnotationRecord *> a, b;
  for (const auto &r : records) (r.annotator == report.annotator_a ? a : b)[r.item_id] = &r;
  std::vector<std::string> rel_a, rel_b, imp_a, imp_b, best_a, best_b;
  for (const auto &[item, ra] : a) {
    auto it = b.find(item);
    if (it == b.end()) continue;
    const AnnotationRecord *rb = it->second;
    rel_a.push_back(std::to_string(ra->relevance));
    rel_b.push_back(std::to_string(rb->relevance));
    imp_a.push_back(ra->implicit ? "yes" : "no");
    imp_b.push_back(rb->implicit ? "yes" : "no");
    best_a.push_back(ra->best_model);
    best_b.push_back(rb->best_model);
  }
  report.items = rel_a.size();
  if (report.items == 0) throw Error(ErrorCode::kMissingData, "annotators share no items");
  report.relevance_kappa = CohensKappa(rel_a, rel_b);
  report.implicit_kappa = CohensKappa(imp_a, imp_b);
  report.best_model_kappa = CohensKappa(best_a, best_b);
  return report;
}

// ---------------------------------------------------------------------------
// Corpus statistics

CorpusStats ComputeCorpusStats(const std::vector<ConnectResult> &results) {
  CorpusStats stats;
  stats.pairs = results.size();
  size_t hops = 0;
  size_t total_relations = 0;
  for (const auto &r : results) {
    if (r.verdict == Verdict::kDirect) {
      ++stats.linked_pairs;
      hops += 1;
      for (const auto &l : r.links) {
        ++stats.relation_counts[l.relation];
        ++total_relations;
      }
    } else if (r.verdict == Verdict::kMultihop && !r.paths.empty()) {
      ++stats.linked_pairs;
      hops += r.paths.front().hops.size();
      for (const auto &p : r.paths) {
        for (const auto &h : p.hops) {
          ++stats.relation_counts[h.relation.name];
          ++total_relations;
        }
      }
    }
  }
  if (stats.linked_pairs > 0) {
    stats.avg_hops = static_cast<double>(hops) / static_cast<double>(stats.linked_pairs);
  }
  for (const auto &[rel, count] : stats.relation_counts) {
    stats.relation_histogram[rel] =
        static_cast<double>(count) / static_cast<double>(total_relations);
  }
  return stats;
}

std::string FormatStatsTable(const std::vector<std::pair<std::string, CorpusStats>> &methods) {
  std::ostringstream out;
  constexpr int kLabel = 14;
  constexpr int kCol = 22;
  out << std::left << std::setw(kLabel) << "";
  for (const auto &[name, s] : methods) out << std::right << std::setw(kCol) << name;
  out << '\n';
  out << std::left << std::setw(kLabel) << "linked pairs";
  for (const auto &[name, s] : methods) out << std::right << std::setw(kCol) << s.linked_pairs;
  out << '\n';
  out << std::left << std::setw(kLabel) << "avg. hops";
  for (const auto &[name, s] : methods) {
    std::ostringstream v;
    if (s.avg_hops) {
      v << std::fixed << std::setprecision(2) << *s.avg_hops;
    } else {
      v << "-";
    }
    out << std::right << std::setw(kCol) << v.str();
  }
  out << '\n';
  // Most frequent relations per method.
  for (int rank = 0; rank < 3; ++rank) {
    out << std::left << std::setw(kLabel) << (rank == 0 ? "top relations" : "");
    for (const auto &[name, s] : methods) {
      std::vector<std::pair<std::string, size_t>> ranked(s.relation_counts.begin(),
                                                         s.relation_counts.end());
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const auto &a, const auto &b) { return a.second > b.second; });
      std::string cell = "-";
      if (rank < static_cast<int>(ranked.size())) {
        const auto &rel = ranked[rank].first;
        long pct = std::lround(100.0 * s.relation_histogram.at(rel));
        cell = rel + "(" + std::to_string(pct) + "%)";
      }
      out << std::right << std::setw(kCol) << cell;
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation settings

EvalSetting ParseEvalSetting(std::string_view text) {
  if (text == "a") return EvalSetting::kSilver;
  if (text == "b") return EvalSetting::kGoldNl;
  if (text == "c") return EvalSetting::kGoldPath;
  throw Error(ErrorCode::kInvalidArgument, "setting must be a, b or c");
}

const char *SettingKey(EvalSetting setting) {
  switch (setting) {
    case EvalSetting::kSilver: return "a";
    case EvalSetting::kGoldNl: return "b";
    case EvalSetting::kGoldPath: return "c";
  }
  return "a";
}

const char *SettingTitle(EvalSetting setting) {
  switch (setting) {
    case EvalSetting::kSilver: return "Generated Paths vs. Silver Paths";
    case EvalSetting::kGoldNl: return "Generated Paths-NL vs. Gold-NL";
    case EvalSetting::kGoldPath: return "Generated Paths vs. Gold Paths";
  }
  return "";
}

std::string GeneratedText(const std::vector<const ConnectResult *> &results, EvalSetting setting,
                          const TemplateTable *templates) {
  const bool natural = setting == EvalSetting::kGoldNl;
  if (natural && templates == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "setting (b) requires a template table");
  }
  std::vector<std::string> parts;
  for (const ConnectResult *r : results) {
    for (const auto &l : r->links) {
      Relation rel(l.relation);
      parts.push_back(natural ? templates->Render(r->pair.source.normalized, rel,
                                                  r->pair.target.normalized)
                              : r->pair.source.normalized + " " + l.relation + " " +
                                    r->pair.target.normalized);
    }
    for (const auto &p : r->paths) {
      parts.push_back(natural ? templates->Render(p) : LinearizePath(p));
    }
  }
  return Join(parts, ". ");
}

MethodScores ScoreSetting(EvalSetting setting, const std::vector<SentencePair> &corpus,
                          const std::vector<ResultRecord> &results, const EvalContext &context) {
  if (context.embeddings == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "evaluation requires embeddings");
  }
  const bool has_reference = std::any_of(corpus.begin(), corpus.end(), [&](const auto &p) {
    return setting == EvalSetting::kGoldPath ? p.gold_path.has_value()
                                             : p.gold_implicit.has_value();
  });
  if (!has_reference) {
    throw Error(ErrorCode::kMissingData,
                setting == EvalSetting::kGoldPath
                    ? "setting (c) needs gold_path annotations, which the corpus lacks"
                    : "the corpus carries no gold_implicit sentences");
  }
  if (setting == EvalSetting::kSilver &&
      (context.extractor == nullptr || context.classifier == nullptr)) {
    throw Error(ErrorCode::kInvalidArgument, "setting (a) requires an extractor and classifier");
  }

  std::map<std::string, std::vector<const ConnectResult *>> by_sentence;
  for (const auto &r : results) by_sentence[r.sentence_id].push_back(&r.result);

  MethodScores scores;
  double cos_sum = 0.0;
  Prf prf_sum;
  for (const auto &pair : corpus) {
    std::string reference;
    switch (setting) {
      case EvalSetting::kSilver:
        if (pair.gold_implicit) {
          reference = LinearizeTriples(BuildSilverPath(*pair.gold_implicit, *context.extractor,
                                                       *context.classifier, context.threshold)
                                           .triples);
        }
        break;
      case EvalSetting::kGoldNl:
        if (pair.gold_implicit) reference = *pair.gold_implicit;
        break;
      case EvalSetting::kGoldPath:
        if (pair.gold_path) reference = LinearizeTriples(*pair.gold_path);
        break;
    }
    auto it = by_sentence.find(pair.id);
    std::string generated;
    if (it != by_sentence.end()) generated = GeneratedText(it->second, setting, context.templates);
    if (Trim(reference).empty() || Trim(generated).empty()) {
      ++scores.skipped;
      continue;
    }
    cos_sum += EncodeAndCosim(generated, reference, *context.embeddings);
    Prf prf = TokenMatchF1(generated, reference, *context.embeddings);
    prf_sum.precision += prf.precision;
    prf_sum.recall += prf.recall;
    prf_sum.f1 += prf.f1;
    ++scores.items;
  }
  if (scores.items > 0) {
    const double n = static_cast<double>(scores.items);
    scores.cosim = cos_sum / n;
    scores.greedy_f1 = Prf{prf_sum.precision / n, prf_sum.recall / n, prf_sum.f1 / n, false};
  }
  return scores;
}

}  // namespace kpath
