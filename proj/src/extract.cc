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

#include "kpath/extract.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {

ConceptExtractor::ConceptExtractor(const std::vector<std::string> &vocab,
                                   StopwordSet stopwords, int max_ngram)
    : vocab_(vocab.begin(), vocab.end()),
      stopwords_(std::move(stopwords)),
      max_ngram_(max_ngram) {
  if (vocab_.empty()) throw Error(ErrorCode::kInvalidArgument, "extractor vocabulary is empty");
  if (max_ngram_ < 1) throw Error(ErrorCode::kInvalidArgument, "max_ngram must be >= 1");
}

std::string ConceptExtractor::MatchVocab(std::string_view text) const {
  std::string key;
  try {
    key = NormalizeConcept(text).normalized;
  } catch (const Error &) {
    return {};
  }
  if (vocab_.count(key)) return key;
  auto strip = [&](std::string_view suffix) -> std::string {
    if (key.size() > suffix.size() + 1 &&
        key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
      std::string stem = key.substr(0, key.size() - suffix.size());
      if (vocab_.count(stem)) return stem;
    }
    return {};
  };
  if (auto s = strip("es"); !s.empty()) return s;
  if (key.size() > 2 && key.compare(key.size() - 2, 2, "ss") == 0) return {};
  return strip("s");
}

std::vector<ConceptMention> ConceptExtractor::Extract(std::string_view sentence) const {
  std::vector<ConceptMention> mentions;
  const auto tokens = Tokenize(sentence);
  size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    size_t longest = std::min<size_t>(max_ngram_, tokens.size() - i);
    for (size_t n = longest; n >= 1; --n) {
      bool all_stop = true;
      std::vector<std::string> words;
      for (size_t k = i; k < i + n; ++k) {
        words.push_back(tokens[k].text);
        if (!stopwords_.Contains(tokens[k].text)) all_stop = false;
      }
      if (all_stop) continue;
      std::string node = MatchVocab(Join(words, " "));
      if (node.empty()) continue;
      ConceptMention m;
      m.begin = tokens[i].begin;
      m.end = tokens[i + n - 1].end;
      m.surface = std::string(sentence.substr(m.begin, m.end - m.begin));
      m.node = Concept{node, m.surface};
      mentions.push_back(std::move(m));
      i += n;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }
  return mentions;
}

std::vector<ConceptPair> PairConcepts(const std::vector<ConceptMention> &s1,
                                      const std::vector<ConceptMention> &s2) {
  std::vector<ConceptPair> pairs;
  for (const auto &a : s1) {
    for (const auto &b : s2) {
      if (a.node == b.node) continue;
      ConceptPair p{a.node, b.node};
      if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

PreExtracted LoadPreExtracted(std::istream &in, const std::set<std::string> &corpus_ids,
                              const ConceptExtractor &extractor) {
  using nlohmann::json;
  PreExtracted out;
  std::string line;
  size_t line_no = 0;
  auto convert = [&](const json &list, std::vector<ConceptMention> &dest) {
    for (const auto &item : list) {
      std::string surface = item.get<std::string>();
      std::string node = extractor.MatchVocab(surface);
      if (node.empty()) {
        ++out.dropped;
        continue;
      }
      bool dup = std::any_of(dest.begin(), dest.end(),
                             [&](const ConceptMention &m) { return m.node.normalized == node; });
      if (dup) continue;
      ConceptMention m;
      m.surface = surface;
      m.node = Concept{node, surface};
      dest.push_back(std::move(m));
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      json j = json::parse(line);
      std::string id = j.at("id").get<std::string>();
      if (!corpus_ids.count(id)) {
        throw Error(ErrorCode::kParse, "pre-extracted line " + std::to_string(line_no) +
                                           ": unknown sentence id '" + id + "'");
      }
      PreExtractedMentions &m = out.by_id[id];
      convert(j.value("s1_concepts", json::array()), m.s1);
      convert(j.value("s2_concepts", json::array()), m.s2);
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParse,
                  "pre-extracted line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

PreExtracted LoadPreExtractedFile(const std::string &path,
                                  const std::set<std::string> &corpus_ids,
                                  const ConceptExtractor &extractor) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open pre-extracted concepts: " + path);
  return LoadPreExtracted(in, corpus_ids, extractor);
}

}  // namespace kpath
