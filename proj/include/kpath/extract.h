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

#ifndef KPATH_EXTRACT_H_
#define KPATH_EXTRACT_H_

#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kpath/embed_store.h"
#include "kpath/kg_store.h"

namespace kpath {

struct ConceptMention {
  std::string surface;
  // Byte offsets [begin, end) in the sentence; both zero for pre-extracted
  // mentions, which carry no span.
  size_t begin = 0;
  size_t end = 0;
  Concept node;
};

// A candidate link between a concept of S1 (source) and one of S2 (target).
struct ConceptPair {
  Concept source;
  Concept target;

  bool operator==(const ConceptPair &o) const {
    return source == o.source && target == o.target;
  }
};

// Greedy longest-match concept spotter over a fixed vocabulary.
//
// Scans tokens left to right; at each position the longest n-gram
// (n <= max_ngram) found in the vocabulary wins and the scan resumes after
// it. N-grams made only of stopwords never match. When the exact n-gram is
// unknown, plural suffixes (-es, -s) on its last token are stripped as a
// lemma fallback.
class ConceptExtractor {
 public:
  ConceptExtractor(const std::vector<std::string> &vocab, StopwordSet stopwords,
                   int max_ngram = 4);

  std::vector<ConceptMention> Extract(std::string_view sentence) const;

  // Maps a surface string onto the vocabulary (exact, then suffix fallback).
  // Returns the empty string when there is no match.
  std::string MatchVocab(std::string_view text) const;

  bool InVocab(std::string_view node) const {
    return vocab_.count(std::string(node)) > 0;
  }
  const StopwordSet &stopwords() const { return stopwords_; }

 private:
  std::unordered_set<std::string> vocab_;
  StopwordSet stopwords_;
  int max_ngram_;
};

// Cross product of S1 and S2 concepts without identity pairs, deduplicated,
// in input order.
std::vector<ConceptPair> PairConcepts(const std::vector<ConceptMention> &s1,
                                      const std::vector<ConceptMention> &s2);

struct PreExtractedMentions {
  std::vector<ConceptMention> s1;
  std::vector<ConceptMention> s2;
};

struct PreExtracted {
  std::map<std::string, PreExtractedMentions> by_id;
  size_t dropped = 0;  // concepts not found in the vocabulary
};

// Reads JSON-lines `{id, s1_concepts: [...], s2_concepts: [...]}`. Unknown
// concepts are dropped and counted; duplicates collapse by normalized form.
// A record whose id is not in `corpus_ids` is an error.
PreExtracted LoadPreExtracted(std::istream &in, const std::set<std::string> &corpus_ids,
                              const ConceptExtractor &extractor);
PreExtracted LoadPreExtractedFile(const std::string &path,
                                  const std::set<std::string> &corpus_ids,
                                  const ConceptExtractor &extractor);

}  // namespace kpath

#endif  // KPATH_EXTRACT_H_
