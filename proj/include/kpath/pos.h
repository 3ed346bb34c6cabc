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

#ifndef KPATH_POS_H_
#define KPATH_POS_H_

#include <istream>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kpath {

// Word -> coarse tag (NOUN, VERB, ADJ, ADV, DET, PRON, ADP, CONJ, NUM, PRT)
// from a small lexicon. Unknown words fall back to suffix rules:
// -ing/-ed -> VERB, -ly -> ADV, otherwise NOUN.
class LexiconTagger {
 public:
  LexiconTagger();  // built-in lexicon
  explicit LexiconTagger(std::unordered_map<std::string, std::string> lexicon);
  // `word<TAB>TAG` per line.
  static LexiconTagger FromFile(const std::string &path);

  std::string Tag(std::string_view word) const;
  std::vector<std::string> TagPhrase(std::string_view phrase) const;

 private:
  std::unordered_map<std::string, std::string> lexicon_;
};

// Per-relation allowed (head, tail) tag-sequence patterns.
//
// A pattern cell holds alternatives separated by '|'. Each alternative is a
// space-separated sequence of elements: TAG, TAG+, TAG*, TAG?, ANY (one
// arbitrary tag) or '*' (any tags, possibly none). "VERB-initial" is
// shorthand for "VERB *".
class PosPatternTable {
 public:
  PosPatternTable() = default;

  static PosPatternTable Default();
  // `relation<TAB>head_pattern<TAB>tail_pattern` lines; '#' comments.
  static PosPatternTable FromStream(std::istream &in);
  static PosPatternTable FromFile(const std::string &path);

  void Add(const std::string &relation, const std::string &head_pattern,
           const std::string &tail_pattern);

  bool HasRelation(std::string_view relation) const;
  // Relations absent from the table allow everything.
  bool Allows(std::string_view relation, const std::vector<std::string> &head_tags,
              const std::vector<std::string> &tail_tags) const;

 private:
  struct Rule {
    std::regex head;
    std::regex tail;
  };
  std::map<std::string, std::vector<Rule>, std::less<>> rules_;
};

// keep (true) iff the tag sequences of head and tail match a pattern of
// the relation (the relation's base name; inversion is handled by callers
// passing the triple in stored orientation).
bool PosFilterKeep(std::string_view head, std::string_view relation, std::string_view tail,
                   const PosPatternTable &table, const LexiconTagger &tagger);

}  // namespace kpath

#endif  // KPATH_POS_H_
