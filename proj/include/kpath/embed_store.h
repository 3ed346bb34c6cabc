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

#ifndef KPATH_EMBED_STORE_H_
#define KPATH_EMBED_STORE_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kpath {

// Built-in English stopword list.
const std::vector<std::string> &DefaultStopwords();

class StopwordSet {
 public:
  StopwordSet();  // the built-in list
  explicit StopwordSet(const std::vector<std::string> &words);
  static StopwordSet FromFile(const std::string &path);

  bool Contains(std::string_view word) const {
    return words_.count(std::string(word)) > 0;
  }
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Mean of the in-vocabulary, non-stopword token vectors of a phrase.
struct PhraseVector {
  std::vector<double> vector;
  double coverage = 0.0;  // found / non-stopword tokens

  bool IsZero() const;
};

// Static word-vector table (word2vec/numberbatch text format).
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  EmbeddingStore(size_t dim, std::unordered_map<std::string, std::vector<double>> table,
                 StopwordSet stopwords = StopwordSet());

  // First line `count dim`, then exactly `count` lines `word v1 .. v_dim`.
  // Duplicate words: the last occurrence wins.
  static EmbeddingStore Load(std::istream &in, StopwordSet stopwords = StopwordSet());
  static EmbeddingStore LoadFile(const std::string &path,
                                 StopwordSet stopwords = StopwordSet());

  size_t dim() const { return dim_; }
  size_t size() const { return table_.size(); }
  const StopwordSet &stopwords() const { return stopwords_; }

  // nullptr when the word is unknown.
  const std::vector<double> *Lookup(std::string_view word) const;

  // Encodes a phrase by averaging its non-stopword in-vocabulary tokens.
  PhraseVector Encode(std::string_view phrase) const;

  // Cosine of the two encoded phrases.
  double Similarity(std::string_view a, std::string_view b) const;

 private:
  size_t dim_ = 0;
  std::unordered_map<std::string, std::vector<double>> table_;
  StopwordSet stopwords_;
};

// Cosine similarity; 0.0 when either vector is zero. Throws on a dimension
// mismatch.
double Cosine(const std::vector<double> &u, const std::vector<double> &v);
double Cosine(const PhraseVector &u, const PhraseVector &v);

}  // namespace kpath

#endif  // KPATH_EMBED_STORE_H_
