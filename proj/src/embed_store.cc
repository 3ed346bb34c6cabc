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

#include "kpath/embed_store.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {

const std::vector<std::string> &DefaultStopwords() {
  static const std::vector<std::string> words = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "your", "yours", "yourself", "yourselves", "he", "him", "his",
      "himself", "she", "her", "hers", "herself", "it", "its", "itself",
      "they", "them", "their", "theirs", "themselves", "what", "which",
      "who", "whom", "this", "that", "these", "those", "am", "is", "are",
      "was", "were", "be", "been", "being", "have", "has", "had", "having",
      "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if",
      "or", "because", "as", "until", "while", "of", "at", "by", "for",
      "with", "about", "against", "between", "into", "through", "during",
      "before", "after", "above", "below", "to", "from", "up", "down", "in",
      "out", "on", "off", "over", "under", "again", "further", "then",
      "once", "here", "there", "when", "where", "why", "how", "all", "any",
      "both", "each", "few", "more", "most", "other", "some", "such", "no",
      "nor", "not", "only", "own", "same", "so", "than", "too", "very", "s",
      "t", "can", "will", "just", "don", "should", "now", "would", "could",
      "shall", "may", "might", "must", "also", "yet", "ever", "every",
      "much", "many", "one", "upon", "per", "via", "etc", "let", "us",
      "i'm", "it's", "don't", "can't", "won't", "isn't", "aren't", "wasn't",
      "doesn't", "didn't", "shouldn't", "wouldn't", "couldn't"};
  return words;
}

StopwordSet::StopwordSet() : StopwordSet(DefaultStopwords()) {}

StopwordSet::StopwordSet(const std::vector<std::string> &words) {
  for (const auto &w : words) words_.insert(ToLower(w));
}

StopwordSet StopwordSet::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open stopword file: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = Trim(line);
    if (!w.empty() && w[0] != '#') words.push_back(w);
  }
  return StopwordSet(words);
}

bool PhraseVector::IsZero() const {
  return std::all_of(vector.begin(), vector.end(), [](double x) { return x == 0.0; });
}

EmbeddingStore::EmbeddingStore(size_t dim,
                               std::unordered_map<std::string, std::vector<double>> table,
                               StopwordSet stopwords)
    : dim_(dim), table_(std::move(table)), stopwords_(std::move(stopwords)) {
  if (dim_ == 0) throw Error(ErrorCode::kInvalidArgument, "embedding dim must be positive");
  for (const auto &[word, vec] : table_) {
    if (vec.size() != dim_) {
      throw Error(ErrorCode::kInvalidArgument, "vector for '" + word + "' has wrong dimension");
    }
  }
}

EmbeddingStore EmbeddingStore::Load(std::istream &in, StopwordSet stopwords) {
  std::string line;
  size_t line_no = 0;
  size_t count = 0, dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) break;
  }
  {
    std::istringstream header(line);
    if (!(header >> count >> dim) || dim == 0) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected header 'count dim'");
    }
  }

  std::unordered_map<std::string, std::vector<double>> table;
  table.reserve(count);
  size_t read = 0;
  while (read < count && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const char *p = line.data();
    const char *end = p + line.size();
    while (p < end && *p == ' ') ++p;
    const char *word_end = p;
    while (word_end < end && *word_end != ' ' && *word_end != '\t') ++word_end;
    std::string word = ToLower(std::string_view(p, word_end - p));
    std::vector<double> vec;
    vec.reserve(dim);
    p = word_end;
    while (true) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p >= end) break;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": invalid number");
      }
      vec.push_back(v);
      p = next;
    }
    if (vec.size() != dim) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(dim) + " values, got " +
                                         std::to_string(vec.size()));
    }
    table[word] = std::move(vec);
    ++read;
  }
  if (read != count) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(count) +
                                       " vectors, found " + std::to_string(read));
  }
  return EmbeddingStore(dim, std::move(table), std::move(stopwords));
}

EmbeddingStore EmbeddingStore::LoadFile(const std::string &path, StopwordSet stopwords) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open embeddings file: " + path);
  try {
    return Load(in, std::move(stopwords));
  } catch (const Error &e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

const std::vector<double> *EmbeddingStore::Lookup(std::string_view word) const {
  auto it = table_.find(std::string(word));
  return it == table_.end() ? nullptr : &it->second;
}

PhraseVector EmbeddingStore::Encode(std::string_view phrase) const {
  PhraseVector out;
  out.vector.assign(dim_, 0.0);
  size_t content = 0, found = 0;
  for (const auto &word : TokenWords(phrase)) {
    if (stopwords_.Contains(word)) continue;
    ++content;
    const auto *vec = Lookup(word);
    if (vec == nullptr) continue;
    ++found;
    for (size_t i = 0; i < dim_; ++i) out.vector[i] += (*vec)[i];
  }
  if (found > 0) {
    for (double &x : out.vector) x /= static_cast<double>(found);
    out.coverage = static_cast<double>(found) / static_cast<double>(content);
  }
  return out;
}

double EmbeddingStore::Similarity(std::string_view a, std::string_view b) const {
  return Cosine(Encode(a), Encode(b));
}

double Cosine(const std::vector<double> &u, const std::vector<double> &v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cosine: dimension mismatch (" +
                                                 std::to_string(u.size()) + " vs " +
                                                 std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

double Cosine(const PhraseVector &u, const PhraseVector &v) {
  return Cosine(u.vector, v.vector);
}

}  // namespace kpath
