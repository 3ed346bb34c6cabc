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

#include "kpath/text.h"

#include <cctype>

namespace kpath {
namespace {

bool IsWordChar(unsigned char c) {
  // Bytes >= 0x80 are parts of UTF-8 sequences; keep them inside words.
  return std::isalnum(c) || c == '\'' || c >= 0x80;
}

bool IsJoiner(unsigned char c) { return c == '-' || c == '_'; }

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!IsWordChar(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n) {
      unsigned char c = text[j];
      if (IsWordChar(c)) {
        ++j;
      } else if (IsJoiner(c) && j + 1 < n && IsWordChar(text[j + 1])) {
        ++j;
      } else {
        break;
      }
    }
    // Drop leading/trailing apostrophes (quotes).
    size_t b = i, e = j;
    while (b < e && text[b] == '\'') ++b;
    while (e > b && text[e - 1] == '\'') --e;
    if (b < e) {
      Token t;
      t.surface = std::string(text.substr(b, e - b));
      t.text = ToLower(t.surface);
      t.begin = b;
      t.end = e;
      tokens.push_back(std::move(t));
    }
    i = j;
  }
  return tokens;
}

std::vector<std::string> TokenWords(std::string_view text) {
  std::vector<std::string> words;
  for (auto &t : Tokenize(text)) words.push_back(std::move(t.text));
  return words;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace kpath
