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

#ifndef KPATH_TEXT_H_
#define KPATH_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kpath {

// A word token with byte offsets into the source text.
struct Token {
  std::string text;   // lowercased
  std::string surface;
  size_t begin = 0;
  size_t end = 0;
};

// Splits text into word tokens. Letters, digits, apostrophes and inner
// hyphens/underscores belong to words; everything else separates them.
std::vector<Token> Tokenize(std::string_view text);

// Lowercased word strings of Tokenize(text).
std::vector<std::string> TokenWords(std::string_view text);

std::string ToLower(std::string_view text);
std::string Trim(std::string_view text);
std::vector<std::string> Split(std::string_view text, char sep);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

}  // namespace kpath

#endif  // KPATH_TEXT_H_
