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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kpath/embed_store.h"
#include "kpath/error.h"

namespace kpath {
namespace {

EmbeddingStore Parse(const std::string &text) {
  std::istringstream in(text);
  return EmbeddingStore::Load(in);
}

TEST_CASE("load text vectors") {
  auto e = Parse("3 2\ncar 1 0\nEngine 0 1\ncar 2 0\n");
  CHECK(e.dim() == 2);
  CHECK(e.size() == 2);
  REQUIRE(e.Lookup("car") != nullptr);
  CHECK((*e.Lookup("car"))[0] == 2.0);
  CHECK(e.Lookup("engine") != nullptr);
  CHECK(e.Lookup("oven") == nullptr);
}

TEST_CASE("malformed vector files") {
  CHECK_THROWS_AS(Parse("x y\n"), Error);
  CHECK_THROWS_AS(Parse("2 2\ncar 1 0\n"), Error);
  CHECK_THROWS_AS(Parse("1 2\ncar 1\n"), Error);
  CHECK_THROWS_AS(Parse("1 2\ncar 1 z\n"), Error);
  CHECK_THROWS_AS(EmbeddingStore::LoadFile("/nonexistent.vec"), Error);
}

TEST_CASE("phrase encoding skips stopwords and reports coverage") {
  auto e = Parse("3 2\nenvironmental 1 0\nprotection 0 1\nwaste 1 1\n");
  auto v = e.Encode("the environmental protection");
  CHECK(v.vector == std::vector<double>{0.5, 0.5});
  CHECK(v.coverage == 1.0);
  auto partial = e.Encode("waste management");
  CHECK(partial.vector == std::vector<double>{1.0, 1.0});
  CHECK(partial.coverage == 0.5);
  auto none = e.Encode("the of and");
  CHECK(none.IsZero());
  CHECK(none.coverage == 0.0);
  CHECK(e.Similarity("environmental protection", "waste") == doctest::Approx(1.0));
  CHECK(e.Similarity("unknown", "waste") == 0.0);
}

TEST_CASE("cosine") {
  CHECK(Cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
  CHECK(Cosine(std::vector<double>{1, 2}, std::vector<double>{2, 4}) == doctest::Approx(1.0));
  CHECK(Cosine(std::vector<double>{1, 0}, std::vector<double>{-1, 0}) == -1.0);
  CHECK(Cosine(std::vector<double>{0, 0}, std::vector<double>{1, 0}) == 0.0);
  CHECK(Cosine(std::vector<double>{3, 4}, std::vector<double>{4, 3}) ==
        doctest::Approx(24.0 / 25.0).epsilon(1e-12));
  CHECK_THROWS_AS(Cosine(std::vector<double>{1}, std::vector<double>{1, 0}), Error);
}

TEST_CASE("stopword sets") {
  StopwordSet def;
  CHECK(def.Contains("the"));
  CHECK_FALSE(def.Contains("oven"));
  StopwordSet custom({"oven"});
  CHECK(custom.Contains("oven"));
  CHECK_FALSE(custom.Contains("the"));
  CHECK(custom.size() == 1);
}

}  // namespace
}  // namespace kpath
