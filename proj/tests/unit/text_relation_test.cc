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

#include <sstream>

#include "doctest.h"
#include "kpath/error.h"
#include "kpath/relation.h"
#include "kpath/text.h"

namespace kpath {
namespace {

TEST_CASE("tokenize keeps offsets, joiners and apostrophes") {
  auto tokens = Tokenize("The car's  well-known 'engine'.");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].text == "the");
  CHECK(tokens[0].surface == "The");
  CHECK(tokens[1].text == "car's");
  CHECK(tokens[2].text == "well-known");
  CHECK(tokens[3].text == "engine");
  CHECK(tokens[3].begin == 23);
  CHECK(tokens[3].end == 29);
  CHECK(Tokenize("  ...  ").empty());
}

TEST_CASE("string helpers") {
  CHECK(ToLower("AbC") == "abc");
  CHECK(Trim("  x y \t") == "x y");
  CHECK(Split("a\tb\t\tc", '\t') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(Join({"a", "b", "c"}, ". ") == "a. b. c");
  CHECK(Join({}, ",").empty());
}

TEST_CASE("relation display and parsing round trip") {
  Relation r("UsedFor");
  CHECK(r.ToString() == "UsedFor");
  CHECK(r.Inverse().ToString() == "UsedFor^-1");
  CHECK(Relation::Parse("UsedFor^-1") == r.Inverse());
  CHECK(Relation::Parse("UsedFor") == r);
  CHECK(r.Inverse().Inverse() == r);
  CHECK_THROWS_AS(Relation::Parse(""), Error);
  CHECK(Relation("RelatedTo").IsVague());
  CHECK(Relation("Random").IsRandom());
}

TEST_CASE("built-in inventories") {
  auto cn = RelationInventory::Cn13();
  CHECK(cn.names().size() == 14);
  CHECK(cn.Contains("Random"));
  CHECK_FALSE(cn.Contains("RelatedTo"));
  CHECK(cn.ChainRelations().size() == 13);
  CHECK(cn.ClassifierLabels().size() == 14);
  CHECK(cn.ClassifierLabels().back() == "Random");

  auto base = RelationInventory::Baseline();
  CHECK(base.Contains("RelatedTo"));
  CHECK(base.Contains("HasContext"));
  CHECK(base.ChainRelations().size() == 13);
}

TEST_CASE("inventory from a stream") {
  std::istringstream in("# comment\nIsA\nPartOf\n\nIsA\nRandom\n");
  auto inv = RelationInventory::FromStream(in);
  CHECK(inv.names() == std::vector<std::string>{"IsA", "PartOf", "Random"});
  CHECK(inv.ChainRelations() == std::vector<std::string>{"IsA", "PartOf"});
  CHECK(inv.IndexOf("PartOf") == 1);
  CHECK(inv.IndexOf("Nope") == inv.names().size());

  std::istringstream bad("Has A\n");
  CHECK_THROWS_AS(RelationInventory::FromStream(bad), Error);
  CHECK_THROWS_AS(RelationInventory::FromFile("/nonexistent/inventory"), Error);
}

}  // namespace
}  // namespace kpath
