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
#include "kpath/pos.h"

namespace kpath {
namespace {

TEST_CASE("lexicon and suffix tagging") {
  LexiconTagger t;
  CHECK(t.Tag("the") == "DET");
  CHECK(t.Tag("old") == "ADJ");
  CHECK(t.Tag("bake") == "VERB");
  CHECK(t.Tag("walking") == "VERB");
  CHECK(t.Tag("sing") == "VERB");  // lexicon entry
  CHECK(t.Tag("ring") == "NOUN");  // too short for the -ing rule
  CHECK(t.Tag("painted") == "VERB");
  CHECK(t.Tag("bed") == "NOUN");
  CHECK(t.Tag("quickly") == "ADV");
  CHECK(t.Tag("oven") == "NOUN");
  CHECK(t.TagPhrase("the old car") == std::vector<std::string>{"DET", "ADJ", "NOUN"});
}

TEST_CASE("pattern elements") {
  PosPatternTable table;
  table.Add("R", "DET? ADJ* NOUN+", "VERB-initial");
  CHECK(table.Allows("R", {"NOUN"}, {"VERB"}));
  CHECK(table.Allows("R", {"DET", "ADJ", "ADJ", "NOUN", "NOUN"}, {"VERB", "NOUN", "ADP"}));
  CHECK_FALSE(table.Allows("R", {"ADJ"}, {"VERB"}));
  CHECK_FALSE(table.Allows("R", {"NOUN"}, {"NOUN", "VERB"}));
  CHECK_FALSE(table.Allows("R", {"DET", "DET", "NOUN"}, {"VERB"}));
  table.Add("S", "ANY NOUN | *", "VERB");
  CHECK(table.Allows("S", {"ADV", "NOUN"}, {"VERB"}));
  CHECK(table.Allows("S", {}, {"VERB"}));
  CHECK(table.Allows("Unlisted", {"ADV"}, {"ADV"}));
  CHECK_THROWS_AS(table.Add("T", "noun", "NOUN"), Error);
  CHECK_THROWS_AS(table.Add("T", "NOUN |", "NOUN"), Error);
}

TEST_CASE("default table") {
  auto table = PosPatternTable::Default();
  LexiconTagger tagger;
  CHECK(PosFilterKeep("car", "HasA", "engine", table, tagger));
  CHECK_FALSE(PosFilterKeep("car", "HasA", "old", table, tagger));
  CHECK(PosFilterKeep("car", "HasProperty", "very old", table, tagger));
  CHECK_FALSE(PosFilterKeep("car", "HasProperty", "engine", table, tagger));
  CHECK(PosFilterKeep("oven", "UsedFor", "bake bread", table, tagger));
  CHECK(PosFilterKeep("oven", "UsedFor", "baking", table, tagger));
  CHECK_FALSE(PosFilterKeep("oven", "UsedFor", "very old", table, tagger));
  CHECK(table.HasRelation("IsA"));
  CHECK_FALSE(table.HasRelation("PartOf"));
  CHECK(PosFilterKeep("recycle", "PartOf", "very", table, tagger));
}

TEST_CASE("table files") {
  std::istringstream in("# relation head tail\nIsA\tNOUN+\tNOUN+\n");
  auto table = PosPatternTable::FromStream(in);
  CHECK(table.Allows("IsA", {"NOUN"}, {"NOUN"}));
  CHECK_FALSE(table.Allows("IsA", {"ADJ"}, {"NOUN"}));
  std::istringstream bad("IsA\tNOUN\n");
  CHECK_THROWS_AS(PosPatternTable::FromStream(bad), Error);
  CHECK_THROWS_AS(PosPatternTable::FromFile("/nonexistent"), Error);
}

}  // namespace
}  // namespace kpath
