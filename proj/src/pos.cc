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

#include "kpath/pos.h"

#include <fstream>
#include <sstream>

#include "kpath/error.h"
#include "kpath/text.h"

namespace kpath {
namespace {

const std::unordered_map<std::string, std::string> &BuiltinLexicon() {
  static const std::unordered_map<std::string, std::string> lexicon = [] {
    std::unordered_map<std::string, std::string> m;
    auto add = [&m](const char *tag, std::initializer_list<const char *> words) {
      for (const char *w : words) m.emplace(w, tag);
    };
    add("DET", {"a", "an", "the", "this", "that", "these", "those", "some", "any",
                "every", "each", "no", "all", "both", "either", "neither", "another",
                "such", "what", "which", "whose"});
    add("PRON", {"i", "me", "my", "mine", "you", "your", "yours", "he", "him", "his",
                 "she", "her", "hers", "it", "its", "we", "us", "our", "ours", "they",
                 "them", "their", "theirs", "myself", "yourself", "himself", "herself",
                 "itself", "ourselves", "themselves", "who", "whom", "someone",
                 "something", "anyone", "anything", "everyone", "everything",
                 "nobody", "nothing"});
    add("ADP", {"of", "in", "on", "at", "by", "for", "with", "about", "against",
                "between", "into", "through", "during", "before", "after", "above",
                "below", "to", "from", "up", "down", "over", "under", "near", "off",
                "out", "around", "without", "within", "across", "behind", "beside"});
    add("CONJ", {"and", "or", "but", "nor", "so", "yet", "because", "if", "while",
                 "although", "though", "unless", "since", "whether"});
    add("PRT", {"not", "n't", "'s"});
    add("NUM", {"one", "two", "three", "four", "five", "six", "seven", "eight",
                "nine", "ten", "hundred", "thousand", "million"});
    add("ADV", {"very", "too", "also", "often", "always", "never", "sometimes",
                "here", "there", "now", "then", "again", "still", "already", "soon",
                "just", "only", "even", "much", "more", "most", "less", "well",
                "quite", "rather", "almost"});
    add("VERB", {"be", "is", "are", "was", "were", "been", "am", "have", "has", "had",
                 "do", "does", "did", "go", "goes", "went", "make", "makes", "made",
                 "take", "takes", "took", "get", "gets", "got", "give", "gives",
                 "gave", "eat", "eats", "ate", "drink", "drinks", "drank", "run",
                 "runs", "ran", "walk", "walks", "bake", "bakes", "buy", "buys",
                 "bought", "sell", "sells", "sold", "cook", "cooks", "cut", "read",
                 "write", "wrote", "sleep", "sleeps", "slept", "play", "plays", "work",
                 "works", "learn", "learns", "teach", "study", "swim", "fly", "flies",
                 "drive", "drives", "drove", "ride", "sit", "stand", "open", "close",
                 "build", "break", "breaks", "broke", "grow", "grows", "grew", "kill",
                 "die", "dies", "live", "lives", "love", "loves", "like", "likes",
                 "hate", "want", "wants", "need", "needs", "use", "uses", "see",
                 "saw", "look", "watch", "hear", "listen", "speak", "say", "said",
                 "talk", "tell", "think", "know", "knew", "feel", "felt", "find",
                 "found", "help", "produce", "produces", "recycle", "recycles",
                 "protect", "protects", "pollute", "reduce", "increase", "pay",
                 "save", "spend", "wash", "clean", "throw", "catch", "jump", "dance",
                 "sing", "laugh", "cry", "smile", "relax", "rest", "wait", "travel",
                 "visit", "shop", "fight", "win", "lose", "lost", "pass", "fail",
                 "should", "would", "could", "can", "will", "may", "might", "must",
                 "shall", "play", "kick", "hit", "wear", "carry", "bring", "brought",
                 "send", "sent", "keep", "kept", "become", "became", "begin", "began",
                 "create", "destroy", "prepare", "heat", "boil", "fry", "mix"});
    add("ADJ", {"old", "new", "young", "good", "bad", "big", "small", "large",
                "little", "long", "short", "high", "low", "hot", "cold", "warm",
                "cool", "happy", "sad", "angry", "tired", "hungry", "thirsty",
                "full", "empty", "fast", "slow", "easy", "hard", "difficult",
                "important", "expensive", "cheap", "rich", "poor", "strong", "weak",
                "heavy", "light", "dark", "bright", "clean", "dirty", "wet", "dry",
                "loud", "quiet", "beautiful", "ugly", "dangerous", "safe", "healthy",
                "sick", "red", "blue", "green", "yellow", "black", "white", "sweet",
                "sour", "bitter", "soft", "loyal", "friendly", "useful", "useless",
                "environmental", "public", "private", "social", "political",
                "natural", "human", "free", "true", "false", "real", "sharp",
                "delicious", "fresh", "broken", "alive", "dead", "fun", "funny"});
    return m;
  }();
  return lexicon;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string ElementRegex(const std::string &element) {
  if (element == "*") return "(?:[A-Z]+ )*";
  if (element == "ANY") return "(?:[A-Z]+ )";
  std::string tag = element;
  std::string quant;
  if (!tag.empty() && (tag.back() == '+' || tag.back() == '*' || tag.back() == '?')) {
    quant = tag.back();
    tag.pop_back();
  }
  if (tag.empty()) throw Error(ErrorCode::kParse, "empty PoS pattern element");
  for (char c : tag) {
    if (c < 'A' || c > 'Z') throw Error(ErrorCode::kParse, "invalid PoS tag '" + tag + "'");
  }
  return "(?:" + tag + " )" + quant;
}

std::regex CompilePattern(const std::string &cell) {
  std::string source;
  for (const auto &raw_alt : Split(cell, '|')) {
    std::string alt = Trim(raw_alt);
    if (alt.empty()) throw Error(ErrorCode::kParse, "empty PoS pattern alternative in '" + cell + "'");
    std::string body;
    std::istringstream elements(alt);
    std::string element;
    while (elements >> element) {
      if (EndsWith(element, "-initial")) {
        body += ElementRegex(element.substr(0, element.size() - 8));
        body += ElementRegex("*");
      } else {
        body += ElementRegex(element);
      }
    }
    if (!source.empty()) source += "|";
    source += "(?:" + body + ")";
  }
  return std::regex(source, std::regex::ECMAScript | std::regex::optimize);
}

std::string TagString(const std::vector<std::string> &tags) {
  std::string out;
  for (const auto &t : tags) {
    out += t;
    out += ' ';
  }
  return out;
}

}  // namespace

LexiconTagger::LexiconTagger() : lexicon_(BuiltinLexicon()) {}

LexiconTagger::LexiconTagger(std::unordered_map<std::string, std::string> lexicon)
    : lexicon_(std::move(lexicon)) {}

LexiconTagger LexiconTagger::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open lexicon: " + path);
  std::unordered_map<std::string, std::string> lexicon;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::kParse, path + ": line " + std::to_string(line_no) +
                                         ": expected word<TAB>TAG");
    }
    lexicon[ToLower(Trim(fields[0]))] = Trim(fields[1]);
  }
  return LexiconTagger(std::move(lexicon));
}

std::string LexiconTagger::Tag(std::string_view word) const {
  std::string w = ToLower(word);
  auto it = lexicon_.find(w);
  if (it != lexicon_.end()) return it->second;
  if (w.size() > 5 && EndsWith(w, "ing")) return "VERB";
  if (w.size() > 4 && EndsWith(w, "ed")) return "VERB";
  if (w.size() > 4 && EndsWith(w, "ly")) return "ADV";
  return "NOUN";
}

std::vector<std::string> LexiconTagger::TagPhrase(std::string_view phrase) const {
  std::vector<std::string> tags;
  for (const auto &w : TokenWords(phrase)) tags.push_back(Tag(w));
  return tags;
}

PosPatternTable PosPatternTable::Default() {
  const std::string np = "DET? ADJ* NOUN+";
  const std::string np_or_verb = "VERB-initial | " + np;
  PosPatternTable table;
  for (const char *r : {"IsA", "AtLocation", "HasA", "Desires", "CapableOf"}) {
    table.Add(r, np, np);
  }
  table.Add("HasProperty", np, "ADV* ADJ+");
  for (const char *r : {"HasPrerequisite", "HasSubevent", "MotivatedByGoal", "UsedFor",
                        "Causes", "CausesDesire", "ReceivesAction"}) {
    table.Add(r, np_or_verb, np_or_verb);
  }
  return table;
}

PosPatternTable PosPatternTable::FromStream(std::istream &in) {
  PosPatternTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParse, "PoS table line " + std::to_string(line_no) +
                                         ": expected relation<TAB>head<TAB>tail");
    }
    table.Add(Trim(fields[0]), Trim(fields[1]), Trim(fields[2]));
  }
  return table;
}

PosPatternTable PosPatternTable::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open PoS table: " + path);
  return FromStream(in);
}

void PosPatternTable::Add(const std::string &relation, const std::string &head_pattern,
                          const std::string &tail_pattern) {
  rules_[relation].push_back(Rule{CompilePattern(head_pattern), CompilePattern(tail_pattern)});
}

bool PosPatternTable::HasRelation(std::string_view relation) const {
  return rules_.find(relation) != rules_.end();
}

bool PosPatternTable::Allows(std::string_view relation,
                             const std::vector<std::string> &head_tags,
                             const std::vector<std::string> &tail_tags) const {
  auto it = rules_.find(relation);
  if (it == rules_.end()) return true;
  const std::string head = TagString(head_tags);
  const std::string tail = TagString(tail_tags);
  for (const auto &rule : it->second) {
    if (std::regex_match(head, rule.head) && std::regex_match(tail, rule.tail)) return true;
  }
  return false;
}

bool PosFilterKeep(std::string_view head, std::string_view relation, std::string_view tail,
                   const PosPatternTable &table, const LexiconTagger &tagger) {
  return table.Allows(relation, tagger.TagPhrase(head), tagger.TagPhrase(tail));
}

}  // namespace kpath
