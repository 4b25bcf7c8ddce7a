/*
 * Copyright 2026 Filature Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "filature/errors.hpp"
#include "filature/lexicon.hpp"
#include "filature/types.hpp"
#include "filature/unicode.hpp"
#include "helpers.hpp"

using filature::Lexicon;
using filature::Match;
using filature::ReactionType;
using filature::SlotType;

namespace {

std::string lexicon_json(const std::string& rules) {
  return R"({"language": "fr", "rules": [)" + rules + "]}";
}

std::string keyword_rule(const std::string& id, const std::string& target,
                         const std::string& pattern) {
  return R"({"rule_id": ")" + id + R"(", "target": ")" + target +
         R"(", "match_kind": "keyword", "pattern": ")" + pattern + R"("})";
}

Lexicon default_lexicon() {
  return filature::load_lexicon(
      testutil::read_file(testutil::data_path("lexicons/fr_default.json")));
}

const Match* find_match(const std::vector<Match>& matches,
                        const std::string& rule_id) {
  for (const auto& m : matches) {
    if (m.rule_id == rule_id) return &m;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("default lexicon loads and covers every target") {
  const Lexicon lexicon = default_lexicon();
  CHECK(lexicon.language() == "fr");
  CHECK(lexicon.rules().size() >= 23);

  std::set<SlotType> slots;
  std::set<ReactionType> reactions;
  for (const auto& rule : lexicon.rules()) {
    if (std::holds_alternative<SlotType>(rule.target)) {
      slots.insert(std::get<SlotType>(rule.target));
    } else {
      reactions.insert(std::get<ReactionType>(rule.target));
    }
  }
  CHECK(slots.size() == filature::kSlotTypeCount);
  CHECK(reactions.size() == filature::kReactionTypeCount);
}

TEST_CASE("greeting keyword matches at character offsets") {
  const Lexicon lexicon = default_lexicon();
  const auto matches = filature::match_rules(
      "Bonjour, désolée, je ne connais pas ton problème", lexicon);
  const Match* m = find_match(matches, "greet-bonjour");
  REQUIRE(m != nullptr);
  CHECK(m->start == 0);
  CHECK(m->end == 7);
  CHECK(std::get<SlotType>(m->target) == SlotType::OpeningGreeting);
}

TEST_CASE("encouragement keyword fires on a reply sentence") {
  const Lexicon lexicon = default_lexicon();
  const auto matches =
      filature::match_rules("Je te souhaite bon courage", lexicon);
  const Match* m = find_match(matches, "react-courage");
  REQUIRE(m != nullptr);
  CHECK(std::get<ReactionType>(m->target) ==
        ReactionType::EncouragementCompliment);
  CHECK(m->start == 15);
  CHECK(m->end == 26);
}

TEST_CASE("offsets count characters, not bytes") {
  const Lexicon lexicon = default_lexicon();
  // Four chars of prefix, seven bytes of it.
  const auto matches = filature::match_rules("ééé bonjour tout va", lexicon);
  const Match* m = find_match(matches, "greet-bonjour");
  REQUIRE(m != nullptr);
  CHECK(m->start == 4);
  CHECK(m->end == 11);
}

TEST_CASE("matching is case-insensitive through folding") {
  const Lexicon lexicon = default_lexicon();
  CHECK(find_match(filature::match_rules("BONJOUR les amis", lexicon),
                   "greet-bonjour") != nullptr);
  // Regex rules are authored lowercase; the body folds to meet them,
  // accented capitals included.
  CHECK(find_match(filature::match_rules("je suis DÉPRIMÉE", lexicon),
                   "psy-deprime") != nullptr);
  CHECK(find_match(filature::match_rules("J'AI 33 ANS", lexicon),
                   "ident-age") != nullptr);
}

TEST_CASE("keyword matches respect word boundaries") {
  const Lexicon lexicon = filature::load_lexicon(
      lexicon_json(keyword_rule("r-chat", "HealthState", "chat")));
  CHECK(filature::match_rules("le chaton dort", lexicon).empty());
  CHECK(filature::match_rules("l'achat du jour", lexicon).empty());
  CHECK(filature::match_rules("le chat dort", lexicon).size() == 1);
  CHECK(filature::match_rules("chat", lexicon).size() == 1);
  CHECK(filature::match_rules("un chat, oui", lexicon).size() == 1);
  // Boundary characters are judged on code points, not bytes.
  CHECK(filature::match_rules("le chaté dort", lexicon).empty());
}

TEST_CASE("anchored rules only fire near their end of the body") {
  const Lexicon lexicon = default_lexicon();
  SUBCASE("greeting far from the start is ignored") {
    const std::string padding(80, 'x');
    const auto matches =
        filature::match_rules(padding + " bonjour tout le monde", lexicon);
    CHECK(find_match(matches, "greet-bonjour") == nullptr);
  }
  SUBCASE("closing far from the end is ignored") {
    const std::string padding(150, 'x');
    const auto matches =
        filature::match_rules("à bientôt " + padding, lexicon);
    CHECK(find_match(matches, "close-bientot") == nullptr);
    CHECK(find_match(filature::match_rules("voilà, à bientôt", lexicon),
                     "close-bientot") != nullptr);
  }
}

TEST_CASE("empty body yields no matches") {
  CHECK(filature::match_rules("", default_lexicon()).empty());
}

TEST_CASE("load_lexicon rejects malformed rule files") {
  SUBCASE("duplicate rule id") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            keyword_rule("r1", "Identity", "a") + "," +
            keyword_rule("r1", "Identity", "b"))),
        filature::DuplicateId);
  }
  SUBCASE("empty pattern") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(keyword_rule("r1", "Identity",
                                                         ""))),
        filature::InvalidRule);
  }
  SUBCASE("unknown target") {
    CHECK_THROWS_AS(
        filature::load_lexicon(
            lexicon_json(keyword_rule("r1", "Snack", "a"))),
        filature::InvalidRule);
  }
  SUBCASE("unknown match kind") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            R"({"rule_id": "r1", "target": "Identity",
                "match_kind": "glob", "pattern": "a"})")),
        filature::InvalidRule);
  }
  SUBCASE("regex that does not compile") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            R"({"rule_id": "r1", "target": "Identity",
                "match_kind": "regex", "pattern": "("})")),
        filature::InvalidRule);
  }
  SUBCASE("unknown anchor kind") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            R"({"rule_id": "r1", "target": "Identity", "match_kind": "keyword",
                "pattern": "a", "anchor": {"kind": "Sideways", "window": 5}})")),
        filature::InvalidRule);
  }
  SUBCASE("anchored rule with zero window") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            R"({"rule_id": "r1", "target": "Identity", "match_kind": "keyword",
                "pattern": "a",
                "anchor": {"kind": "MessageInitial", "window": 0}})")),
        filature::InvalidRule);
  }
  SUBCASE("unknown rule field") {
    CHECK_THROWS_AS(
        filature::load_lexicon(lexicon_json(
            R"({"rule_id": "r1", "target": "Identity", "match_kind": "keyword",
                "pattern": "a", "color": "blue"})")),
        filature::ParseError);
  }
  SUBCASE("not json at all") {
    CHECK_THROWS_AS(filature::load_lexicon("nope"), filature::ParseError);
  }
}

TEST_CASE("matching is deterministic") {
  const Lexicon lexicon = default_lexicon();
  const std::string body =
      "kikou à tous, je suis dépressive, j'aimerais vos témoignages, "
      "merci d'avance :)";
  const auto first = filature::match_rules(body, lexicon);
  const auto second = filature::match_rules(body, lexicon);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].rule_id == second[i].rule_id);
    CHECK(first[i].start == second[i].start);
    CHECK(first[i].end == second[i].end);
  }
}

TEST_CASE("matches come out in rule order then span order") {
  const Lexicon lexicon = default_lexicon();
  const auto matches = filature::match_rules(
      "bonjour bonjour, je cherche du soutien, salut", lexicon);
  std::vector<std::size_t> rule_index;
  for (const auto& m : matches) {
    const auto& rules = lexicon.rules();
    const auto it = std::find_if(
        rules.begin(), rules.end(),
        [&](const auto& rule) { return rule.rule_id == m.rule_id; });
    REQUIRE(it != rules.end());
    rule_index.push_back(static_cast<std::size_t>(it - rules.begin()));
  }
  for (std::size_t i = 1; i < matches.size(); ++i) {
    const bool ordered =
        rule_index[i - 1] < rule_index[i] ||
        (rule_index[i - 1] == rule_index[i] &&
         matches[i - 1].start <= matches[i].start);
    CHECK(ordered);
  }
  // Both occurrences of the repeated greeting are reported.
  std::size_t bonjour_hits = 0;
  for (const auto& m : matches) {
    if (m.rule_id == "greet-bonjour") ++bonjour_hits;
  }
  CHECK(bonjour_hits == 2);
}

TEST_CASE("appending a rule never disturbs existing matches") {
  const std::string base_rules =
      keyword_rule("r-sante", "HealthState", "malade") + "," +
      keyword_rule("r-merci", "AnticipatoryThanks", "merci");
  const Lexicon small = filature::load_lexicon(lexicon_json(base_rules));
  const Lexicon larger = filature::load_lexicon(lexicon_json(
      base_rules + "," + keyword_rule("r-extra", "Closing", "bientôt")));

  std::mt19937 rng(7);
  const auto& phrases = testutil::sample_phrases();
  std::uniform_int_distribution<std::size_t> pick(0, phrases.size() - 1);
  for (int round = 0; round < 100; ++round) {
    std::string body = "je suis malade, merci, à bientôt ";
    for (int p = 0; p < 3; ++p) body += phrases[pick(rng)] + " ";
    const auto before = filature::match_rules(body, small);
    auto after = filature::match_rules(body, larger);
    after.erase(std::remove_if(after.begin(), after.end(),
                               [](const Match& m) {
                                 return m.rule_id == "r-extra";
                               }),
                after.end());
    REQUIRE(after.size() == before.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(after[i].rule_id == before[i].rule_id);
      CHECK(after[i].start == before[i].start);
      CHECK(after[i].end == before[i].end);
    }
  }
}

TEST_CASE("every match reported on random bodies is sound") {
  const Lexicon lexicon = default_lexicon();
  std::mt19937 rng(20260819);
  const std::vector<std::string> phrases = {
      "kikou", "BONJOUR", "à tous", "je suis dépressive", "mon problème",
      "j'ai 42 ans", "merci d'avance", "ça me ferait du bien", ":)",
      "cœur \xF0\x9F\x98\x80", "ПРИВЕТ", "à bientôt", "--lou",
      "peux-tu préciser", "je te conseille", "sans succès",
  };
  std::uniform_int_distribution<std::size_t> pick(0, phrases.size() - 1);
  std::uniform_int_distribution<int> n_parts(0, 8);
  for (int round = 0; round < 150; ++round) {
    std::string body;
    const int parts = n_parts(rng);
    for (int p = 0; p < parts; ++p) {
      if (p > 0) body += " ";
      body += phrases[pick(rng)];
    }
    const auto chars = filature::uni::decode_utf8(body);
    const std::u32string folded = filature::uni::fold(chars);
    for (const auto& m : filature::match_rules(body, lexicon)) {
      REQUIRE(m.start < m.end);
      REQUIRE(m.end <= chars.size());
      const filature::Rule* rule = lexicon.find(m.rule_id);
      REQUIRE(rule != nullptr);
      if (rule->match_kind == filature::MatchKind::Keyword) {
        // The span must spell the pattern post-fold.
        CHECK(folded.compare(m.start, m.end - m.start, rule->needle) == 0);
      }
      switch (rule->anchor.kind) {
        case filature::AnchorKind::MessageInitial:
          CHECK(m.start < rule->anchor.window);
          break;
        case filature::AnchorKind::MessageFinal:
          CHECK(m.end + rule->anchor.window > chars.size());
          break;
        case filature::AnchorKind::Anywhere:
          break;
      }
    }
  }
}

TEST_CASE("find locates rules by id") {
  const Lexicon lexicon = default_lexicon();
  const filature::Rule* rule = lexicon.find("rf-ecoute");
  REQUIRE(rule != nullptr);
  CHECK(std::get<SlotType>(rule->target) == SlotType::RequestFormulation);
  CHECK(lexicon.find("does-not-exist") == nullptr);
}
