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

#ifndef FILATURE_LEXICON_HPP_
#define FILATURE_LEXICON_HPP_

#include <cstddef>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "filature/types.hpp"

namespace filature {

enum class MatchKind : std::uint8_t { Keyword, Regex };

enum class AnchorKind : std::uint8_t { Anywhere, MessageInitial, MessageFinal };

/// Positional constraint on a rule. `window` is a character count from the
/// relevant end of the body; it must be positive when the rule is anchored.
struct Anchor {
  AnchorKind kind = AnchorKind::Anywhere;
  std::size_t window = 0;
};

using RuleTarget = std::variant<SlotType, ReactionType>;

/// One lexical cue. Keyword rules match the pattern as a substring at word
/// boundaries; regex rules use ECMAScript syntax evaluated over UTF-8.
///
/// When case_fold is set the body is case-folded before matching. Keyword
/// patterns are folded alongside, so they stay case-insensitive either
/// way; regex patterns are used exactly as written and should be authored
/// in folded (lowercase) form, which keeps escapes like \d intact.
struct Rule {
  std::string rule_id;
  RuleTarget target{SlotType::RequestBeneficiary};
  MatchKind match_kind = MatchKind::Keyword;
  std::string pattern;
  bool case_fold = true;
  Anchor anchor;

  // Compiled at load time.
  std::u32string needle;  // keyword rules: pattern as code points
  std::regex compiled;    // regex rules
};

/// A cue found in a message body. start/end are character offsets (not
/// bytes), half-open, 0 <= start < end <= body character count.
struct Match {
  std::string rule_id;
  RuleTarget target;
  std::size_t start = 0;
  std::size_t end = 0;
};

/// Immutable rule collection in file order.
class Lexicon {
 public:
  Lexicon(std::string language, std::vector<Rule> rules);

  const std::string& language() const { return language_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Rule lookup by id; nullptr when absent.
  const Rule* find(std::string_view rule_id) const;

 private:
  std::string language_;
  std::vector<Rule> rules_;
};

/// Parses and validates a lexicon file. Throws ParseError on malformed
/// input, DuplicateId on repeated rule ids, InvalidRule on an empty
/// pattern, unknown target, unusable anchor, or a regex that fails to
/// compile.
Lexicon load_lexicon(std::string_view raw);

/// Runs every rule of the lexicon over one body. Matches are reported in
/// rule file order, then by span start. Pure; empty body yields no matches.
std::vector<Match> match_rules(std::string_view body, const Lexicon& lexicon);

}  // namespace filature

#endif  // FILATURE_LEXICON_HPP_
