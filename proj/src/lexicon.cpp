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

#include "filature/lexicon.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <utility>

#include "json.hpp"

#include "filature/errors.hpp"
#include "filature/unicode.hpp"

namespace filature {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_of(std::string_view raw,
                                            std::size_t byte) {
  if (byte > raw.size()) byte = raw.size();
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (raw[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

RuleTarget parse_target(const std::string& name, const std::string& where) {
  if (auto slot = parse_slot_type(name)) return *slot;
  if (auto reaction = parse_reaction_type(name)) return *reaction;
  throw InvalidRule(where + ": unknown target \"" + name + "\"");
}

Anchor parse_anchor(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": anchor must be an object");
  Anchor anchor;
  std::string kind;
  for (const auto& item : j.items()) {
    if (item.key() == "kind") {
      if (!item.value().is_string()) {
        throw ParseError(where + ": anchor kind must be a string");
      }
      kind = item.value().get<std::string>();
    } else if (item.key() == "window") {
      if (!item.value().is_number_unsigned()) {
        throw InvalidRule(where + ": anchor window must be a non-negative "
                          "integer");
      }
      anchor.window = item.value().get<std::size_t>();
    } else {
      throw ParseError(where + ": unknown anchor field \"" + item.key() +
                       "\"");
    }
  }
  if (kind == "Anywhere" || kind.empty()) {
    anchor.kind = AnchorKind::Anywhere;
  } else if (kind == "MessageInitial") {
    anchor.kind = AnchorKind::MessageInitial;
  } else if (kind == "MessageFinal") {
    anchor.kind = AnchorKind::MessageFinal;
  } else {
    throw InvalidRule(where + ": unknown anchor kind \"" + kind + "\"");
  }
  if (anchor.kind != AnchorKind::Anywhere && anchor.window == 0) {
    throw InvalidRule(where + ": anchored rules need window > 0");
  }
  return anchor;
}

Rule compile_rule(const json& j) {
  if (!j.is_object()) throw ParseError("rule entries must be objects");
  Rule rule;
  std::string target_name;
  std::string kind_name;
  for (const auto& item : j.items()) {
    const auto& key = item.key();
    const auto& value = item.value();
    if (key == "rule_id") {
      if (!value.is_string()) throw ParseError("rule_id must be a string");
      rule.rule_id = value.get<std::string>();
    } else if (key == "target") {
      if (!value.is_string()) throw ParseError("target must be a string");
      target_name = value.get<std::string>();
    } else if (key == "match_kind") {
      if (!value.is_string()) throw ParseError("match_kind must be a string");
      kind_name = value.get<std::string>();
    } else if (key == "pattern") {
      if (!value.is_string()) throw ParseError("pattern must be a string");
      rule.pattern = value.get<std::string>();
    } else if (key == "case_fold") {
      if (!value.is_boolean()) throw ParseError("case_fold must be a boolean");
      rule.case_fold = value.get<bool>();
    } else if (key == "anchor") {
      rule.anchor = parse_anchor(value, "rule");
    } else {
      throw ParseError("unknown field \"" + key + "\" in rule");
    }
  }
  if (rule.rule_id.empty()) throw ParseError("rule without rule_id");
  const std::string where = "rule \"" + rule.rule_id + "\"";
  if (target_name.empty()) throw ParseError(where + ": missing target");
  if (kind_name.empty()) throw ParseError(where + ": missing match_kind");
  rule.target = parse_target(target_name, where);
  if (kind_name == "keyword") {
    rule.match_kind = MatchKind::Keyword;
  } else if (kind_name == "regex") {
    rule.match_kind = MatchKind::Regex;
  } else {
    throw InvalidRule(where + ": unknown match_kind \"" + kind_name + "\"");
  }
  if (rule.pattern.empty()) throw InvalidRule(where + ": empty pattern");

  if (rule.match_kind == MatchKind::Keyword) {
    rule.needle = uni::decode_utf8(rule.pattern);
    if (rule.case_fold) rule.needle = uni::fold(rule.needle);
  } else {
    try {
      rule.compiled.assign(rule.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw InvalidRule(where + ": bad regex: " + e.what());
    }
  }
  return rule;
}

bool anchor_keeps(const Anchor& anchor, std::size_t start, std::size_t end,
                  std::size_t body_len) {
  switch (anchor.kind) {
    case AnchorKind::Anywhere:
      return true;
    case AnchorKind::MessageInitial:
      return start < anchor.window;
    case AnchorKind::MessageFinal:
      return end + anchor.window > body_len;
  }
  return true;
}

void match_keyword(const Rule& rule, const std::u32string& text,
                   std::vector<std::pair<std::size_t, std::size_t>>* spans) {
  const std::u32string& needle = rule.needle;
  const std::size_t m = needle.size();
  const std::size_t n = text.size();
  if (m == 0 || m > n) return;
  // Boundary checks apply only on sides where the pattern edge is itself a
  // word character; patterns ending in punctuation stay matchable next to
  // words.
  const bool check_left = uni::is_word_char(needle.front());
  const bool check_right = uni::is_word_char(needle.back());
  for (std::size_t i = 0; i + m <= n; ++i) {
    if (!std::equal(needle.begin(), needle.end(), text.begin() + i)) continue;
    if (check_left && i > 0 && uni::is_word_char(text[i - 1])) continue;
    if (check_right && i + m < n && uni::is_word_char(text[i + m])) continue;
    spans->emplace_back(i, i + m);
  }
}

void match_regex(const Rule& rule, const std::string& haystack,
                 const uni::CharMap& map,
                 std::vector<std::pair<std::size_t, std::size_t>>* spans) {
  auto begin = std::cregex_iterator(haystack.data(),
                                    haystack.data() + haystack.size(),
                                    rule.compiled);
  const auto end = std::cregex_iterator();
  for (auto it = begin; it != end; ++it) {
    const auto pos = static_cast<std::size_t>(it->position(0));
    const auto len = static_cast<std::size_t>(it->length(0));
    if (len == 0) continue;  // zero-width matches carry no cue text
    // A byte-level match may in principle cut a code point; widening to
    // whole characters keeps spans valid.
    const std::size_t start = map.floor_char(pos);
    const std::size_t stop = map.ceil_char(pos + len);
    spans->emplace_back(start, stop);
  }
}

}  // namespace

Lexicon::Lexicon(std::string language, std::vector<Rule> rules)
    : language_(std::move(language)), rules_(std::move(rules)) {
  std::set<std::string_view> ids;
  for (const Rule& rule : rules_) {
    if (!ids.insert(rule.rule_id).second) {
      throw DuplicateId("duplicate rule_id \"" + rule.rule_id + "\"");
    }
  }
}

const Rule* Lexicon::find(std::string_view rule_id) const {
  for (const Rule& rule : rules_) {
    if (rule.rule_id == rule_id) return &rule;
  }
  return nullptr;
}

Lexicon load_lexicon(std::string_view raw) {
  json root;
  try {
    root = json::parse(raw);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_of(raw, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("lexicon: ") + e.what(), line, col);
  }
  if (!root.is_object()) throw ParseError("lexicon root must be an object");

  std::string language = "fr";
  const json* jrules = nullptr;
  for (const auto& item : root.items()) {
    if (item.key() == "language") {
      if (!item.value().is_string()) {
        throw ParseError("lexicon language must be a string");
      }
      language = item.value().get<std::string>();
    } else if (item.key() == "rules") {
      jrules = &item.value();
    } else {
      throw ParseError("unknown field \"" + item.key() + "\" in lexicon");
    }
  }
  if (jrules == nullptr) throw ParseError("lexicon: missing \"rules\"");
  if (!jrules->is_array()) throw ParseError("lexicon \"rules\" must be an "
                                            "array");

  std::vector<Rule> rules;
  rules.reserve(jrules->size());
  for (const json& jr : *jrules) rules.push_back(compile_rule(jr));
  return Lexicon(std::move(language), std::move(rules));
}

std::vector<Match> match_rules(std::string_view body, const Lexicon& lexicon) {
  std::vector<Match> out;
  if (body.empty()) return out;

  const std::u32string raw_chars = uni::decode_utf8(body);
  const std::u32string folded_chars = uni::fold(raw_chars);
  const std::size_t body_len = raw_chars.size();

  // Byte views and offset maps are built on demand, only when some regex
  // rule needs them.
  std::string raw_bytes;
  std::string folded_bytes;
  std::unique_ptr<uni::CharMap> raw_map;
  std::unique_ptr<uni::CharMap> folded_map;
  auto ensure_raw = [&]() {
    if (!raw_map) {
      raw_bytes = uni::encode_utf8(raw_chars);
      raw_map = std::make_unique<uni::CharMap>(raw_bytes);
    }
  };
  auto ensure_folded = [&]() {
    if (!folded_map) {
      folded_bytes = uni::encode_utf8(folded_chars);
      folded_map = std::make_unique<uni::CharMap>(folded_bytes);
    }
  };

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const Rule& rule : lexicon.rules()) {
    spans.clear();
    if (rule.match_kind == MatchKind::Keyword) {
      match_keyword(rule, rule.case_fold ? folded_chars : raw_chars, &spans);
    } else if (rule.case_fold) {
      ensure_folded();
      match_regex(rule, folded_bytes, *folded_map, &spans);
    } else {
      ensure_raw();
      match_regex(rule, raw_bytes, *raw_map, &spans);
    }
    std::sort(spans.begin(), spans.end());
    for (const auto& [start, end] : spans) {
      if (!anchor_keeps(rule.anchor, start, end, body_len)) continue;
      out.push_back(Match{rule.rule_id, rule.target, start, end});
    }
  }
  return out;
}

}  // namespace filature
