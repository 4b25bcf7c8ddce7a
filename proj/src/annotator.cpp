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

#include "filature/annotator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "filature/errors.hpp"

namespace filature {

namespace {

// Sort key within one message: span start, then rule id. The message-level
// ordering is already fixed by traversal.
template <typename A>
void sort_within_message(std::vector<A>* annotations, std::size_t from) {
  std::sort(annotations->begin() + from, annotations->end(),
            [](const A& a, const A& b) {
              return std::tie(a.start, a.rule_id) < std::tie(b.start, b.rule_id);
            });
}

}  // namespace

ThreadAnnotation annotate_thread(const Thread& thread, const Lexicon& lexicon) {
  ThreadAnnotation out;
  out.thread_id = thread.thread_id();
  out.request_id = thread.request().message_id;
  out.presence.thread_id = thread.thread_id();
  out.reactions.thread_id = thread.thread_id();

  for (const Message* message : thread.traversal()) {
    const bool is_request = message->message_id == out.request_id;
    const std::size_t slot_from = out.slot_annotations.size();
    const std::size_t reaction_from = out.reaction_annotations.size();
    std::set<ReactionType> reply_reaction_types;

    for (const Match& match : match_rules(message->body, lexicon)) {
      if (const SlotType* slot = std::get_if<SlotType>(&match.target)) {
        if (!is_request && !is_background_slot(*slot)) continue;
        out.slot_annotations.push_back(SlotAnnotation{
            message->message_id, *slot, match.start, match.end,
            match.rule_id});
        if (is_request) {
          out.presence.bits.set(static_cast<std::size_t>(*slot));
        }
      } else {
        if (is_request) continue;  // reaction rules apply to replies only
        const auto reaction = std::get<ReactionType>(match.target);
        out.reaction_annotations.push_back(ReactionAnnotation{
            message->message_id, reaction, match.start, match.end,
            match.rule_id});
        reply_reaction_types.insert(reaction);
      }
    }
    for (ReactionType reaction : reply_reaction_types) {
      ++out.reactions.counts[static_cast<std::size_t>(reaction)];
    }
    sort_within_message(&out.slot_annotations, slot_from);
    sort_within_message(&out.reaction_annotations, reaction_from);
  }
  return out;
}

std::vector<ThreadAnnotation> annotate_corpus(const Corpus& corpus,
                                              const Lexicon& lexicon) {
  std::vector<ThreadAnnotation> out;
  out.reserve(corpus.threads.size());
  for (const Thread& thread : corpus.threads) {
    out.push_back(annotate_thread(thread, lexicon));
  }
  return out;
}

PresenceVector presence_of(const ThreadAnnotation& annotation) {
  PresenceVector presence;
  presence.thread_id = annotation.thread_id;
  for (const SlotAnnotation& sa : annotation.slot_annotations) {
    if (sa.message_id == annotation.request_id) {
      presence.bits.set(static_cast<std::size_t>(sa.slot));
    }
  }
  return presence;
}

std::string serialize_annotated(
    const Corpus& corpus, const std::vector<ThreadAnnotation>& annotations) {
  using nlohmann::ordered_json;

  if (annotations.size() != corpus.threads.size()) {
    throw UnknownThread("annotation list does not cover the corpus");
  }
  std::map<std::string_view, const ThreadAnnotation*> by_thread;
  for (const ThreadAnnotation& ann : annotations) {
    by_thread[ann.thread_id] = &ann;
  }

  ordered_json root;
  root["corpus_id"] = corpus.corpus_id;
  root["language"] = corpus.language;
  ordered_json threads = ordered_json::array();
  for (const Thread& thread : corpus.threads) {
    auto found = by_thread.find(thread.thread_id());
    if (found == by_thread.end()) {
      throw UnknownThread("no annotation for thread \"" + thread.thread_id() +
                          "\"");
    }
    const ThreadAnnotation& ann = *found->second;

    // Collate per message; annotate_thread already ordered each list by
    // (traversal, start, rule_id), so a stable merge by (start, rule_id)
    // per message suffices.
    struct Entry {
      bool is_slot;
      std::size_t index;
      std::size_t start;
      const std::string* rule_id;
    };
    std::map<std::string_view, std::vector<Entry>> per_message;
    for (std::size_t i = 0; i < ann.slot_annotations.size(); ++i) {
      const auto& sa = ann.slot_annotations[i];
      per_message[sa.message_id].push_back(
          Entry{true, i, sa.start, &sa.rule_id});
    }
    for (std::size_t i = 0; i < ann.reaction_annotations.size(); ++i) {
      const auto& ra = ann.reaction_annotations[i];
      per_message[ra.message_id].push_back(
          Entry{false, i, ra.start, &ra.rule_id});
    }

    ordered_json jthread;
    jthread["thread_id"] = thread.thread_id();
    ordered_json messages = ordered_json::array();
    for (const Message* m : thread.traversal()) {
      ordered_json jm;
      jm["message_id"] = m->message_id;
      jm["author"] = m->author;
      jm["parent_id"] = m->parent_id ? ordered_json(*m->parent_id)
                                     : ordered_json(nullptr);
      jm["timestamp"] = m->timestamp ? ordered_json(*m->timestamp)
                                     : ordered_json(nullptr);
      jm["body"] = m->body;
      ordered_json jann = ordered_json::array();
      auto it = per_message.find(m->message_id);
      if (it != per_message.end()) {
        std::sort(it->second.begin(), it->second.end(),
                  [](const Entry& a, const Entry& b) {
                    return std::tie(a.start, *a.rule_id) <
                           std::tie(b.start, *b.rule_id);
                  });
        for (const Entry& e : it->second) {
          ordered_json ja;
          if (e.is_slot) {
            const auto& sa = ann.slot_annotations[e.index];
            ja["slot"] = std::string(to_string(sa.slot));
            ja["start"] = sa.start;
            ja["end"] = sa.end;
            ja["rule_id"] = sa.rule_id;
          } else {
            const auto& ra = ann.reaction_annotations[e.index];
            ja["reaction"] = std::string(to_string(ra.reaction));
            ja["start"] = ra.start;
            ja["end"] = ra.end;
            ja["rule_id"] = ra.rule_id;
          }
          jann.push_back(std::move(ja));
        }
      }
      jm["annotations"] = std::move(jann);
      messages.push_back(std::move(jm));
    }
    jthread["messages"] = std::move(messages);
    threads.push_back(std::move(jthread));
  }
  root["threads"] = std::move(threads);
  return root.dump(2) + "\n";
}

}  // namespace filature
