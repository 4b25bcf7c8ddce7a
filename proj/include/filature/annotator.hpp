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

#ifndef FILATURE_ANNOTATOR_HPP_
#define FILATURE_ANNOTATOR_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "filature/corpus.hpp"
#include "filature/lexicon.hpp"
#include "filature/types.hpp"

namespace filature {

struct SlotAnnotation {
  std::string message_id;
  SlotType slot;
  std::size_t start;
  std::size_t end;
  std::string rule_id;
};

/// Only ever produced for reply messages.
struct ReactionAnnotation {
  std::string message_id;
  ReactionType reaction;
  std::size_t start;
  std::size_t end;
  std::string rule_id;
};

/// Which slots the REQUEST realizes; one grid column. Replies never feed
/// this vector.
struct PresenceVector {
  std::string thread_id;
  std::bitset<kSlotTypeCount> bits;

  bool test(SlotType slot) const {
    return bits.test(static_cast<std::size_t>(slot));
  }
};

/// How many distinct replies carry each reaction type. A reply counts at
/// most once per type however many cues it contains.
struct ReactionProfile {
  std::string thread_id;
  std::array<std::uint32_t, kReactionTypeCount> counts{};
};

struct ThreadAnnotation {
  std::string thread_id;
  std::string request_id;
  std::vector<SlotAnnotation> slot_annotations;
  std::vector<ReactionAnnotation> reaction_annotations;
  PresenceVector presence;
  ReactionProfile reactions;
};

/// Runs the lexicon over one thread. The request body is matched against
/// slot rules only; reply bodies against reaction rules plus the
/// background-frame slot rules. Annotation lists come out in traversal
/// order, then span start, then rule_id.
ThreadAnnotation annotate_thread(const Thread& thread, const Lexicon& lexicon);

std::vector<ThreadAnnotation> annotate_corpus(const Corpus& corpus,
                                              const Lexicon& lexicon);

/// Recomputes the presence vector from the slot annotations that sit on
/// the request. For annotations produced by annotate_thread this equals
/// the stored `presence` field.
PresenceVector presence_of(const ThreadAnnotation& annotation);

/// Renders the corpus in its file format extended with a per-message
/// "annotations" array; messages appear in traversal order.
std::string serialize_annotated(const Corpus& corpus,
                                const std::vector<ThreadAnnotation>& annotations);

}  // namespace filature

#endif  // FILATURE_ANNOTATOR_HPP_
