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

#ifndef FILATURE_CORPUS_HPP_
#define FILATURE_CORPUS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace filature {

/// One forum post. The thread opener is the request; every other message
/// replies to some earlier message via parent_id.
struct Message {
  std::string message_id;
  std::string author;  // may be empty, some openers carry no usable author
  std::optional<std::string> parent_id;
  std::optional<std::string> timestamp;  // ISO-8601 when present
  std::string body;

  bool operator==(const Message&) const = default;
};

/// A discussion thread: one root request plus a reply tree. Validated and
/// immutable after construction; traversal order is fixed at build time.
class Thread {
 public:
  /// Validates the tree shape. Throws DuplicateId on repeated message ids,
  /// MultipleRoots when more than one message lacks a parent_id,
  /// DanglingParent on a parent_id naming no message in the thread, and
  /// ParseError when there is no root or when messages cannot all be
  /// reached from the root.
  Thread(std::string thread_id, std::vector<Message> messages);

  const std::string& thread_id() const { return thread_id_; }

  /// The root message.
  const Message& request() const { return messages_[root_]; }

  /// Messages in file order.
  const std::vector<Message>& messages() const { return messages_; }

  std::size_t size() const { return messages_.size(); }

  /// Depth-first order: root first, parent before child, siblings in file
  /// order. Stable across calls.
  std::vector<const Message*> traversal() const;

  bool operator==(const Thread& other) const {
    return thread_id_ == other.thread_id_ && messages_ == other.messages_;
  }

 private:
  std::string thread_id_;
  std::vector<Message> messages_;
  std::size_t root_ = 0;
  std::vector<std::size_t> order_;  // traversal as indices into messages_
};

struct Corpus {
  std::string corpus_id;
  std::string language = "fr";
  std::vector<Thread> threads;

  bool operator==(const Corpus&) const = default;
};

/// Free-function form of Thread::traversal, matching the operation name
/// used throughout the docs.
std::vector<const Message*> traversal(const Thread& thread);

/// Parses a corpus file. `raw` must be UTF-8 JSON in the corpus format;
/// unknown fields are rejected. Structural violations surface as the
/// Thread constructor errors plus DuplicateId for repeated thread ids or
/// corpus-wide repeated message ids.
Corpus parse_corpus(std::string_view raw);

/// Renders the corpus back to its file format, two-space indented, with a
/// trailing newline. parse_corpus(serialize_corpus(c)) == c.
std::string serialize_corpus(const Corpus& corpus);

}  // namespace filature

#endif  // FILATURE_CORPUS_HPP_
