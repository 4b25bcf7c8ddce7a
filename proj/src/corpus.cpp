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

#include "filature/corpus.hpp"

#include <map>
#include <set>
#include <utility>

#include "json.hpp"

#include "filature/errors.hpp"

namespace filature {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Turns a nlohmann byte offset into 1-based line/column for ParseError.
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

json parse_json(std::string_view raw, const char* what) {
  try {
    return json::parse(raw);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending byte.
    const auto [line, col] = line_of(raw, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string(what) + ": " + e.what(), line, col);
  }
}

void reject_unknown_fields(const json& obj, std::set<std::string_view> allowed,
                           const std::string& context) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw ParseError("unknown field \"" + item.key() + "\" in " + context);
    }
  }
}

const json& require_field(const json& obj, const char* key,
                          const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field \"" + std::string(key) + "\" in " +
                     context);
  }
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& context) {
  const json& v = require_field(obj, key, context);
  if (!v.is_string()) {
    throw ParseError("field \"" + std::string(key) + "\" in " + context +
                     " must be a string");
  }
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError("field \"" + std::string(key) + "\" in " + context +
                     " must be a string or null");
  }
  return it->get<std::string>();
}

Message parse_message(const json& j, const std::string& context) {
  if (!j.is_object()) throw ParseError(context + " must be an object");
  reject_unknown_fields(
      j, {"message_id", "author", "parent_id", "timestamp", "body"}, context);
  Message m;
  m.message_id = require_string(j, "message_id", context);
  m.author = require_string(j, "author", context);
  m.parent_id = optional_string(j, "parent_id", context);
  m.timestamp = optional_string(j, "timestamp", context);
  m.body = require_string(j, "body", context);
  if (m.message_id.empty()) throw ParseError(context + ": empty message_id");
  return m;
}

}  // namespace

Thread::Thread(std::string thread_id, std::vector<Message> messages)
    : thread_id_(std::move(thread_id)), messages_(std::move(messages)) {
  const std::string where = "thread \"" + thread_id_ + "\"";
  if (messages_.empty()) throw ParseError(where + " has no messages");

  std::map<std::string_view, std::size_t> by_id;
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    if (!by_id.emplace(messages_[i].message_id, i).second) {
      throw DuplicateId(where + ": duplicate message_id \"" +
                        messages_[i].message_id + "\"");
    }
  }

  bool have_root = false;
  std::vector<std::vector<std::size_t>> children(messages_.size());
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    const auto& parent = messages_[i].parent_id;
    if (!parent) {
      if (have_root) {
        throw MultipleRoots(where + ": both \"" +
                            messages_[root_].message_id + "\" and \"" +
                            messages_[i].message_id + "\" lack a parent_id");
      }
      root_ = i;
      have_root = true;
      continue;
    }
    auto it = by_id.find(*parent);
    if (it == by_id.end()) {
      throw DanglingParent(where + ": message \"" + messages_[i].message_id +
                           "\" replies to unknown \"" + *parent + "\"");
    }
    children[it->second].push_back(i);
  }
  if (!have_root) throw ParseError(where + " has no root message");

  // Iterative depth-first walk; children are already in file order, so a
  // stack wants them pushed in reverse.
  order_.reserve(messages_.size());
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    order_.push_back(cur);
    const auto& kids = children[cur];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  if (order_.size() != messages_.size()) {
    throw ParseError(where + ": reply cycle, " +
                     std::to_string(messages_.size() - order_.size()) +
                     " message(s) unreachable from the root");
  }
}

std::vector<const Message*> Thread::traversal() const {
  std::vector<const Message*> out;
  out.reserve(order_.size());
  for (std::size_t i : order_) out.push_back(&messages_[i]);
  return out;
}

std::vector<const Message*> traversal(const Thread& thread) {
  return thread.traversal();
}

Corpus parse_corpus(std::string_view raw) {
  const json root = parse_json(raw, "corpus");
  if (!root.is_object()) throw ParseError("corpus root must be an object");
  reject_unknown_fields(root, {"corpus_id", "language", "threads"}, "corpus");

  Corpus corpus;
  corpus.corpus_id = require_string(root, "corpus_id", "corpus");
  if (auto lang = optional_string(root, "language", "corpus")) {
    corpus.language = *lang;
  }

  const json& threads = require_field(root, "threads", "corpus");
  if (!threads.is_array()) throw ParseError("\"threads\" must be an array");

  std::set<std::string> thread_ids;
  std::set<std::string> message_ids;
  for (const json& jt : threads) {
    if (!jt.is_object()) throw ParseError("thread entries must be objects");
    reject_unknown_fields(jt, {"thread_id", "messages"}, "thread");
    std::string thread_id = require_string(jt, "thread_id", "thread");
    if (!thread_ids.insert(thread_id).second) {
      throw DuplicateId("duplicate thread_id \"" + thread_id + "\"");
    }
    const std::string where = "thread \"" + thread_id + "\"";
    const json& jmessages = require_field(jt, "messages", where);
    if (!jmessages.is_array()) {
      throw ParseError("\"messages\" in " + where + " must be an array");
    }
    std::vector<Message> messages;
    messages.reserve(jmessages.size());
    for (const json& jm : jmessages) {
      messages.push_back(parse_message(jm, "message in " + where));
      if (!message_ids.insert(messages.back().message_id).second) {
        throw DuplicateId("duplicate message_id \"" +
                          messages.back().message_id + "\" in corpus");
      }
    }
    corpus.threads.emplace_back(std::move(thread_id), std::move(messages));
  }
  return corpus;
}

std::string serialize_corpus(const Corpus& corpus) {
  ordered_json root;
  root["corpus_id"] = corpus.corpus_id;
  root["language"] = corpus.language;
  ordered_json threads = ordered_json::array();
  for (const Thread& t : corpus.threads) {
    ordered_json jt;
    jt["thread_id"] = t.thread_id();
    ordered_json messages = ordered_json::array();
    for (const Message& m : t.messages()) {
      ordered_json jm;
      jm["message_id"] = m.message_id;
      jm["author"] = m.author;
      jm["parent_id"] = m.parent_id ? ordered_json(*m.parent_id)
                                    : ordered_json(nullptr);
      jm["timestamp"] = m.timestamp ? ordered_json(*m.timestamp)
                                    : ordered_json(nullptr);
      jm["body"] = m.body;
      messages.push_back(std::move(jm));
    }
    jt["messages"] = std::move(messages);
    threads.push_back(std::move(jt));
  }
  root["threads"] = std::move(threads);
  return root.dump(2) + "\n";
}

}  // namespace filature
