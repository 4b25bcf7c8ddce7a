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

#ifndef FILATURE_TESTS_HELPERS_HPP_
#define FILATURE_TESTS_HELPERS_HPP_

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "filature/corpus.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(FILATURE_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline filature::Message make_message(std::string id, std::string author,
                                      std::optional<std::string> parent,
                                      std::string body) {
  filature::Message m;
  m.message_id = std::move(id);
  m.author = std::move(author);
  m.parent_id = std::move(parent);
  m.body = std::move(body);
  return m;
}

/// Random tree-shaped thread: message k replies to a uniformly chosen
/// earlier message, so traversal exercises nested reply chains.
inline filature::Thread random_thread(std::mt19937& rng, std::string thread_id,
                                      std::size_t n_messages,
                                      const std::vector<std::string>& phrases) {
  std::vector<filature::Message> messages;
  std::uniform_int_distribution<std::size_t> phrase_pick(0, phrases.size() - 1);
  for (std::size_t k = 0; k < n_messages; ++k) {
    std::string body;
    std::uniform_int_distribution<int> n_parts(1, 4);
    const int parts = n_parts(rng);
    for (int p = 0; p < parts; ++p) {
      if (p > 0) body += " ";
      body += phrases[phrase_pick(rng)];
    }
    std::optional<std::string> parent;
    if (k > 0) {
      std::uniform_int_distribution<std::size_t> parent_pick(0, k - 1);
      parent = thread_id + "m" + std::to_string(parent_pick(rng));
    }
    messages.push_back(make_message(thread_id + "m" + std::to_string(k),
                                    "user" + std::to_string(k % 5), parent,
                                    body));
  }
  return filature::Thread(std::move(thread_id), std::move(messages));
}

inline filature::Corpus random_corpus(std::mt19937& rng, std::size_t n_threads,
                                      const std::vector<std::string>& phrases) {
  filature::Corpus corpus;
  corpus.corpus_id = "random";
  std::uniform_int_distribution<std::size_t> n_messages(1, 6);
  for (std::size_t t = 0; t < n_threads; ++t) {
    corpus.threads.push_back(
        random_thread(rng, "T" + std::to_string(t), n_messages(rng), phrases));
  }
  return corpus;
}

/// Mixed-width sample text: ASCII, Latin-1, multi-byte and astral chars.
inline const std::vector<std::string>& sample_phrases() {
  static const std::vector<std::string> phrases = {
      "bonjour tout le monde",
      "j'ai 33 ans",
      "Ça me ferait du bien",
      "merci d'avance",
      "étrange non ?",
      "cœur brisé",
      "\xF0\x9F\x98\x80 sourire",
      "ПРИВЕТ МИР",
      "Καλημέρα",
      "--fin",
  };
  return phrases;
}

}  // namespace testutil

#endif  // FILATURE_TESTS_HELPERS_HPP_
