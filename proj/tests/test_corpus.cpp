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

#include <random>
#include <string>
#include <vector>

#include "filature/corpus.hpp"
#include "filature/errors.hpp"
#include "helpers.hpp"

using filature::Corpus;
using filature::Message;
using filature::Thread;
using testutil::make_message;

namespace {

std::string corpus_json(const std::string& threads) {
  return R"({"corpus_id": "c", "language": "fr", "threads": [)" + threads +
         "]}";
}

}  // namespace

TEST_CASE("minimal single-message corpus parses") {
  const std::string raw = corpus_json(
      R"({"thread_id": "t1", "messages": [
           {"message_id": "m1", "author": "ana", "parent_id": null,
            "timestamp": null, "body": "bonjour"}]})");
  const Corpus corpus = filature::parse_corpus(raw);
  CHECK(corpus.corpus_id == "c");
  CHECK(corpus.language == "fr");
  REQUIRE(corpus.threads.size() == 1);
  const Thread& thread = corpus.threads[0];
  CHECK(thread.thread_id() == "t1");
  REQUIRE(thread.size() == 1);
  CHECK(thread.request().message_id == "m1");
  CHECK(thread.request().author == "ana");
  CHECK(thread.request().body == "bonjour");
  CHECK(!thread.request().parent_id.has_value());
  CHECK(!thread.request().timestamp.has_value());
}

TEST_CASE("language defaults to fr when omitted") {
  const std::string raw =
      R"({"corpus_id": "c", "threads": [{"thread_id": "t",
          "messages": [{"message_id": "m", "author": "a", "body": "x"}]}]})";
  CHECK(filature::parse_corpus(raw).language == "fr");
}

TEST_CASE("mini fixture loads with expected shape") {
  const Corpus corpus = filature::parse_corpus(
      testutil::read_file(testutil::data_path("corpora/doctissimo_mini.json")));
  CHECK(corpus.corpus_id == "doctissimo-mini");
  REQUIRE(corpus.threads.size() == 2);

  const Thread& a = corpus.threads[0];
  CHECK(a.thread_id() == "A");
  REQUIRE(a.size() == 3);
  CHECK(a.request().message_id == "a1");
  CHECK(a.messages()[1].author == "Orchidée");
  CHECK(a.messages()[2].author == "Diana");
  CHECK(a.messages()[1].parent_id == std::optional<std::string>("a1"));
  CHECK(a.messages()[2].parent_id == std::optional<std::string>("a1"));

  const Thread& b = corpus.threads[1];
  CHECK(b.thread_id() == "B");
  REQUIRE(b.size() == 3);
  CHECK(b.request().author == "cartoon181");
  CHECK(b.messages()[1].author == "go");
  CHECK(b.messages()[2].author == "joely");
}

TEST_CASE("traversal is depth-first in file order") {
  // m2 and m4 answer the root, m3 answers m2: DFS gives m1 m2 m3 m4.
  std::vector<Message> messages;
  messages.push_back(make_message("m1", "a", std::nullopt, "root"));
  messages.push_back(make_message("m2", "b", "m1", "first"));
  messages.push_back(make_message("m4", "d", "m1", "second"));
  messages.push_back(make_message("m3", "c", "m2", "nested"));
  const Thread thread("t", std::move(messages));
  const auto order = thread.traversal();
  REQUIRE(order.size() == 4);
  CHECK(order[0]->message_id == "m1");
  CHECK(order[1]->message_id == "m2");
  CHECK(order[2]->message_id == "m3");
  CHECK(order[3]->message_id == "m4");
}

TEST_CASE("thread constructor rejects malformed trees") {
  SUBCASE("empty thread") {
    CHECK_THROWS_AS(Thread("t", {}), filature::ParseError);
  }
  SUBCASE("duplicate message ids") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", std::nullopt, "x"));
    messages.push_back(make_message("m1", "b", "m1", "y"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)), filature::DuplicateId);
  }
  SUBCASE("dangling parent") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", std::nullopt, "x"));
    messages.push_back(make_message("m2", "b", "nope", "y"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)),
                    filature::DanglingParent);
  }
  SUBCASE("two roots") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", std::nullopt, "x"));
    messages.push_back(make_message("m2", "b", std::nullopt, "y"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)),
                    filature::MultipleRoots);
  }
  SUBCASE("no root: two messages replying to each other") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", "m2", "x"));
    messages.push_back(make_message("m2", "b", "m1", "y"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)), filature::ParseError);
  }
  SUBCASE("cycle detached from the root") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", std::nullopt, "x"));
    messages.push_back(make_message("m2", "b", "m3", "y"));
    messages.push_back(make_message("m3", "c", "m2", "z"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)), filature::ParseError);
  }
  SUBCASE("self-reply") {
    std::vector<Message> messages;
    messages.push_back(make_message("m1", "a", std::nullopt, "x"));
    messages.push_back(make_message("m2", "b", "m2", "y"));
    CHECK_THROWS_AS(Thread("t", std::move(messages)), filature::Error);
  }
}

TEST_CASE("parse rejects structural corpus errors") {
  SUBCASE("duplicate thread ids") {
    const std::string raw = corpus_json(
        R"({"thread_id": "t", "messages": [{"message_id": "m1", "author": "a", "body": "x"}]},
           {"thread_id": "t", "messages": [{"message_id": "m2", "author": "a", "body": "x"}]})");
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::DuplicateId);
  }
  SUBCASE("message ids duplicated across threads") {
    const std::string raw = corpus_json(
        R"({"thread_id": "t1", "messages": [{"message_id": "m", "author": "a", "body": "x"}]},
           {"thread_id": "t2", "messages": [{"message_id": "m", "author": "a", "body": "x"}]})");
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::DuplicateId);
  }
  SUBCASE("unknown top-level field") {
    const std::string raw =
        R"({"corpus_id": "c", "threads": [], "extra": 1})";
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::ParseError);
  }
  SUBCASE("unknown message field") {
    const std::string raw = corpus_json(
        R"({"thread_id": "t", "messages": [
             {"message_id": "m", "author": "a", "body": "x", "mood": "?"}]})");
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::ParseError);
  }
  SUBCASE("missing corpus_id") {
    CHECK_THROWS_AS(filature::parse_corpus(R"({"threads": []})"),
                    filature::ParseError);
  }
  SUBCASE("missing message body") {
    const std::string raw = corpus_json(
        R"({"thread_id": "t", "messages": [{"message_id": "m", "author": "a"}]})");
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::ParseError);
  }
  SUBCASE("empty message_id") {
    const std::string raw = corpus_json(
        R"({"thread_id": "t", "messages": [{"message_id": "", "author": "a", "body": "x"}]})");
    CHECK_THROWS_AS(filature::parse_corpus(raw), filature::ParseError);
  }
  SUBCASE("wrong type for threads") {
    CHECK_THROWS_AS(
        filature::parse_corpus(R"({"corpus_id": "c", "threads": {}})"),
        filature::ParseError);
  }
}

TEST_CASE("malformed json reports the failing line") {
  const std::string raw = "{\n  \"corpus_id\": \"c\",\n  \"threads\": [\n";
  try {
    filature::parse_corpus(raw);
    FAIL("expected ParseError");
  } catch (const filature::ParseError& e) {
    CHECK(e.line() >= 1);
  }
}

TEST_CASE("serialize then parse reproduces the corpus") {
  const Corpus original = filature::parse_corpus(
      testutil::read_file(testutil::data_path("corpora/doctissimo_fils.json")));
  const std::string rendered = filature::serialize_corpus(original);
  const Corpus reparsed = filature::parse_corpus(rendered);
  CHECK(reparsed == original);
  // A second render is byte-identical.
  CHECK(filature::serialize_corpus(reparsed) == rendered);
}

TEST_CASE("round-trip holds on randomized corpora") {
  std::mt19937 rng(20260819);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<std::size_t> n_threads(0, 5);
    const Corpus original =
        testutil::random_corpus(rng, n_threads(rng), testutil::sample_phrases());
    const Corpus reparsed =
        filature::parse_corpus(filature::serialize_corpus(original));
    REQUIRE(reparsed == original);
  }
}

TEST_CASE("timestamps survive the round trip") {
  std::vector<Message> messages;
  auto m = make_message("m1", "a", std::nullopt, "x");
  m.timestamp = "2007-03-12T09:15:00";
  messages.push_back(m);
  Corpus corpus;
  corpus.corpus_id = "c";
  corpus.threads.emplace_back("t", std::move(messages));
  const Corpus reparsed =
      filature::parse_corpus(filature::serialize_corpus(corpus));
  CHECK(reparsed.threads[0].request().timestamp ==
        std::optional<std::string>("2007-03-12T09:15:00"));
}

TEST_CASE("multi-byte bodies are preserved verbatim") {
  const std::string body = "cœur \xF0\x9F\x98\x80 ПРИВЕТ Καλημέρα";
  std::vector<Message> messages;
  messages.push_back(make_message("m1", "éléonore", std::nullopt, body));
  Corpus corpus;
  corpus.corpus_id = "c";
  corpus.threads.emplace_back("t", std::move(messages));
  const Corpus reparsed =
      filature::parse_corpus(filature::serialize_corpus(corpus));
  CHECK(reparsed.threads[0].request().body == body);
  CHECK(reparsed.threads[0].request().author == "éléonore");
}
