// Copyright 2026 The Facet Authors
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

#include "facet/text_metrics.hpp"

#include <doctest.h>

#include <random>

#include "facet/errors.hpp"
#include "oracles.hpp"

using namespace facet;

namespace {

TokenSequence seq(std::vector<std::string> tokens) {
  TokenSequence s;
  s.tokens = std::move(tokens);
  return s;
}

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                       int alphabet) {
  std::size_t len = 1 + oracles::uniform_index(rng, max_len);
  std::vector<std::string> tokens(len);
  for (auto& t : tokens)
    t = std::string(1, static_cast<char>('a' + oracles::uniform_index(
                                                   rng, alphabet)));
  return tokens;
}

}  // namespace

TEST_CASE("tokenize normalizes deterministically") {
  CHECK(tokenize("Drink plenty of water.").tokens ==
        std::vector<std::string>{"drink", "plenty", "of", "water"});
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("A  B\tA").tokens == std::vector<std::string>{"a", "b", "a"});
  CHECK(tokenize("--Hello!! (world)").tokens ==
        std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("... --- !!!").tokens.empty());
  CHECK(tokenize("don't STOP").tokens ==
        std::vector<std::string>{"don't", "stop"});
  // U+00A0 no-break space and U+2003 em space both split.
  CHECK(tokenize("a\xC2\xA0riddle\xE2\x80\x83here").tokens ==
        std::vector<std::string>{"a", "riddle", "here"});
  CHECK(tokenize("one\ntwo\r\nthree").tokens ==
        std::vector<std::string>{"one", "two", "three"});

  std::string text = "The  QUICK brown-fox, (jumps)!  \xC3\xA9t\xC3\xA9 ";
  CHECK(tokenize(text).tokens == tokenize(text).tokens);
  CHECK(tokenize(text).original_text == text);
  for (const auto& t : tokenize(text).tokens) {
    CHECK(!t.empty());
    CHECK(t.find(' ') == std::string::npos);
    CHECK(t.find('\t') == std::string::npos);
  }
}

TEST_CASE("greedy_fragments matches the worked examples") {
  SUBCASE("prefix match plus novel token") {
    auto d = greedy_fragments(seq({"a", "b", "c", "d"}), seq({"a", "b", "x"}));
    REQUIRE(d.fragments.size() == 1);
    CHECK(d.fragments[0] == Fragment{0, 0, 2});
    CHECK(d.summary_len == 3);
    CHECK(d.article_len == 4);
  }
  SUBCASE("longer match beats an earlier shorter one") {
    auto d = greedy_fragments(seq({"a", "c", "b", "a", "b"}), seq({"a", "b"}));
    REQUIRE(d.fragments.size() == 1);
    CHECK(d.fragments[0] == Fragment{0, 3, 2});
  }
  SUBCASE("verbatim copy is one fragment") {
    auto x = seq({"p", "q", "r", "s", "t"});
    auto d = greedy_fragments(x, x);
    REQUIRE(d.fragments.size() == 1);
    CHECK(d.fragments[0] == Fragment{0, 0, 5});
  }
  SUBCASE("equal-length ties take the smallest article index") {
    auto d = greedy_fragments(seq({"a", "b", "x", "a", "b"}), seq({"a", "b"}));
    REQUIRE(d.fragments.size() == 1);
    CHECK(d.fragments[0].article_start == 0);
  }
  SUBCASE("empty summary is an error") {
    CHECK_THROWS_AS(greedy_fragments(seq({"a"}), seq({})), Error);
    try {
      greedy_fragments(seq({"a"}), seq({}));
    } catch (const Error& e) {
      CHECK(e.kind() == Err::EmptySummary);
    }
  }
  SUBCASE("empty article yields no fragments") {
    auto d = greedy_fragments(seq({}), seq({"a", "b"}));
    CHECK(d.fragments.empty());
  }
}

TEST_CASE("extractiveness formulas") {
  auto full = seq({"x", "y", "z", "w"});
  auto m = extractiveness(full, full);
  CHECK(m.coverage == 1.0);
  CHECK(m.density == 4.0);
  CHECK(m.summary_len == 4);

  m = extractiveness(seq({"a", "b"}), seq({"u", "v", "w"}));
  CHECK(m.coverage == 0.0);
  CHECK(m.density == 0.0);

  m = extractiveness(seq({"a", "b", "c", "d"}), seq({"a", "b", "x"}));
  CHECK(m.coverage == doctest::Approx(2.0 / 3.0));
  CHECK(m.density == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("novelty_spans complements the fragments") {
  CHECK(novelty_spans(seq({"a", "b"}), seq({"a", "b"})).empty());

  auto spans = novelty_spans(seq({"a", "b"}), seq({"a", "b", "x"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == IndexRange{2, 3});

  spans = novelty_spans(seq({"q"}), seq({"x", "y", "z"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == IndexRange{0, 3});

  spans = novelty_spans(seq({"b"}), seq({"x", "b", "y"}));
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == IndexRange{0, 1});
  CHECK(spans[1] == IndexRange{2, 3});
}

TEST_CASE("greedy parse invariants on random inputs") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 2000; ++iter) {
    auto article_tokens = random_tokens(rng, 30, 5);
    auto summary_tokens = random_tokens(rng, 12, 5);
    auto article = seq(article_tokens);
    auto summary = seq(summary_tokens);
    auto d = greedy_fragments(article, summary);
    auto m = extractiveness(d);

    // Fragment soundness and ordering.
    std::size_t cursor = 0;
    for (const Fragment& f : d.fragments) {
      REQUIRE(f.length >= 1);
      REQUIRE(f.summary_start >= cursor);
      REQUIRE(f.summary_start + f.length <= summary_tokens.size());
      REQUIRE(f.article_start + f.length <= article_tokens.size());
      for (std::size_t k = 0; k < f.length; ++k)
        REQUIRE(summary_tokens[f.summary_start + k] ==
                article_tokens[f.article_start + k]);
      cursor = f.summary_start + f.length;
    }

    // Greedy maximality: no occurrence of the fragment extended by one.
    for (const Fragment& f : d.fragments) {
      if (f.summary_start + f.length >= summary_tokens.size()) continue;
      std::size_t want = f.length + 1;
      for (std::size_t p = 0; p + want <= article_tokens.size(); ++p) {
        bool match = true;
        for (std::size_t k = 0; k < want && match; ++k)
          match = article_tokens[p + k] == summary_tokens[f.summary_start + k];
        REQUIRE(!match);
      }
    }

    // Uncovered tokens do not occur in the article.
    std::vector<bool> covered(summary_tokens.size(), false);
    for (const Fragment& f : d.fragments)
      for (std::size_t k = 0; k < f.length; ++k)
        covered[f.summary_start + k] = true;
    for (std::size_t i = 0; i < summary_tokens.size(); ++i) {
      if (covered[i]) continue;
      for (const auto& t : article_tokens) REQUIRE(t != summary_tokens[i]);
    }

    // Metric bounds.
    REQUIRE(m.coverage >= 0.0);
    REQUIRE(m.coverage <= 1.0);
    REQUIRE(m.density >= m.coverage);
    REQUIRE(m.density <= static_cast<double>(summary_tokens.size()));
    bool all_covered =
        std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    REQUIRE((m.coverage == 1.0) == all_covered);
  }
}

TEST_CASE("greedy parse agrees with the quadratic reference") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 2000; ++iter) {
    auto article_tokens = random_tokens(rng, 30, 5);
    auto summary_tokens = random_tokens(rng, 12, 5);
    auto got = greedy_fragments(seq(article_tokens), seq(summary_tokens));
    auto want = oracles::naive_greedy(article_tokens, summary_tokens);
    REQUIRE(got.fragments == want.fragments);
    auto m = extractiveness(got);
    REQUIRE(m.coverage == oracles::naive_coverage(want));
    REQUIRE(m.density == oracles::naive_density(want));
  }
}

TEST_CASE("end-to-end over raw strings") {
  auto article = tokenize("Once you decide what to outsource, look for the "
                          "right contractors.");
  auto summary = tokenize("Look for the right contractors!");
  auto m = extractiveness(article, summary);
  CHECK(m.coverage == 1.0);
  CHECK(m.summary_len == 5);
  CHECK(m.density == 5.0);
}
