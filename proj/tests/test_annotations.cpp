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

#include "facet/annotations.hpp"

#include <doctest.h>

#include <functional>
#include <random>

#include "facet/errors.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace facet;

namespace {

Err kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a facet::Error");
  return Err::IoFailure;
}

AnnotatedOutput ann(std::string id, std::string system,
                    std::vector<bool> judgments) {
  return AnnotatedOutput{std::move(id), std::move(system), "",
                         std::move(judgments)};
}

}  // namespace

TEST_CASE("example_score is the faithful fraction") {
  CHECK(example_score(ann("e", "s", {true, true, false})) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(example_score(ann("e", "s", {true, true, true})) == 1.0);
  CHECK(example_score(ann("e", "s", {false})) == 0.0);
  CHECK(example_score(ann("e", "s", {true, false, false, true})) == 0.5);
  CHECK(kind_of([] { example_score(ann("e", "s", {})); }) == Err::NoJudgments);
}

TEST_CASE("binary_label applies the two-thirds majority") {
  CHECK(binary_label(2.0 / 3.0));
  CHECK(!binary_label(1.0 / 3.0));
  CHECK(binary_label(1.0));
  CHECK(!binary_label(0.0));
  CHECK(binary_label(example_score(ann("e", "s", {true, true, false}))));

  // Monotone in the score.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    double lo = oracles::u01(rng);
    double hi = lo + (1.0 - lo) * oracles::u01(rng);
    if (binary_label(lo)) CHECK(binary_label(hi));
  }
}

TEST_CASE("system_score averages over annotated examples") {
  std::vector<AnnotatedOutput> anns{ann("e1", "sys", {true, true, true}),
                                    ann("e2", "sys", {true, true, false})};
  std::unordered_map<std::string, double> cov{{"e1", 0.6}, {"e2", 0.8}};
  auto score = system_score(anns, cov);
  CHECK(score.system_id == "sys");
  CHECK(score.n_examples == 2);
  CHECK(score.mean_faithfulness == doctest::Approx(5.0 / 6.0));
  CHECK(score.mean_coverage == doctest::Approx(0.7));

  SUBCASE("singleton") {
    auto one = system_score(std::vector<AnnotatedOutput>{anns[0]}, cov);
    CHECK(one.mean_faithfulness == 1.0);
    CHECK(one.mean_coverage == 0.6);
    CHECK(one.n_examples == 1);
  }
  SUBCASE("mixed systems rejected") {
    std::vector<AnnotatedOutput> mixed{anns[0], ann("e2", "other", {true})};
    CHECK(kind_of([&] { system_score(mixed, cov); }) == Err::MixedSystems);
  }
  SUBCASE("missing coverage names the example") {
    std::vector<AnnotatedOutput> more{anns[0], ann("e9", "sys", {true})};
    try {
      system_score(more, cov);
      FAIL("expected MissingCoverage");
    } catch (const Error& e) {
      CHECK(e.kind() == Err::MissingCoverage);
      CHECK(std::string(e.what()).find("e9") != std::string::npos);
    }
  }
}

TEST_CASE("a 200-example fixture averages to 83.33 percent") {
  std::vector<AnnotatedOutput> anns;
  std::unordered_map<std::string, double> cov;
  for (int i = 0; i < 200; ++i) {
    std::string id = "e" + std::to_string(i);
    // Half unanimous, half 2/3: mean faithfulness 5/6.
    anns.push_back(ann(id, "baseline", i < 100
                                           ? std::vector<bool>{true, true, true}
                                           : std::vector<bool>{true, true, false}));
    cov[id] = 0.7612;
  }
  auto score = system_score(anns, cov);
  CHECK(score.mean_faithfulness == doctest::Approx(5.0 / 6.0));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", score.mean_faithfulness * 100.0);
  CHECK(std::string(buf) == "83.33");

  // The mean lies within [min, max] of the example scores.
  CHECK(score.mean_faithfulness >= 2.0 / 3.0);
  CHECK(score.mean_faithfulness <= 1.0);
}

TEST_CASE("annotation file parsing") {
  testutil::TempDir dir;
  SUBCASE("records with and without summaries") {
    testutil::write_file(dir / "ann.jsonl",
                         R"({"id":"e1","system":"q1","judgments":[true,true,false]})"
                         "\n"
                         R"({"id":"e2","system":"q1","judgments":[false],"summary":"the cat"})"
                         "\n");
    auto anns = read_annotation_file(dir / "ann.jsonl");
    REQUIRE(anns.size() == 2);
    CHECK(anns[0].judgments == std::vector<bool>{true, true, false});
    CHECK(anns[0].summary.empty());
    CHECK(anns[1].summary == "the cat");
  }
  SUBCASE("duplicate (system, example) rejected") {
    testutil::write_file(dir / "dup.jsonl",
                         R"({"id":"e1","system":"q1","judgments":[true]})"
                         "\n"
                         R"({"id":"e1","system":"q1","judgments":[false]})"
                         "\n");
    CHECK(kind_of([&] { read_annotation_file(dir / "dup.jsonl"); }) ==
          Err::DuplicateAnnotation);
  }
  SUBCASE("same example under two systems is fine") {
    testutil::write_file(dir / "two.jsonl",
                         R"({"id":"e1","system":"q1","judgments":[true]})"
                         "\n"
                         R"({"id":"e1","system":"q2","judgments":[false]})"
                         "\n");
    CHECK(read_annotation_file(dir / "two.jsonl").size() == 2);
  }
  SUBCASE("bad judgments are malformed") {
    testutil::write_file(dir / "bad1.jsonl",
                         R"({"id":"e1","system":"q1","judgments":[]})"
                         "\n");
    CHECK(kind_of([&] { read_annotation_file(dir / "bad1.jsonl"); }) ==
          Err::MalformedRecord);
    testutil::write_file(dir / "bad2.jsonl",
                         R"({"id":"e1","system":"q1","judgments":[1,0,1]})"
                         "\n");
    CHECK(kind_of([&] { read_annotation_file(dir / "bad2.jsonl"); }) ==
          Err::MalformedRecord);
    testutil::write_file(dir / "bad3.jsonl",
                         R"({"id":"e1","system":"q1"})"
                         "\n");
    CHECK(kind_of([&] { read_annotation_file(dir / "bad3.jsonl"); }) ==
          Err::MalformedRecord);
  }
}
