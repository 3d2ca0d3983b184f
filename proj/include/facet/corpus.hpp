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

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace facet {

// One (article, summary) pair. The unit of all metric computation.
struct Example {
  std::string id;
  std::string article;
  std::string summary;
};

// A corpus record reduced to what splitting and statistics need.
struct ExampleMetrics {
  std::string id;
  double coverage = 0.0;
  double density = 0.0;
  std::size_t article_len = 0;  // token count
  std::size_t summary_len = 0;  // token count
};

ExampleMetrics example_metrics(const Example& ex);

// Nearest-rank percentile: sort ascending, return the element at index
// ceil(p/100 * n) - 1. p must lie in (0, 100). The result is always an
// observed value. Throws Err::EmptyInput on an empty list.
double percentile(std::span<const double> values, double p);

struct QuartileThresholds {
  double a = 0.0;  // 25th percentile of reference coverage
  double b = 0.0;  // 50th
  double c = 0.0;  // 75th
};

QuartileThresholds coverage_thresholds(std::span<const double> coverages);

// Quartile bucket (0-based) for a coverage value e:
//   0: e <= a     1: a < e <= b     2: b < e <= c     3: e > c
int quartile_of(double coverage, const QuartileThresholds& t);

struct QuartileSplit {
  std::array<std::vector<std::string>, 4> ids;  // per-quartile example ids
  QuartileThresholds thresholds;
};

// Splits a corpus into coverage quartiles. Boundary ties follow the bucket
// inequalities, so unequal quartile sizes are expected.
// Throws Err::EmptyInput on an empty corpus.
QuartileSplit split_quartiles(std::span<const ExampleMetrics> corpus);

struct QuartileBucketStats {
  std::size_t count = 0;
  // Absent (not zero) for an empty quartile.
  std::optional<double> mean_article_len;
  std::optional<double> mean_summary_len;
  std::optional<double> mean_coverage;
};

using QuartileStats = std::array<QuartileBucketStats, 4>;

QuartileStats quartile_stats(const QuartileSplit& split,
                             std::span<const ExampleMetrics> corpus);

// Streaming reader over UTF-8 line-delimited records, one JSON object per
// line with string fields `id`, `article`, `summary`. Blank lines are
// skipped. Validation failures raise with the 1-based line number:
//   Err::MalformedRecord  bad JSON, missing field, wrong type, empty string
//   Err::DuplicateId      id seen on an earlier line
//   Err::EmptySummary     summary tokenizes to zero tokens
class CorpusReader {
 public:
  explicit CorpusReader(std::istream& in) : in_(&in) {}

  // Next validated record, or nullopt at end of input.
  std::optional<Example> next();

  std::size_t line_number() const { return line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

std::vector<Example> read_corpus_file(const std::filesystem::path& path);

}  // namespace facet
