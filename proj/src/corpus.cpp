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

#include "facet/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "facet/errors.hpp"
#include "facet/text_metrics.hpp"

namespace facet {

ExampleMetrics example_metrics(const Example& ex) {
  TokenSequence article = tokenize(ex.article);
  TokenSequence summary = tokenize(ex.summary);
  FragmentDecomposition parse = greedy_fragments(article, summary);
  ExtractivenessMetrics m = extractiveness(parse);
  return ExampleMetrics{ex.id, m.coverage, m.density, article.size(),
                        summary.size()};
}

double percentile(std::span<const double> values, double p) {
  if (values.empty()) raise(Err::EmptyInput, "percentile of an empty list");
  if (!(p > 0.0 && p < 100.0))
    raise(Err::InvalidValue, "percentile p must lie in (0, 100)");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  // p * n first: keeps the product exact for integer-valued p.
  auto rank = static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(sorted.size()) / 100.0));
  if (rank == 0) rank = 1;
  return sorted[rank - 1];
}

QuartileThresholds coverage_thresholds(std::span<const double> coverages) {
  return QuartileThresholds{percentile(coverages, 25.0),
                            percentile(coverages, 50.0),
                            percentile(coverages, 75.0)};
}

int quartile_of(double coverage, const QuartileThresholds& t) {
  if (coverage <= t.a) return 0;
  if (coverage <= t.b) return 1;
  if (coverage <= t.c) return 2;
  return 3;
}

QuartileSplit split_quartiles(std::span<const ExampleMetrics> corpus) {
  if (corpus.empty()) raise(Err::EmptyInput, "cannot split an empty corpus");
  std::vector<double> coverages;
  coverages.reserve(corpus.size());
  for (const ExampleMetrics& m : corpus) coverages.push_back(m.coverage);

  QuartileSplit split;
  split.thresholds = coverage_thresholds(coverages);
  for (const ExampleMetrics& m : corpus)
    split.ids[quartile_of(m.coverage, split.thresholds)].push_back(m.id);
  return split;
}

QuartileStats quartile_stats(const QuartileSplit& split,
                             std::span<const ExampleMetrics> corpus) {
  struct Acc {
    std::size_t n = 0;
    double article = 0, summary = 0, coverage = 0;
  };
  std::array<Acc, 4> acc;
  // Membership recomputed from coverage; identical to the split by
  // construction, so no id lookups are needed.
  for (const ExampleMetrics& m : corpus) {
    Acc& a = acc[quartile_of(m.coverage, split.thresholds)];
    ++a.n;
    a.article += static_cast<double>(m.article_len);
    a.summary += static_cast<double>(m.summary_len);
    a.coverage += m.coverage;
  }
  QuartileStats stats;
  for (int q = 0; q < 4; ++q) {
    stats[q].count = acc[q].n;
    if (acc[q].n > 0) {
      auto n = static_cast<double>(acc[q].n);
      stats[q].mean_article_len = acc[q].article / n;
      stats[q].mean_summary_len = acc[q].summary / n;
      stats[q].mean_coverage = acc[q].coverage / n;
    }
  }
  return stats;
}

std::optional<Example> CorpusReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
      raise(Err::MalformedRecord,
            "line " + std::to_string(line_) + ": not a JSON object");
    Example ex;
    for (const char* field : {"id", "article", "summary"}) {
      auto it = rec.find(field);
      if (it == rec.end() || !it->is_string())
        raise(Err::MalformedRecord, "line " + std::to_string(line_) +
                                        ": missing or non-string field '" +
                                        field + "'");
      std::string value = it->get<std::string>();
      if (value.empty())
        raise(Err::MalformedRecord, "line " + std::to_string(line_) +
                                        ": empty field '" + field + "'");
      if (field[0] == 'i')
        ex.id = std::move(value);
      else if (field[0] == 'a')
        ex.article = std::move(value);
      else
        ex.summary = std::move(value);
    }
    if (!seen_ids_.insert(ex.id).second)
      raise(Err::DuplicateId,
            "line " + std::to_string(line_) + ": duplicate id '" + ex.id + "'");
    if (tokenize(ex.summary).empty())
      raise(Err::EmptySummary, "line " + std::to_string(line_) + ": summary of '" +
                                   ex.id + "' tokenizes to zero tokens");
    return ex;
  }
  return std::nullopt;
}

std::vector<Example> read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open corpus file " + path.string());
  std::vector<Example> out;
  CorpusReader reader(in);
  while (auto ex = reader.next()) out.push_back(std::move(*ex));
  return out;
}

}  // namespace facet
