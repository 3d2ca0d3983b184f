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

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace facet {

// Per-example human judgments for one system's output. Judgment lists are
// typically length 3 but any nonempty length is accepted.
struct AnnotatedOutput {
  std::string example_id;
  std::string system_id;
  std::string summary;  // empty when the source file omits it
  std::vector<bool> judgments;  // true = judged faithful
};

// Fraction of annotators that judged the output faithful, in [0, 1].
// Throws Err::NoJudgments on an empty judgment list.
double example_score(const AnnotatedOutput& ann);

// Majority rule: faithful iff at least two thirds of the annotators agree.
bool binary_label(double score);

struct SystemScore {
  std::string system_id;
  double mean_faithfulness = 0.0;
  double mean_coverage = 0.0;
  std::size_t n_examples = 0;
};

// Mean faithfulness and mean coverage over exactly the annotated examples of
// one system. coverage_by_example maps example id to the coverage of that
// system's output. Throws Err::MixedSystems if the annotations span several
// systems and Err::MissingCoverage naming the first example without one.
SystemScore system_score(
    std::span<const AnnotatedOutput> annotations,
    const std::unordered_map<std::string, double>& coverage_by_example);

// Line-delimited records `{id, system, judgments}` with an optional string
// `summary`. One record per (system, example); duplicates raise
// Err::DuplicateAnnotation. Malformed lines raise Err::MalformedRecord with
// the 1-based line number.
std::vector<AnnotatedOutput> read_annotation_file(
    const std::filesystem::path& path);

}  // namespace facet
