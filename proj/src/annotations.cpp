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

#include <fstream>
#include <set>
#include <utility>

#include <json.hpp>

#include "facet/errors.hpp"

namespace facet {

double example_score(const AnnotatedOutput& ann) {
  if (ann.judgments.empty())
    raise(Err::NoJudgments, "no judgments for example '" + ann.example_id +
                                "' system '" + ann.system_id + "'");
  std::size_t faithful = 0;
  for (bool j : ann.judgments)
    if (j) ++faithful;
  return static_cast<double>(faithful) /
         static_cast<double>(ann.judgments.size());
}

bool binary_label(double score) { return score >= 2.0 / 3.0; }

SystemScore system_score(
    std::span<const AnnotatedOutput> annotations,
    const std::unordered_map<std::string, double>& coverage_by_example) {
  if (annotations.empty())
    raise(Err::EmptyInput, "no annotations to aggregate");
  SystemScore out;
  out.system_id = annotations.front().system_id;
  double faithfulness_sum = 0.0;
  double coverage_sum = 0.0;
  for (const AnnotatedOutput& ann : annotations) {
    if (ann.system_id != out.system_id)
      raise(Err::MixedSystems, "annotations mix systems '" + out.system_id +
                                   "' and '" + ann.system_id + "'");
    auto it = coverage_by_example.find(ann.example_id);
    if (it == coverage_by_example.end())
      raise(Err::MissingCoverage,
            "no coverage for example '" + ann.example_id + "'");
    faithfulness_sum += example_score(ann);
    coverage_sum += it->second;
  }
  out.n_examples = annotations.size();
  out.mean_faithfulness = faithfulness_sum / static_cast<double>(out.n_examples);
  out.mean_coverage = coverage_sum / static_cast<double>(out.n_examples);
  return out;
}

std::vector<AnnotatedOutput> read_annotation_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open annotation file " + path.string());

  std::vector<AnnotatedOutput> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
      raise(Err::MalformedRecord,
            "line " + std::to_string(line_no) + ": not a JSON object");

    AnnotatedOutput ann;
    for (const char* field : {"id", "system"}) {
      auto it = rec.find(field);
      if (it == rec.end() || !it->is_string() || it->get<std::string>().empty())
        raise(Err::MalformedRecord, "line " + std::to_string(line_no) +
                                        ": missing or invalid field '" + field +
                                        "'");
    }
    ann.example_id = rec["id"].get<std::string>();
    ann.system_id = rec["system"].get<std::string>();
    if (auto it = rec.find("summary"); it != rec.end() && it->is_string())
      ann.summary = it->get<std::string>();

    auto jt = rec.find("judgments");
    if (jt == rec.end() || !jt->is_array() || jt->empty())
      raise(Err::MalformedRecord,
            "line " + std::to_string(line_no) +
                ": 'judgments' must be a nonempty array of booleans");
    for (const auto& j : *jt) {
      if (!j.is_boolean())
        raise(Err::MalformedRecord,
              "line " + std::to_string(line_no) +
                  ": 'judgments' must contain only booleans");
      ann.judgments.push_back(j.get<bool>());
    }

    if (!seen.emplace(ann.system_id, ann.example_id).second)
      raise(Err::DuplicateAnnotation,
            "line " + std::to_string(line_no) + ": duplicate record for ('" +
                ann.system_id + "', '" + ann.example_id + "')");
    out.push_back(std::move(ann));
  }
  return out;
}

}  // namespace facet
