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

#include "facet/jsonl.hpp"

#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "facet/errors.hpp"

namespace facet {

namespace {

using nlohmann::json;

json parse_line(const std::string& line, std::size_t line_no) {
  json rec = json::parse(line, nullptr, false);
  if (rec.is_discarded() || !rec.is_object())
    raise(Err::MalformedRecord,
          "line " + std::to_string(line_no) + ": not a JSON object");
  return rec;
}

std::string get_string(const json& rec, const char* field, std::size_t line_no) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_string() || it->get<std::string>().empty())
    raise(Err::MalformedRecord, "line " + std::to_string(line_no) +
                                    ": missing or invalid field '" + field + "'");
  return it->get<std::string>();
}

double get_number(const json& rec, const char* field, std::size_t line_no) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_number())
    raise(Err::MalformedRecord, "line " + std::to_string(line_no) +
                                    ": missing or non-numeric field '" + field +
                                    "'");
  return it->get<double>();
}

}  // namespace

Units parse_units(const std::string& name) {
  if (name == "fraction") return Units::Fraction;
  if (name == "percent") return Units::Percent;
  raise(Err::BadConfig, "unknown units '" + name + "' (fraction|percent)");
}

double to_fraction(double value, Units units) {
  return units == Units::Percent ? value / 100.0 : value;
}

double from_fraction(double value, Units units) {
  return units == Units::Percent ? value * 100.0 : value;
}

std::vector<ControlPoint> read_control_points(
    const std::filesystem::path& path, Units default_units) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open points file " + path.string());

  std::vector<ControlPoint> points;
  Units units = default_units;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec = parse_line(line, line_no);
    if (first_record && rec.contains("units") && !rec.contains("model")) {
      units = parse_units(get_string(rec, "units", line_no));
      first_record = false;
      continue;
    }
    first_record = false;
    // Field aliases let `score` output feed straight back in.
    ControlPoint p;
    p.model_id = get_string(rec, rec.contains("model") ? "model" : "system",
                            line_no);
    p.coverage = to_fraction(
        get_number(rec, rec.contains("coverage") ? "coverage" : "mean_coverage",
                   line_no),
        units);
    p.faithfulness =
        to_fraction(get_number(rec, rec.contains("faithfulness")
                                        ? "faithfulness"
                                        : "mean_faithfulness",
                               line_no),
                    units);
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<CandidateSet> read_candidate_file(const std::filesystem::path& path,
                                              Units default_units) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open candidates file " + path.string());

  std::vector<CandidateSet> sets;
  std::unordered_map<std::string, std::size_t> set_index;
  std::set<std::pair<std::string, std::string>> seen;
  Units units = default_units;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec = parse_line(line, line_no);
    if (first_record && rec.contains("units") && !rec.contains("id")) {
      units = parse_units(get_string(rec, "units", line_no));
      first_record = false;
      continue;
    }
    first_record = false;

    Candidate c;
    c.example_id = get_string(rec, "id", line_no);
    c.system_id = get_string(rec, "system", line_no);
    c.summary = get_string(rec, "summary", line_no);
    if (auto it = rec.find("score"); it != rec.end() && !it->is_null()) {
      if (!it->is_number())
        raise(Err::MalformedRecord,
              "line " + std::to_string(line_no) + ": non-numeric 'score'");
      c.score = it->get<double>();
    }
    if (auto it = rec.find("coverage"); it != rec.end() && !it->is_null()) {
      if (!it->is_number())
        raise(Err::MalformedRecord,
              "line " + std::to_string(line_no) + ": non-numeric 'coverage'");
      c.coverage = to_fraction(it->get<double>(), units);
      if (!(c.coverage >= 0.0 && c.coverage <= 1.0))
        raise(Err::InvalidValue,
              "line " + std::to_string(line_no) + ": coverage outside [0,1]");
    } else {
      c.coverage = -1.0;  // filled in later from the corpus
    }

    if (!seen.emplace(c.example_id, c.system_id).second)
      raise(Err::DuplicateCandidate,
            "line " + std::to_string(line_no) + ": duplicate candidate ('" +
                c.example_id + "', '" + c.system_id + "')");
    auto [it, inserted] = set_index.emplace(c.example_id, sets.size());
    if (inserted) sets.push_back(CandidateSet{c.example_id, {}});
    sets[it->second].candidates.push_back(std::move(c));
  }
  return sets;
}

std::vector<std::pair<double, double>> read_pair_file(
    const std::filesystem::path& path, const std::string& x_field,
    const std::string& y_field) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open pairs file " + path.string());

  std::vector<std::pair<double, double>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec = parse_line(line, line_no);
    if (line_no == 1 && rec.contains("units") && !rec.contains(x_field))
      continue;  // correlation is scale-invariant; units header is a no-op
    pairs.emplace_back(get_number(rec, x_field.c_str(), line_no),
                       get_number(rec, y_field.c_str(), line_no));
  }
  return pairs;
}

}  // namespace facet
