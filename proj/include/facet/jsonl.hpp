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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "facet/selection.hpp"
#include "facet/tradeoff.hpp"

namespace facet {

// Units for fraction-valued fields (coverage, faithfulness) in files and
// tables. Fractions internally, always.
enum class Units { Fraction, Percent };

// Parses "fraction" / "percent".
Units parse_units(const std::string& name);

double to_fraction(double value, Units units);
double from_fraction(double value, Units units);

// Control-points / systems file: records `{model, coverage, faithfulness}`.
// An optional leading record `{"units": "percent"|"fraction"}` declares the
// file's units and overrides `default_units`. The per-system score table
// (`{system, mean_coverage, mean_faithfulness}`) is accepted as-is.
std::vector<ControlPoint> read_control_points(
    const std::filesystem::path& path, Units default_units);

// Candidates file: records `{id, system, summary, score?, coverage?}`.
// Candidates are grouped per example in first-appearance order; systems are
// unique per example (Err::DuplicateCandidate). `coverage`, when present,
// honors `default_units`; `score` is never rescaled. Records without a
// coverage field get coverage -1 and the caller must fill it (from the
// corpus) before handing the sets to selection.
std::vector<CandidateSet> read_candidate_file(const std::filesystem::path& path,
                                              Units default_units);

// Generic numeric pair extraction for correlation: pulls two named number
// fields from each record.
std::vector<std::pair<double, double>> read_pair_file(
    const std::filesystem::path& path, const std::string& x_field,
    const std::string& y_field);

}  // namespace facet
