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

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facet/annotations.hpp"

namespace facet {

// Measured (coverage, faithfulness) of one control model, as fractions.
struct ControlPoint {
  std::string model_id;
  double coverage = 0.0;
  double faithfulness = 0.0;
};

// The faithfulness-abstractiveness control: piecewise-linear through the
// control points, constant (clamped) outside the observed coverage range.
class TradeoffCurve {
 public:
  // Sorts by coverage and validates. Throws Err::TooFewPoints (< 2 points),
  // Err::DuplicateCoverage (two points share a coverage) and
  // Err::InvalidValue (coordinates outside [0, 1]).
  static TradeoffCurve build(std::vector<ControlPoint> points);

  // Expected control faithfulness at the given coverage.
  double value_at(double coverage) const;

  const std::vector<ControlPoint>& points() const { return points_; }
  double min_coverage() const { return points_.front().coverage; }
  double max_coverage() const { return points_.back().coverage; }

 private:
  TradeoffCurve() = default;
  std::vector<ControlPoint> points_;
};

// A system's faithfulness relative to the control operating at the same
// coverage. delta > 0 means the system beats the control.
struct EffectiveFaithfulness {
  std::string system_id;
  double system_coverage = 0.0;
  double system_faithfulness = 0.0;
  double control_faithfulness = 0.0;
  double delta = 0.0;
  bool above_curve = false;
};

EffectiveFaithfulness effective_faithfulness(const TradeoffCurve& curve,
                                             const SystemScore& system);

// Sample Pearson correlation over (coverage, metric score) pairs.
// Throws Err::TooFewPoints (< 2 pairs) and Err::DegenerateVariance when
// either coordinate has zero variance.
double correlate(std::span<const std::pair<double, double>> pairs);

struct CurveReportOptions {
  int polyline_samples = 101;   // points sampled across the coverage range
  bool percent_units = false;   // emit numbers as percentages
};

// Tab-delimited plot data: curve nodes, a sampled polyline, and system
// points with their above/below flags.
void write_curve_report(const TradeoffCurve& curve,
                        std::span<const EffectiveFaithfulness> systems,
                        std::ostream& out, const CurveReportOptions& options);

// Static SVG rendering of the same data.
void write_curve_svg(const TradeoffCurve& curve,
                     std::span<const EffectiveFaithfulness> systems,
                     std::ostream& out);

}  // namespace facet
