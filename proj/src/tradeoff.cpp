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

#include "facet/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "facet/errors.hpp"

namespace facet {

TradeoffCurve TradeoffCurve::build(std::vector<ControlPoint> points) {
  if (points.size() < 2)
    raise(Err::TooFewPoints, "a control curve needs at least 2 points, got " +
                                 std::to_string(points.size()));
  for (const ControlPoint& p : points) {
    if (!(p.coverage >= 0.0 && p.coverage <= 1.0) ||
        !(p.faithfulness >= 0.0 && p.faithfulness <= 1.0))
      raise(Err::InvalidValue,
            "control point '" + p.model_id +
                "' outside [0,1]; pass --units percent for percentage files");
  }
  std::sort(points.begin(), points.end(),
            [](const ControlPoint& l, const ControlPoint& r) {
              return l.coverage < r.coverage;
            });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].coverage == points[i - 1].coverage)
      raise(Err::DuplicateCoverage,
            "control points '" + points[i - 1].model_id + "' and '" +
                points[i].model_id + "' share coverage");
  }
  TradeoffCurve curve;
  curve.points_ = std::move(points);
  return curve;
}

double TradeoffCurve::value_at(double coverage) const {
  if (coverage <= points_.front().coverage) return points_.front().faithfulness;
  if (coverage >= points_.back().coverage) return points_.back().faithfulness;
  // Containing segment; points_ is sorted and small, linear scan is fine.
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const ControlPoint& lo = points_[i - 1];
    const ControlPoint& hi = points_[i];
    if (coverage <= hi.coverage) {
      double t = (coverage - lo.coverage) / (hi.coverage - lo.coverage);
      return lo.faithfulness + t * (hi.faithfulness - lo.faithfulness);
    }
  }
  return points_.back().faithfulness;  // unreachable
}

EffectiveFaithfulness effective_faithfulness(const TradeoffCurve& curve,
                                             const SystemScore& system) {
  EffectiveFaithfulness eff;
  eff.system_id = system.system_id;
  eff.system_coverage = system.mean_coverage;
  eff.system_faithfulness = system.mean_faithfulness;
  eff.control_faithfulness = curve.value_at(system.mean_coverage);
  eff.delta = eff.system_faithfulness - eff.control_faithfulness;
  eff.above_curve = eff.delta > 0.0;
  return eff;
}

double correlate(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 2)
    raise(Err::TooFewPoints, "correlation needs at least 2 pairs");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pairs) {
    mx += x;
    my += y;
  }
  auto n = static_cast<double>(pairs.size());
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    raise(Err::DegenerateVariance, "a coordinate has zero variance");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

// Shortest round-trip decimal form, matching the JSONL outputs.
std::string num(double v, bool percent) {
  return nlohmann::json(percent ? v * 100.0 : v).dump();
}

}  // namespace

void write_curve_report(const TradeoffCurve& curve,
                        std::span<const EffectiveFaithfulness> systems,
                        std::ostream& out, const CurveReportOptions& options) {
  const bool pct = options.percent_units;
  out << "kind\tid\tcoverage\tfaithfulness\tcontrol\tdelta\tabove\n";
  for (const ControlPoint& p : curve.points()) {
    out << "node\t" << p.model_id << '\t' << num(p.coverage, pct) << '\t'
        << num(p.faithfulness, pct) << "\t\t\t\n";
  }
  int samples = std::max(options.polyline_samples, 2);
  double lo = curve.min_coverage();
  double hi = curve.max_coverage();
  for (int i = 0; i < samples; ++i) {
    double c = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(samples - 1);
    out << "curve\t\t" << num(c, pct) << '\t' << num(curve.value_at(c), pct)
        << "\t\t\t\n";
  }
  for (const EffectiveFaithfulness& s : systems) {
    out << "system\t" << s.system_id << '\t' << num(s.system_coverage, pct)
        << '\t' << num(s.system_faithfulness, pct) << '\t'
        << num(s.control_faithfulness, pct) << '\t' << num(s.delta, pct) << '\t'
        << (s.above_curve ? 1 : 0) << '\n';
  }
  if (!out) raise(Err::IoFailure, "write failed while emitting curve report");
}

namespace {

struct PlotScale {
  double x0, x1, y0, y1;
  double px(double x) const { return 70.0 + (x - x0) / (x1 - x0) * 500.0; }
  double py(double y) const { return 430.0 - (y - y0) / (y1 - y0) * 380.0; }
};

void svg_num(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  out << buf;
}

}  // namespace

void write_curve_svg(const TradeoffCurve& curve,
                     std::span<const EffectiveFaithfulness> systems,
                     std::ostream& out) {
  double x0 = curve.min_coverage(), x1 = curve.max_coverage();
  double y0 = curve.points().front().faithfulness, y1 = y0;
  for (const ControlPoint& p : curve.points()) {
    y0 = std::min(y0, p.faithfulness);
    y1 = std::max(y1, p.faithfulness);
  }
  for (const EffectiveFaithfulness& s : systems) {
    x0 = std::min(x0, s.system_coverage);
    x1 = std::max(x1, s.system_coverage);
    y0 = std::min(y0, s.system_faithfulness);
    y1 = std::max(y1, s.system_faithfulness);
  }
  double xpad = (x1 - x0) * 0.05 + 1e-3, ypad = (y1 - y0) * 0.05 + 1e-3;
  PlotScale sc{x0 - xpad, x1 + xpad, y0 - ypad, y1 + ypad};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n"
         "<rect x=\"70\" y=\"50\" width=\"500\" height=\"380\" fill=\"none\" "
         "stroke=\"#444\"/>\n"
         "<text x=\"320\" y=\"465\" text-anchor=\"middle\" font-size=\"13\">"
         "coverage</text>\n"
         "<text x=\"18\" y=\"240\" text-anchor=\"middle\" font-size=\"13\" "
         "transform=\"rotate(-90 18 240)\">faithfulness</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#4878b0\" stroke-width=\"1.5\" "
         "points=\"";
  const int kSamples = 101;
  for (int i = 0; i < kSamples; ++i) {
    double c = curve.min_coverage() +
               (curve.max_coverage() - curve.min_coverage()) *
                   static_cast<double>(i) / (kSamples - 1);
    if (i) out << ' ';
    svg_num(out, sc.px(c));
    out << ',';
    svg_num(out, sc.py(curve.value_at(c)));
  }
  out << "\"/>\n";

  for (const ControlPoint& p : curve.points()) {
    out << "<circle cx=\"";
    svg_num(out, sc.px(p.coverage));
    out << "\" cy=\"";
    svg_num(out, sc.py(p.faithfulness));
    out << "\" r=\"4\" fill=\"#4878b0\"/>\n<text x=\"";
    svg_num(out, sc.px(p.coverage) + 6.0);
    out << "\" y=\"";
    svg_num(out, sc.py(p.faithfulness) - 6.0);
    out << "\" font-size=\"11\">" << p.model_id << "</text>\n";
  }
  for (const EffectiveFaithfulness& s : systems) {
    out << "<circle cx=\"";
    svg_num(out, sc.px(s.system_coverage));
    out << "\" cy=\"";
    svg_num(out, sc.py(s.system_faithfulness));
    out << "\" r=\"4\" fill=\"" << (s.above_curve ? "#3a923a" : "#c03d3e")
        << "\"/>\n<text x=\"";
    svg_num(out, sc.px(s.system_coverage) + 6.0);
    out << "\" y=\"";
    svg_num(out, sc.py(s.system_faithfulness) - 6.0);
    out << "\" font-size=\"11\">" << s.system_id << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) raise(Err::IoFailure, "write failed while emitting SVG");
}

}  // namespace facet
