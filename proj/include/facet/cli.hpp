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
#include <iosfwd>
#include <optional>
#include <string>

#include "facet/jsonl.hpp"
#include "facet/selection.hpp"

// Batch commands behind the `facet` executable. Each command validates its
// inputs, throws facet::Error on any failure, writes machine-readable data
// to files only, and prints its human-readable table (percentages, two
// decimals) to the stream it is given. Reruns on unchanged inputs produce
// byte-identical output files.
namespace facet::cli {

namespace fs = std::filesystem;

struct MetricsCmd {
  fs::path input;
  fs::path output;
  Units units = Units::Fraction;
};
// One `{id, coverage, density, summary_len}` record per corpus record, in
// input order. Streaming: holds one example at a time.
void run_metrics(const MetricsCmd& cmd);

struct SplitCmd {
  fs::path input;
  std::string output_prefix;
};
// Writes `<prefix>.q1` .. `<prefix>.q4` (verbatim corpus lines),
// `<prefix>.thresholds.json` (fractions, full precision) and
// `<prefix>.stats.json`; prints the per-quartile stats table. Two streaming
// passes; only per-example coverage/length scalars stay in memory.
void run_split(const SplitCmd& cmd, std::ostream& table);

struct ScoreCmd {
  fs::path annotations;
  fs::path corpus;
  std::optional<fs::path> candidates;  // summaries for records without one
  fs::path output;
  Units units = Units::Fraction;
};
// Per-system `{system, mean_coverage, mean_faithfulness, n_examples}`
// records, systems sorted by id. Coverage of each annotated summary is
// computed against its article.
void run_score(const ScoreCmd& cmd, std::ostream& table);

struct CurveCmd {
  fs::path control;
  fs::path output;
  std::optional<fs::path> svg;
  Units units = Units::Fraction;
  int samples = 101;
};
// Plot data (nodes + sampled polyline) for the control curve alone.
void run_curve(const CurveCmd& cmd);

struct EffFaithCmd {
  fs::path control;
  fs::path systems;
  fs::path output;
  std::optional<fs::path> plot;  // default: <output>.plot.tsv
  std::optional<fs::path> svg;
  Units units = Units::Fraction;
  int samples = 101;
};
// Per-system `{system, coverage, faithfulness, control, delta, above}`
// records plus curve_report plot data.
void run_eff_faith(const EffFaithCmd& cmd, std::ostream& table);

struct CorrelateCmd {
  fs::path input;
  std::optional<fs::path> output;
  std::string x_field = "coverage";
  std::string y_field = "score";
};
// Prints the Pearson coefficient; optionally records `{n, pearson_r}`.
void run_correlate(const CorrelateCmd& cmd, std::ostream& table);

enum class Scorer { File, CoverageDemo };

struct SelectCmd {
  fs::path candidates;
  fs::path annotations;
  std::optional<fs::path> corpus;  // computes missing candidate coverages
  fs::path output;
  std::optional<fs::path> summary;  // default: <output>.summary.json
  Units units = Units::Fraction;
  SelectorConfig config;
  Scorer scorer = Scorer::File;
};
// Cross-validated selection. Records `{id, system, fallback, threshold}` in
// candidate-file order; the summary file carries fold thresholds and the
// mean coverage / mean human faithfulness of the selected outputs.
void run_select(const SelectCmd& cmd, std::ostream& table);

enum class OracleKind { Bf, Bfe, Qfe };

struct OracleCmd {
  OracleKind kind = OracleKind::Bf;
  fs::path candidates;
  fs::path annotations;
  std::optional<fs::path> corpus;
  fs::path output;
  Units units = Units::Fraction;
  std::string baseline_system = "baseline";
  // Default: resolved by system mean coverage (nearest above/below baseline).
  std::optional<std::string> more_extractive;
  std::optional<std::string> more_abstractive;
};
// Human-judgment oracle selection. Records `{id, system}` plus a summary
// block with mean coverage and mean human faithfulness of the picks.
void run_oracle(const OracleCmd& cmd, std::ostream& table);

struct ReportCmd {
  fs::path control;
  std::optional<fs::path> systems;
  fs::path output;
  std::optional<fs::path> svg;
  Units units = Units::Fraction;
  int samples = 101;
};
// Full plot-data artifact: curve nodes, polyline, and system points with
// above/below flags.
void run_report(const ReportCmd& cmd);

}  // namespace facet::cli
