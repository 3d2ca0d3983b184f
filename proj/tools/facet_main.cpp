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

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "facet/cli.hpp"
#include "facet/errors.hpp"

namespace {

using namespace facet;
using namespace facet::cli;

// Binds an option that fills a std::optional path only when given.
void optional_path(CLI::App* cmd, const std::string& name,
                   std::optional<std::filesystem::path>& target,
                   const std::string& help) {
  cmd->add_option_function<std::string>(
      name, [&target](const std::string& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"faithfulness-abstractiveness evaluation toolkit"};
  app.require_subcommand(1);

  std::string units = "fraction";
  app.add_option("--units", units, "numeric units for fraction-valued I/O")
      ->check(CLI::IsMember({"fraction", "percent"}));

  std::function<void()> action;

  auto metrics = MetricsCmd{};
  {
    auto* c = app.add_subcommand("metrics",
                                 "per-example coverage/density over a corpus");
    c->add_option("--input,-i", metrics.input, "corpus JSONL")->required();
    c->add_option("--output,-o", metrics.output, "metrics JSONL")->required();
    c->callback([&] {
      metrics.units = parse_units(units);
      action = [&] { run_metrics(metrics); };
    });
  }

  auto split = SplitCmd{};
  {
    auto* c = app.add_subcommand("split",
                                 "split a corpus into coverage quartiles");
    c->add_option("--input,-i", split.input, "corpus JSONL")->required();
    c->add_option("--output-prefix,--output,-o", split.output_prefix,
                  "prefix for .q1-.q4/.thresholds.json/.stats.json")
        ->required();
    c->callback([&] { action = [&] { run_split(split, std::cout); }; });
  }

  auto score = ScoreCmd{};
  {
    auto* c = app.add_subcommand("score",
                                 "aggregate human judgments per system");
    c->add_option("--annotations,--input,-i", score.annotations,
                  "annotation JSONL")
        ->required();
    c->add_option("--corpus", score.corpus, "corpus JSONL (articles)")
        ->required();
    optional_path(c, "--candidates", score.candidates,
                  "candidate summaries JSONL");
    c->add_option("--output,-o", score.output, "per-system scores JSONL")
        ->required();
    c->callback([&] {
      score.units = parse_units(units);
      action = [&] { run_score(score, std::cout); };
    });
  }

  auto curve = CurveCmd{};
  {
    auto* c = app.add_subcommand("curve", "emit control-curve plot data");
    c->add_option("--control,--input,-i", curve.control,
                  "control points JSONL")
        ->required();
    c->add_option("--output,-o", curve.output, "plot data TSV")->required();
    optional_path(c, "--svg", curve.svg, "also render an SVG");
    c->add_option("--samples", curve.samples, "polyline sample count");
    c->callback([&] {
      curve.units = parse_units(units);
      action = [&] { run_curve(curve); };
    });
  }

  auto eff = EffFaithCmd{};
  {
    auto* c = app.add_subcommand(
        "eff-faith", "effective faithfulness of systems vs the control");
    c->add_option("--control", eff.control, "control points JSONL")->required();
    c->add_option("--systems", eff.systems, "system points JSONL")->required();
    c->add_option("--output,-o", eff.output, "per-system table JSONL")
        ->required();
    optional_path(c, "--plot", eff.plot,
                  "plot data TSV (default <output>.plot.tsv)");
    optional_path(c, "--svg", eff.svg, "also render an SVG");
    c->add_option("--samples", eff.samples, "polyline sample count");
    c->callback([&] {
      eff.units = parse_units(units);
      action = [&] { run_eff_faith(eff, std::cout); };
    });
  }

  auto corr = CorrelateCmd{};
  {
    auto* c = app.add_subcommand("correlate",
                                 "Pearson correlation over record fields");
    c->add_option("--input,-i", corr.input, "pairs JSONL")->required();
    optional_path(c, "--output,-o", corr.output, "coefficient JSON");
    c->add_option("--x-field", corr.x_field, "x field name");
    c->add_option("--y-field", corr.y_field, "y field name");
    c->callback([&] { action = [&] { run_correlate(corr, std::cout); }; });
  }

  auto sel = SelectCmd{};
  std::string mode = "roc", scorer = "file";
  {
    auto* c = app.add_subcommand(
        "select", "cross-validated most-abstractive-faithful selection");
    c->add_option("--candidates,--input,-i", sel.candidates,
                  "candidates JSONL")
        ->required();
    c->add_option("--annotations", sel.annotations, "annotation JSONL")
        ->required();
    optional_path(c, "--corpus", sel.corpus,
                  "corpus JSONL for coverage computation");
    c->add_option("--output,-o", sel.output, "selection records JSONL")
        ->required();
    optional_path(c, "--summary", sel.summary,
                  "summary JSON (default <output>.summary.json)");
    c->add_option("--mode", mode, "threshold criterion")
        ->check(CLI::IsMember({"roc", "fbeta"}));
    c->add_option("--beta", sel.config.beta, "F_beta weight (fbeta mode)");
    c->add_option("--folds", sel.config.folds, "cross-validation folds");
    c->add_option("--seed", sel.config.seed, "fold shuffling seed");
    c->add_option("--scorer", scorer, "faithfulness score source")
        ->check(CLI::IsMember({"file", "coverage-demo"}));
    c->callback([&] {
      sel.units = parse_units(units);
      sel.config.mode = mode == "roc" ? SelectorMode::Roc : SelectorMode::FBeta;
      sel.scorer = scorer == "file" ? Scorer::File : Scorer::CoverageDemo;
      action = [&] { run_select(sel, std::cout); };
    });
  }

  auto ora = OracleCmd{};
  std::string oracle_kind;
  {
    auto* c = app.add_subcommand("oracle",
                                 "human-judgment oracle selection (bf/bfe/qfe)");
    c->add_option("--oracle", oracle_kind, "oracle rule")
        ->check(CLI::IsMember({"bf", "bfe", "qfe"}))
        ->required();
    c->add_option("--candidates,--input,-i", ora.candidates,
                  "candidates JSONL")
        ->required();
    c->add_option("--annotations", ora.annotations, "annotation JSONL")
        ->required();
    optional_path(c, "--corpus", ora.corpus,
                  "corpus JSONL for coverage computation");
    c->add_option("--output,-o", ora.output, "selection records JSONL")
        ->required();
    c->add_option("--baseline", ora.baseline_system, "baseline system id");
    c->add_option_function<std::string>(
        "--more-extractive",
        [&ora](const std::string& v) { ora.more_extractive = v; },
        "pin the system more extractive than the baseline");
    c->add_option_function<std::string>(
        "--more-abstractive",
        [&ora](const std::string& v) { ora.more_abstractive = v; },
        "pin the system more abstractive than the baseline");
    c->callback([&] {
      ora.units = parse_units(units);
      ora.kind = oracle_kind == "bf"    ? OracleKind::Bf
                 : oracle_kind == "bfe" ? OracleKind::Bfe
                                        : OracleKind::Qfe;
      action = [&] { run_oracle(ora, std::cout); };
    });
  }

  auto rep = ReportCmd{};
  {
    auto* c = app.add_subcommand(
        "report", "plot-data artifact for curve and system points");
    c->add_option("--control,--input,-i", rep.control, "control points JSONL")
        ->required();
    optional_path(c, "--systems", rep.systems, "system points JSONL");
    c->add_option("--output,-o", rep.output, "plot data TSV")->required();
    optional_path(c, "--svg", rep.svg, "also render an SVG");
    c->add_option("--samples", rep.samples, "polyline sample count");
    c->callback([&] {
      rep.units = parse_units(units);
      action = [&] { run_report(rep); };
    });
  }

  // Let `facet <cmd> --units ...` reach the app-level option too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    action();
  } catch (const std::exception& e) {
    std::cerr << "facet: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
