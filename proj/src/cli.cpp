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

#include "facet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "facet/annotations.hpp"
#include "facet/corpus.hpp"
#include "facet/errors.hpp"
#include "facet/text_metrics.hpp"
#include "facet/tradeoff.hpp"

namespace facet::cli {

namespace {

using nlohmann::json;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) raise(Err::IoFailure, "cannot open output file " + path.string());
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoFailure, "cannot open input file " + path.string());
  return in;
}

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", fraction * 100.0);
  return buf;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Infinite thresholds have no JSON number form; emit them as strings.
json threshold_json(double t) {
  if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
  return t;
}

void pad(std::ostream& out, const std::string& s, int width, bool left) {
  int fill = width - static_cast<int>(s.size());
  if (left) out << s;
  for (int i = 0; i < fill; ++i) out << ' ';
  if (!left) out << s;
}

void table_row(std::ostream& out, const std::vector<std::string>& cells,
               const std::vector<int>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << "  ";
    pad(out, cells[i], widths[i], i == 0);
  }
  out << '\n';
}

// Attaches majority labels to candidates. Returns the per-(example, system)
// human faithfulness fraction map; scores are left untouched so the selector
// only ever sees file or demo-scorer scores.
std::map<std::pair<std::string, std::string>, double> join_annotations(
    std::vector<CandidateSet>& sets, const fs::path& annotation_path) {
  std::map<std::pair<std::string, std::string>, double> fraction;
  for (const AnnotatedOutput& ann : read_annotation_file(annotation_path))
    fraction[{ann.example_id, ann.system_id}] = example_score(ann);
  for (CandidateSet& set : sets) {
    for (Candidate& c : set.candidates) {
      auto it = fraction.find({c.example_id, c.system_id});
      if (it == fraction.end()) continue;
      c.human_label = binary_label(it->second);
    }
  }
  return fraction;
}

// Computes coverage for candidates whose records omitted it, streaming the
// corpus for the articles.
void fill_coverage(std::vector<CandidateSet>& sets,
                   const std::optional<fs::path>& corpus_path) {
  std::unordered_map<std::string, CandidateSet*> pending;
  for (CandidateSet& set : sets)
    for (Candidate& c : set.candidates)
      if (c.coverage < 0.0) pending.emplace(set.example_id, &set);
  if (pending.empty()) return;
  if (!corpus_path)
    raise(Err::MissingCoverage,
          "candidates without a coverage field (first: '" +
              pending.begin()->first + "'); pass --corpus to compute it");

  auto in = open_input(*corpus_path);
  CorpusReader reader(in);
  while (auto ex = reader.next()) {
    auto it = pending.find(ex->id);
    if (it == pending.end()) continue;
    TokenSequence article = tokenize(ex->article);
    for (Candidate& c : it->second->candidates)
      if (c.coverage < 0.0)
        c.coverage = extractiveness(article, tokenize(c.summary)).coverage;
    pending.erase(it);
  }
  if (!pending.empty())
    raise(Err::MissingCoverage, "article for example '" +
                                    pending.begin()->first +
                                    "' not found in corpus");
}

std::vector<ControlPoint> load_curve_points(const fs::path& path, Units units) {
  auto points = read_control_points(path, units);
  if (points.empty())
    raise(Err::TooFewPoints, "no control points in " + path.string());
  return points;
}

std::vector<EffectiveFaithfulness> systems_vs_curve(const TradeoffCurve& curve,
                                                    const fs::path& systems_path,
                                                    Units units) {
  std::vector<EffectiveFaithfulness> rows;
  for (const ControlPoint& s : read_control_points(systems_path, units)) {
    SystemScore score;
    score.system_id = s.model_id;
    score.mean_coverage = s.coverage;
    score.mean_faithfulness = s.faithfulness;
    rows.push_back(effective_faithfulness(curve, score));
  }
  return rows;
}

}  // namespace

void run_metrics(const MetricsCmd& cmd) {
  auto in = open_input(cmd.input);
  auto out = open_output(cmd.output);
  CorpusReader reader(in);
  while (auto ex = reader.next()) {
    TokenSequence article = tokenize(ex->article);
    TokenSequence summary = tokenize(ex->summary);
    ExtractivenessMetrics m = extractiveness(article, summary);
    json rec{{"id", ex->id},
             {"coverage", from_fraction(m.coverage, cmd.units)},
             {"density", m.density},
             {"summary_len", m.summary_len}};
    out << rec.dump() << '\n';
  }
  if (!out) raise(Err::IoFailure, "write failed on " + cmd.output.string());
}

void run_split(const SplitCmd& cmd, std::ostream& table) {
  // Pass 1: per-example scalars only.
  std::vector<double> coverages;
  std::vector<std::uint32_t> article_lens, summary_lens;
  {
    auto in = open_input(cmd.input);
    CorpusReader reader(in);
    while (auto ex = reader.next()) {
      ExampleMetrics m = example_metrics(*ex);
      coverages.push_back(m.coverage);
      article_lens.push_back(static_cast<std::uint32_t>(m.article_len));
      summary_lens.push_back(static_cast<std::uint32_t>(m.summary_len));
    }
  }
  if (coverages.empty()) raise(Err::EmptyInput, "corpus is empty");
  QuartileThresholds t = coverage_thresholds(coverages);

  // Pass 2: route the original lines.
  std::array<std::ofstream, 4> qfiles;
  for (int q = 0; q < 4; ++q)
    qfiles[q] = open_output(cmd.output_prefix + ".q" + std::to_string(q + 1));
  {
    auto in = open_input(cmd.input);
    std::string line;
    std::size_t k = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      qfiles[quartile_of(coverages[k], t)] << line << '\n';
      ++k;
    }
  }

  struct Acc {
    std::size_t n = 0;
    double article = 0, summary = 0, coverage = 0;
  };
  std::array<Acc, 4> acc;
  for (std::size_t i = 0; i < coverages.size(); ++i) {
    Acc& a = acc[quartile_of(coverages[i], t)];
    ++a.n;
    a.article += article_lens[i];
    a.summary += summary_lens[i];
    a.coverage += coverages[i];
  }

  {
    auto out = open_output(cmd.output_prefix + ".thresholds.json");
    out << json{{"a", t.a}, {"b", t.b}, {"c", t.c}}.dump() << '\n';
  }
  {
    json stats = json::object();
    for (int q = 0; q < 4; ++q) {
      json bucket{{"count", acc[q].n}};
      if (acc[q].n > 0) {
        auto n = static_cast<double>(acc[q].n);
        bucket["mean_article_len"] = acc[q].article / n;
        bucket["mean_summary_len"] = acc[q].summary / n;
        bucket["mean_coverage"] = acc[q].coverage / n;
      } else {
        bucket["mean_article_len"] = nullptr;
        bucket["mean_summary_len"] = nullptr;
        bucket["mean_coverage"] = nullptr;
      }
      stats["q" + std::to_string(q + 1)] = std::move(bucket);
    }
    auto out = open_output(cmd.output_prefix + ".stats.json");
    out << stats.dump() << '\n';
  }

  std::vector<int> w{8, 7, 16, 16, 13};
  table_row(table, {"quartile", "count", "mean_article_len", "mean_summary_len",
                    "mean_coverage"}, w);
  for (int q = 0; q < 4; ++q) {
    std::string name = "q" + std::to_string(q + 1);
    if (acc[q].n == 0) {
      table_row(table, {name, "0", "-", "-", "-"}, w);
      continue;
    }
    auto n = static_cast<double>(acc[q].n);
    table_row(table,
              {name, std::to_string(acc[q].n), fixed2(acc[q].article / n),
               fixed2(acc[q].summary / n), pct(acc[q].coverage / n)},
              w);
  }
}

void run_score(const ScoreCmd& cmd, std::ostream& table) {
  auto annotations = read_annotation_file(cmd.annotations);
  if (annotations.empty()) raise(Err::EmptyInput, "no annotation records");

  // Summaries for records that omit them come from the candidates file.
  std::map<std::pair<std::string, std::string>, std::string> extra_summaries;
  if (cmd.candidates) {
    for (const CandidateSet& set : read_candidate_file(*cmd.candidates, cmd.units))
      for (const Candidate& c : set.candidates)
        extra_summaries[{c.example_id, c.system_id}] = c.summary;
  }

  std::unordered_map<std::string, std::string> articles;
  {
    std::unordered_set<std::string> needed;
    for (const AnnotatedOutput& ann : annotations) needed.insert(ann.example_id);
    auto in = open_input(cmd.corpus);
    CorpusReader reader(in);
    while (auto ex = reader.next())
      if (needed.count(ex->id)) articles.emplace(ex->id, std::move(ex->article));
  }

  std::map<std::string, std::vector<AnnotatedOutput>> by_system;
  for (AnnotatedOutput& ann : annotations) {
    if (ann.summary.empty()) {
      auto it = extra_summaries.find({ann.example_id, ann.system_id});
      if (it == extra_summaries.end())
        raise(Err::MissingCoverage, "no summary for ('" + ann.example_id +
                                        "', '" + ann.system_id +
                                        "'); annotation record has none and no "
                                        "--candidates file supplies one");
      ann.summary = it->second;
    }
    if (!articles.count(ann.example_id))
      raise(Err::MissingCoverage,
            "article for example '" + ann.example_id + "' not found in corpus");
    by_system[ann.system_id].push_back(std::move(ann));
  }

  auto out = open_output(cmd.output);
  std::vector<int> w{16, 6, 10, 14};
  table_row(table, {"system", "n", "coverage", "faithfulness"}, w);
  for (const auto& [system, anns] : by_system) {
    std::unordered_map<std::string, double> coverage_by_example;
    for (const AnnotatedOutput& ann : anns) {
      TokenSequence article = tokenize(articles[ann.example_id]);
      coverage_by_example[ann.example_id] =
          extractiveness(article, tokenize(ann.summary)).coverage;
    }
    SystemScore score = system_score(anns, coverage_by_example);
    json rec{{"system", score.system_id},
             {"n_examples", score.n_examples},
             {"mean_coverage", from_fraction(score.mean_coverage, cmd.units)},
             {"mean_faithfulness",
              from_fraction(score.mean_faithfulness, cmd.units)}};
    out << rec.dump() << '\n';
    table_row(table,
              {score.system_id, std::to_string(score.n_examples),
               pct(score.mean_coverage), pct(score.mean_faithfulness)},
              w);
  }
}

void run_curve(const CurveCmd& cmd) {
  auto curve = TradeoffCurve::build(load_curve_points(cmd.control, cmd.units));
  auto out = open_output(cmd.output);
  write_curve_report(curve, {}, out,
                     CurveReportOptions{cmd.samples, cmd.units == Units::Percent});
  if (cmd.svg) {
    auto svg = open_output(*cmd.svg);
    write_curve_svg(curve, {}, svg);
  }
}

void run_eff_faith(const EffFaithCmd& cmd, std::ostream& table) {
  auto curve = TradeoffCurve::build(load_curve_points(cmd.control, cmd.units));
  auto rows = systems_vs_curve(curve, cmd.systems, cmd.units);

  auto out = open_output(cmd.output);
  std::vector<int> w{18, 9, 13, 8, 7, 5};
  table_row(table,
            {"system", "coverage", "faithfulness", "control", "delta", "above"},
            w);
  for (const EffectiveFaithfulness& r : rows) {
    json rec{{"system", r.system_id},
             {"coverage", from_fraction(r.system_coverage, cmd.units)},
             {"faithfulness", from_fraction(r.system_faithfulness, cmd.units)},
             {"control", from_fraction(r.control_faithfulness, cmd.units)},
             {"delta", from_fraction(r.delta, cmd.units)},
             {"above", r.above_curve}};
    out << rec.dump() << '\n';
    table_row(table,
              {r.system_id, pct(r.system_coverage), pct(r.system_faithfulness),
               pct(r.control_faithfulness), pct(r.delta),
               r.above_curve ? "yes" : "no"},
              w);
  }

  fs::path plot_path = cmd.plot ? *cmd.plot : fs::path(cmd.output.string() + ".plot.tsv");
  auto plot = open_output(plot_path);
  write_curve_report(curve, rows, plot,
                     CurveReportOptions{cmd.samples, cmd.units == Units::Percent});
  if (cmd.svg) {
    auto svg = open_output(*cmd.svg);
    write_curve_svg(curve, rows, svg);
  }
}

void run_correlate(const CorrelateCmd& cmd, std::ostream& table) {
  auto pairs = read_pair_file(cmd.input, cmd.x_field, cmd.y_field);
  double r = correlate(pairs);
  char buf[64];
  std::snprintf(buf, sizeof buf, "pearson_r = %.4f  (n = %zu)", r, pairs.size());
  table << buf << '\n';
  if (cmd.output) {
    auto out = open_output(*cmd.output);
    out << json{{"n", pairs.size()}, {"pearson_r", r}}.dump() << '\n';
  }
}

void run_select(const SelectCmd& cmd, std::ostream& table) {
  auto sets = read_candidate_file(cmd.candidates, cmd.units);
  if (sets.empty()) raise(Err::EmptyInput, "no candidate records");
  fill_coverage(sets, cmd.corpus);
  auto fractions = join_annotations(sets, cmd.annotations);

  if (cmd.scorer == Scorer::CoverageDemo)
    for (CandidateSet& set : sets)
      for (Candidate& c : set.candidates) c.score = c.coverage;

  // Tuning needs a label on every candidate; report gaps before they
  // surface mid-fold.
  std::string missing;
  std::size_t n_missing = 0;
  for (const CandidateSet& set : sets)
    for (const Candidate& c : set.candidates)
      if (!c.human_label && ++n_missing <= 5)
        missing += " ('" + c.example_id + "', '" + c.system_id + "')";
  if (n_missing > 0)
    raise(Err::MissingLabel,
          std::to_string(n_missing) + " candidates have no annotation:" +
              missing + (n_missing > 5 ? " ..." : ""));

  CrossValidationOutput cv = cross_validated_select(sets, cmd.config);

  std::unordered_map<std::string, const CandidateSet*> set_by_id;
  for (const CandidateSet& set : sets) set_by_id.emplace(set.example_id, &set);

  auto out = open_output(cmd.output);
  std::size_t fallbacks = 0, labeled = 0;
  double coverage_sum = 0.0, faithfulness_sum = 0.0;
  for (const SelectionResult& r : cv.results) {
    json rec{{"id", r.example_id},
             {"system", r.chosen_system},
             {"fallback", r.fallback},
             {"threshold", threshold_json(r.threshold_used)}};
    out << rec.dump() << '\n';
    if (r.fallback) ++fallbacks;
    for (const Candidate& c : set_by_id[r.example_id]->candidates) {
      if (c.system_id != r.chosen_system) continue;
      coverage_sum += c.coverage;
      if (auto it = fractions.find({c.example_id, c.system_id});
          it != fractions.end()) {
        faithfulness_sum += it->second;
        ++labeled;
      }
    }
  }
  auto n = static_cast<double>(cv.results.size());
  double mean_coverage = coverage_sum / n;
  std::optional<double> mean_faithfulness;
  if (labeled > 0)
    mean_faithfulness = faithfulness_sum / static_cast<double>(labeled);

  json fold_list = json::array();
  for (const ThresholdResult& t : cv.fold_thresholds)
    fold_list.push_back(
        {{"threshold", threshold_json(t.threshold)}, {"objective", t.objective}});
  json summary{{"examples", cv.results.size()},
               {"fallbacks", fallbacks},
               {"folds", cmd.config.folds},
               {"seed", cmd.config.seed},
               {"mode", cmd.config.mode == SelectorMode::Roc ? "roc" : "fbeta"},
               {"scorer", cmd.scorer == Scorer::File ? "file" : "coverage-demo"},
               {"fold_thresholds", std::move(fold_list)},
               {"mean_selected_coverage", from_fraction(mean_coverage, cmd.units)},
               {"labeled_selected", labeled}};
  summary["beta"] =
      cmd.config.mode == SelectorMode::FBeta ? json(cmd.config.beta) : json();
  summary["mean_selected_faithfulness"] =
      mean_faithfulness ? json(from_fraction(*mean_faithfulness, cmd.units))
                        : json();
  fs::path summary_path =
      cmd.summary ? *cmd.summary : fs::path(cmd.output.string() + ".summary.json");
  open_output(summary_path) << summary.dump() << '\n';

  table << "examples                 " << cv.results.size() << '\n'
        << "fallbacks                " << fallbacks << '\n'
        << "mean selected coverage   " << pct(mean_coverage) << '\n';
  if (mean_faithfulness)
    table << "mean human faithfulness  " << pct(*mean_faithfulness) << "  ("
          << labeled << " labeled)\n";
}

void run_oracle(const OracleCmd& cmd, std::ostream& table) {
  auto sets = read_candidate_file(cmd.candidates, cmd.units);
  if (sets.empty()) raise(Err::EmptyInput, "no candidate records");
  fill_coverage(sets, cmd.corpus);
  auto fractions = join_annotations(sets, cmd.annotations);
  // Oracles run on human judgments: the faithfulness score of a candidate
  // is its annotator fraction, whatever the file said.
  for (CandidateSet& set : sets)
    for (Candidate& c : set.candidates) {
      auto it = fractions.find({c.example_id, c.system_id});
      c.score = it != fractions.end() ? std::optional<double>(it->second)
                                      : std::nullopt;
    }

  // Quartile-only view: the baseline never joins qfe's pool, and system
  // ranks are computed without it.
  std::vector<CandidateSet> quartile_sets;
  quartile_sets.reserve(sets.size());
  for (const CandidateSet& set : sets) {
    CandidateSet filtered{set.example_id, {}};
    for (const Candidate& c : set.candidates)
      if (c.system_id != cmd.baseline_system) filtered.candidates.push_back(c);
    quartile_sets.push_back(std::move(filtered));
  }
  SystemOrder order = SystemOrder::by_mean_coverage(quartile_sets);

  // Neighbor systems for bf/bfe: nearest mean coverage strictly above /
  // below the baseline's, unless pinned.
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const CandidateSet& set : sets)
    for (const Candidate& c : set.candidates) {
      auto& [sum, count] = sums[c.system_id];
      sum += c.coverage;
      ++count;
    }
  auto mean_of = [&](const std::string& system) {
    auto it = sums.find(system);
    if (it == sums.end())
      raise(Err::MissingCandidate, "no candidates for system '" + system + "'");
    return it->second.first / static_cast<double>(it->second.second);
  };
  std::string more_extractive, more_abstractive;
  if (cmd.kind != OracleKind::Qfe) {
    double base_mean = mean_of(cmd.baseline_system);
    if (cmd.more_extractive) {
      more_extractive = *cmd.more_extractive;
      mean_of(more_extractive);
    } else {
      double best = 2.0;
      for (const auto& [system, acc] : sums) {
        double mean = acc.first / static_cast<double>(acc.second);
        if (system != cmd.baseline_system && mean > base_mean && mean < best) {
          best = mean;
          more_extractive = system;
        }
      }
      if (more_extractive.empty())
        raise(Err::BadConfig, "no system more extractive than '" +
                                  cmd.baseline_system +
                                  "'; pin one with --more-extractive");
    }
    if (cmd.kind == OracleKind::Bfe) {
      if (cmd.more_abstractive) {
        more_abstractive = *cmd.more_abstractive;
        mean_of(more_abstractive);
      } else {
        double best = -1.0;
        for (const auto& [system, acc] : sums) {
          double mean = acc.first / static_cast<double>(acc.second);
          if (system != cmd.baseline_system && mean < base_mean && mean > best) {
            best = mean;
            more_abstractive = system;
          }
        }
        if (more_abstractive.empty())
          raise(Err::BadConfig, "no system more abstractive than '" +
                                    cmd.baseline_system +
                                    "'; pin one with --more-abstractive");
      }
    }
  }

  auto find_candidate = [](const CandidateSet& set,
                           const std::string& system) -> const Candidate& {
    for (const Candidate& c : set.candidates)
      if (c.system_id == system) return c;
    raise(Err::MissingCandidate, "example '" + set.example_id +
                                     "' has no candidate for system '" + system +
                                     "'");
  };

  auto out = open_output(cmd.output);
  double coverage_sum = 0.0, faithfulness_sum = 0.0;
  std::size_t labeled = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Candidate* chosen = nullptr;
    switch (cmd.kind) {
      case OracleKind::Bf:
        chosen = &oracle_bf(find_candidate(sets[i], cmd.baseline_system),
                            find_candidate(sets[i], more_extractive));
        break;
      case OracleKind::Bfe:
        chosen = &oracle_bfe(find_candidate(sets[i], cmd.baseline_system),
                             find_candidate(sets[i], more_abstractive),
                             find_candidate(sets[i], more_extractive));
        break;
      case OracleKind::Qfe:
        if (quartile_sets[i].candidates.empty())
          raise(Err::MissingCandidate, "example '" + sets[i].example_id +
                                           "' has no non-baseline candidates");
        chosen = &oracle_qfe(quartile_sets[i], order);
        break;
    }
    out << json{{"id", chosen->example_id}, {"system", chosen->system_id}}.dump()
        << '\n';
    coverage_sum += chosen->coverage;
    if (auto it = fractions.find({chosen->example_id, chosen->system_id});
        it != fractions.end()) {
      faithfulness_sum += it->second;
      ++labeled;
    }
  }

  auto n = static_cast<double>(sets.size());
  table << "examples                 " << sets.size() << '\n'
        << "mean selected coverage   " << pct(coverage_sum / n) << '\n';
  if (labeled > 0)
    table << "mean human faithfulness  "
          << pct(faithfulness_sum / static_cast<double>(labeled)) << "  ("
          << labeled << " labeled)\n";
}

void run_report(const ReportCmd& cmd) {
  auto curve = TradeoffCurve::build(load_curve_points(cmd.control, cmd.units));
  std::vector<EffectiveFaithfulness> rows;
  if (cmd.systems) rows = systems_vs_curve(curve, *cmd.systems, cmd.units);
  auto out = open_output(cmd.output);
  write_curve_report(curve, rows, out,
                     CurveReportOptions{cmd.samples, cmd.units == Units::Percent});
  if (cmd.svg) {
    auto svg = open_output(*cmd.svg);
    write_curve_svg(curve, rows, svg);
  }
}

}  // namespace facet::cli
