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

#include "facet/selection.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "facet/errors.hpp"

namespace facet {

SystemOrder::SystemOrder(std::vector<std::string> most_abstractive_first)
    : systems_(std::move(most_abstractive_first)) {
  for (std::size_t i = 0; i < systems_.size(); ++i) rank_.emplace(systems_[i], i);
}

SystemOrder SystemOrder::by_mean_coverage(std::span<const CandidateSet> sets) {
  std::map<std::string, std::pair<double, std::size_t>> sums;  // sum, count
  for (const CandidateSet& set : sets) {
    for (const Candidate& c : set.candidates) {
      auto& [sum, n] = sums[c.system_id];
      sum += c.coverage;
      ++n;
    }
  }
  std::vector<std::pair<double, std::string>> ranked;
  ranked.reserve(sums.size());
  for (const auto& [system, acc] : sums)
    ranked.emplace_back(acc.first / static_cast<double>(acc.second), system);
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> order;
  order.reserve(ranked.size());
  for (auto& [cov, system] : ranked) order.push_back(std::move(system));
  return SystemOrder(std::move(order));
}

std::size_t SystemOrder::rank(const std::string& system_id) const {
  auto it = rank_.find(system_id);
  return it == rank_.end() ? systems_.size() : it->second;
}

namespace {

bool require_label(const Candidate& c) {
  if (!c.human_label)
    raise(Err::MissingLabel, "candidate ('" + c.example_id + "', '" +
                                 c.system_id + "') carries no human label");
  return *c.human_label;
}

}  // namespace

const Candidate& oracle_bf(const Candidate& baseline,
                           const Candidate& more_extractive) {
  return require_label(baseline) ? baseline : more_extractive;
}

const Candidate& oracle_bfe(const Candidate& baseline,
                            const Candidate& more_abstractive,
                            const Candidate& more_extractive) {
  if (!require_label(baseline)) return more_extractive;
  return require_label(more_abstractive) ? more_abstractive : baseline;
}

const Candidate& oracle_qfe(const CandidateSet& set, const SystemOrder& order) {
  if (set.candidates.empty())
    raise(Err::EmptyInput, "empty candidate set for '" + set.example_id + "'");
  const Candidate* best = nullptr;
  for (const Candidate& c : set.candidates) {
    if (!c.score)
      raise(Err::MissingScore, "candidate ('" + c.example_id + "', '" +
                                   c.system_id + "') carries no score");
    if (!best) {
      best = &c;
      continue;
    }
    // Keys: score desc, coverage asc, system rank asc (most abstractive).
    if (*c.score != *best->score) {
      if (*c.score > *best->score) best = &c;
    } else if (c.coverage != best->coverage) {
      if (c.coverage < best->coverage) best = &c;
    } else if (order.rank(c.system_id) < order.rank(best->system_id)) {
      best = &c;
    }
  }
  return *best;
}

namespace {

// Shared cut-point sweep. Cuts are -inf, midpoints between adjacent distinct
// sorted scores, +inf; at each cut everything with score >= cut is predicted
// faithful. `objective(tp, fp)` scores a cut; ties go to the higher cut.
template <typename Objective>
ThresholdResult sweep_cuts(std::span<const ScoredLabel> labeled,
                           Objective objective) {
  std::vector<ScoredLabel> sorted(labeled.begin(), labeled.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredLabel& l, const ScoredLabel& r) {
              return l.first < r.first;
            });

  // Suffix counts at each distinct score: predictions for the cut just below
  // that score. Walk descending and accumulate.
  struct Cut {
    double threshold;
    std::size_t tp, fp;
  };
  std::vector<Cut> cuts;
  cuts.reserve(sorted.size() + 2);
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = sorted.size(); i-- > 0;) {
    if (sorted[i].second)
      ++tp;
    else
      ++fp;
    bool lowest_of_value = i == 0 || sorted[i - 1].first != sorted[i].first;
    if (!lowest_of_value) continue;
    double cut = i == 0 ? -std::numeric_limits<double>::infinity()
                        : (sorted[i - 1].first + sorted[i].first) / 2.0;
    cuts.push_back(Cut{cut, tp, fp});
  }
  cuts.push_back(Cut{std::numeric_limits<double>::infinity(), 0, 0});

  ThresholdResult best{cuts.front().threshold,
                       objective(cuts.front().tp, cuts.front().fp)};
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    double value = objective(cuts[i].tp, cuts[i].fp);
    bool better = value > best.objective ||
                  (value == best.objective && cuts[i].threshold > best.threshold);
    if (better) best = ThresholdResult{cuts[i].threshold, value};
  }
  return best;
}

}  // namespace

ThresholdResult tune_threshold_roc(std::span<const ScoredLabel> labeled) {
  std::size_t pos = 0, neg = 0;
  for (const auto& [score, label] : labeled) (label ? pos : neg)++;
  if (pos == 0 || neg == 0)
    raise(Err::SingleClass, "ROC tuning needs both classes; got " +
                                std::to_string(pos) + " positive, " +
                                std::to_string(neg) + " negative");
  return sweep_cuts(labeled, [pos, neg](std::size_t tp, std::size_t fp) {
    double tpr = static_cast<double>(tp) / static_cast<double>(pos);
    double fpr = static_cast<double>(fp) / static_cast<double>(neg);
    return tpr - fpr;
  });
}

ThresholdResult tune_threshold_fbeta(std::span<const ScoredLabel> labeled,
                                     double beta) {
  if (!(beta > 0.0 && beta <= 10.0))
    raise(Err::BadConfig, "beta must lie in (0, 10]");
  std::size_t pos = 0;
  for (const auto& [score, label] : labeled)
    if (label) ++pos;
  if (pos == 0)
    raise(Err::NoPositives, "F_beta tuning needs at least one positive label");
  double b2 = beta * beta;
  return sweep_cuts(labeled, [pos, b2](std::size_t tp, std::size_t fp) {
    if (tp == 0) return 0.0;
    double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    double recall = static_cast<double>(tp) / static_cast<double>(pos);
    return (1.0 + b2) * precision * recall / (b2 * precision + recall);
  });
}

SelectionResult select(const CandidateSet& set, double threshold) {
  if (set.candidates.empty())
    raise(Err::EmptyInput, "empty candidate set for '" + set.example_id + "'");
  const Candidate* chosen = nullptr;
  const Candidate* most_extractive = nullptr;
  for (const Candidate& c : set.candidates) {
    if (!c.score)
      raise(Err::MissingScore, "candidate ('" + c.example_id + "', '" +
                                   c.system_id + "') carries no score");
    auto beats = [](const Candidate& l, const Candidate& r) {
      return l.coverage != r.coverage ? l.coverage < r.coverage
                                      : l.system_id < r.system_id;
    };
    if (*c.score >= threshold && (!chosen || beats(c, *chosen))) chosen = &c;
    if (!most_extractive || beats(*most_extractive, c)) most_extractive = &c;
  }
  const Candidate& pick = chosen ? *chosen : *most_extractive;
  return SelectionResult{pick.example_id, pick.system_id, pick.summary,
                         threshold, chosen == nullptr};
}

CrossValidationOutput cross_validated_select(std::span<const CandidateSet> sets,
                                             const SelectorConfig& config) {
  if (config.folds < 2) raise(Err::BadConfig, "folds must be >= 2");
  if (config.mode == SelectorMode::FBeta && !(config.beta > 0.0 && config.beta <= 10.0))
    raise(Err::BadConfig, "F_beta mode requires beta in (0, 10]");
  auto n = sets.size();
  if (n < static_cast<std::size_t>(config.folds))
    raise(Err::TooFewExamples, std::to_string(n) + " examples cannot fill " +
                                   std::to_string(config.folds) + " folds");

  // Hand-rolled Fisher-Yates so fold assignment is identical everywhere
  // (std::shuffle's draw sequence is implementation-defined).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  auto folds = static_cast<std::size_t>(config.folds);
  std::vector<std::size_t> fold_of(n);
  std::size_t base = n / folds, rem = n % folds, cursor = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    std::size_t size = base + (f < rem ? 1 : 0);
    for (std::size_t k = 0; k < size; ++k) fold_of[order[cursor++]] = f;
  }

  CrossValidationOutput out;
  out.fold_thresholds.reserve(folds);
  out.results.resize(n);
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<ScoredLabel> train;
    for (std::size_t i = 0; i < n; ++i) {
      if (fold_of[i] == f) continue;
      for (const Candidate& c : sets[i].candidates) {
        if (!c.score)
          raise(Err::MissingScore, "candidate ('" + c.example_id + "', '" +
                                       c.system_id + "') carries no score");
        train.emplace_back(*c.score, require_label(c));
      }
    }
    ThresholdResult tuned = config.mode == SelectorMode::Roc
                                ? tune_threshold_roc(train)
                                : tune_threshold_fbeta(train, config.beta);
    out.fold_thresholds.push_back(tuned);
    for (std::size_t i = 0; i < n; ++i)
      if (fold_of[i] == f) out.results[i] = select(sets[i], tuned.threshold);
  }
  return out;
}

}  // namespace facet
