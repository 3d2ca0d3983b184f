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

// Brute-force reference implementations the real code is checked against.
// These stay deliberately naive and independent of the library's internals:
// plain string comparisons, full rescans, no shared helpers.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facet/selection.hpp"
#include "facet/text_metrics.hpp"

namespace oracles {

// O(|article| * |summary|^2) greedy parse over raw token strings: at each
// summary position, scan every article position for the longest match.
inline facet::FragmentDecomposition naive_greedy(
    const std::vector<std::string>& article,
    const std::vector<std::string>& summary) {
  facet::FragmentDecomposition out;
  out.summary_len = summary.size();
  out.article_len = article.size();
  std::size_t i = 0;
  while (i < summary.size()) {
    std::size_t best_len = 0, best_pos = 0;
    for (std::size_t p = 0; p < article.size(); ++p) {
      std::size_t len = 0;
      while (i + len < summary.size() && p + len < article.size() &&
             summary[i + len] == article[p + len])
        ++len;
      if (len > best_len) {
        best_len = len;
        best_pos = p;
      }
    }
    if (best_len >= 1) {
      out.fragments.push_back(facet::Fragment{i, best_pos, best_len});
      i += best_len;
    } else {
      ++i;
    }
  }
  return out;
}

inline double naive_coverage(const facet::FragmentDecomposition& d) {
  std::size_t covered = 0;
  for (const auto& f : d.fragments) covered += f.length;
  return static_cast<double>(covered) / static_cast<double>(d.summary_len);
}

inline double naive_density(const facet::FragmentDecomposition& d) {
  std::size_t sq = 0;
  for (const auto& f : d.fragments) sq += f.length * f.length;
  return static_cast<double>(sq) / static_cast<double>(d.summary_len);
}

// All candidate cut-points: -inf, midpoints between adjacent distinct
// scores, +inf.
inline std::vector<double> all_cuts(const std::vector<facet::ScoredLabel>& data) {
  std::vector<double> scores;
  for (const auto& [s, l] : data) scores.push_back(s);
  std::sort(scores.begin(), scores.end());
  scores.erase(std::unique(scores.begin(), scores.end()), scores.end());
  std::vector<double> cuts{-std::numeric_limits<double>::infinity()};
  for (std::size_t i = 1; i < scores.size(); ++i)
    cuts.push_back((scores[i - 1] + scores[i]) / 2.0);
  cuts.push_back(std::numeric_limits<double>::infinity());
  return cuts;
}

struct Confusion {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

inline Confusion confusion_at(const std::vector<facet::ScoredLabel>& data,
                              double cut) {
  Confusion c;
  for (const auto& [score, label] : data) {
    bool predicted = score >= cut;
    if (predicted && label) ++c.tp;
    if (predicted && !label) ++c.fp;
    if (!predicted && label) ++c.fn;
    if (!predicted && !label) ++c.tn;
  }
  return c;
}

inline double youden_j(const Confusion& c) {
  double tpr = c.tp + c.fn ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
  double fpr = c.fp + c.tn ? static_cast<double>(c.fp) / (c.fp + c.tn) : 0.0;
  return tpr - fpr;
}

inline double f_beta(const Confusion& c, double beta) {
  if (c.tp == 0) return 0.0;
  double p = static_cast<double>(c.tp) / (c.tp + c.fp);
  double r = static_cast<double>(c.tp) / (c.tp + c.fn);
  double b2 = beta * beta;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

// Exhaustive sweep: recompute the confusion matrix from scratch at every
// cut, keep the best objective, ties toward the higher cut.
template <typename Objective>
facet::ThresholdResult sweep_best(const std::vector<facet::ScoredLabel>& data,
                                  Objective objective) {
  facet::ThresholdResult best{0.0, -std::numeric_limits<double>::infinity()};
  bool first = true;
  for (double cut : all_cuts(data)) {
    double value = objective(confusion_at(data, cut));
    if (first || value > best.objective ||
        (value == best.objective && cut > best.threshold)) {
      best = {cut, value};
      first = false;
    }
  }
  return best;
}

// The set of indices predicted faithful by a threshold; the tuners are
// compared on these partitions.
inline std::set<std::size_t> cut_partition(
    const std::vector<facet::ScoredLabel>& data, double threshold) {
  std::set<std::size_t> predicted;
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i].first >= threshold) predicted.insert(i);
  return predicted;
}

// Deterministic uniform double in [0, 1).
inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace oracles
