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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace facet {

// One system's candidate summary for an example. `score` is a pluggable
// faithfulness score (human fraction, external scorer output, ...);
// `human_label` comes from the majority rule over human judgments.
struct Candidate {
  std::string example_id;
  std::string system_id;
  std::string summary;
  double coverage = 0.0;
  std::optional<double> score;
  std::optional<bool> human_label;
};

// All candidates for one example. Systems are distinct within a set.
struct CandidateSet {
  std::string example_id;
  std::vector<Candidate> candidates;
};

// Systems ordered from most abstractive to most extractive. Resolves ties
// the coverage key cannot (oracle_qfe's final tie-break).
class SystemOrder {
 public:
  explicit SystemOrder(std::vector<std::string> most_abstractive_first);

  // Ranks systems by mean candidate coverage, ascending; ties by system id.
  static SystemOrder by_mean_coverage(std::span<const CandidateSet> sets);

  // Lower rank = more abstractive. Unknown systems rank last.
  std::size_t rank(const std::string& system_id) const;
  const std::vector<std::string>& systems() const { return systems_; }

 private:
  std::vector<std::string> systems_;
  std::unordered_map<std::string, std::size_t> rank_;
};

// "Baseline, falling back to more extractive": the baseline candidate when
// its human label is faithful, otherwise the candidate of the system more
// extractive than the baseline. Throws Err::MissingLabel.
const Candidate& oracle_bf(const Candidate& baseline,
                           const Candidate& more_extractive);

// Like oracle_bf when the baseline is unfaithful; when the baseline is
// faithful, prefers the more abstractive candidate if that one is also
// faithful. Throws Err::MissingLabel.
const Candidate& oracle_bfe(const Candidate& baseline,
                            const Candidate& more_abstractive,
                            const Candidate& more_extractive);

// Most faithful output with the highest abstractiveness: among candidates
// with the maximal faithfulness score, the one with minimal coverage; ties
// on both resolved toward the most abstractive system in `order`.
// Every candidate must carry a score (Err::MissingScore).
const Candidate& oracle_qfe(const CandidateSet& set, const SystemOrder& order);

// Score threshold plus the objective value (Youden's J or F_beta) reached
// at it. Candidate thresholds are midpoints between adjacent distinct
// scores plus -inf/+inf sentinels; "predicted faithful" means score >=
// threshold; objective ties resolve toward the higher threshold.
struct ThresholdResult {
  double threshold = 0.0;
  double objective = 0.0;
};

using ScoredLabel = std::pair<double, bool>;  // (score, human label)

// Maximizes Youden's J = TPR - FPR over the ROC operating points.
// Throws Err::SingleClass unless both classes are present.
ThresholdResult tune_threshold_roc(std::span<const ScoredLabel> labeled);

// Maximizes F_beta = (1+b^2)PR / (b^2 P + R); beta < 1 weights precision.
// Throws Err::NoPositives without a positive label, Err::BadConfig unless
// beta lies in (0, 10].
ThresholdResult tune_threshold_fbeta(std::span<const ScoredLabel> labeled,
                                     double beta);

struct SelectionResult {
  std::string example_id;
  std::string chosen_system;
  std::string chosen_summary;
  double threshold_used = 0.0;
  bool fallback = false;  // no candidate passed; most extractive returned
};

// Most abstractive candidate whose score clears the threshold: minimal
// coverage among candidates with score >= threshold (ties by ascending
// system id). When none pass, the maximal-coverage candidate (ties by
// descending system id) with fallback = true. Every candidate must carry a
// score (Err::MissingScore).
SelectionResult select(const CandidateSet& set, double threshold);

enum class SelectorMode { Roc, FBeta };

struct SelectorConfig {
  SelectorMode mode = SelectorMode::Roc;
  double beta = 0.0;     // F_beta mode only; valid range (0, 10]
  int folds = 10;        // >= 2
  std::uint64_t seed = 0;
};

struct CrossValidationOutput {
  std::vector<SelectionResult> results;     // input order
  std::vector<ThresholdResult> fold_thresholds;
};

// K-fold cross-validated selection: examples are shuffled by seed and cut
// into near-equal folds; each fold's threshold is tuned on every labeled
// (score, label) pair of candidates from the other folds, then applied to
// the fold's examples. Deterministic given the seed.
// Throws Err::TooFewExamples, Err::BadConfig, Err::MissingLabel (a training
// candidate without a human label), and the tuners' errors per fold.
CrossValidationOutput cross_validated_select(std::span<const CandidateSet> sets,
                                             const SelectorConfig& config);

}  // namespace facet
