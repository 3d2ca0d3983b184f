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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace facet {

// A normalized token stream. Normalization is deterministic: split on
// Unicode whitespace, lowercase ASCII letters, strip leading/trailing ASCII
// punctuation from each token, drop tokens that end up empty. Non-ASCII
// bytes pass through untouched.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::string original_text;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

TokenSequence tokenize(std::string_view text);

// A shared token span: summary[summary_start, summary_start + length) equals
// article[article_start, article_start + length) tokenwise.
struct Fragment {
  std::size_t summary_start = 0;
  std::size_t article_start = 0;
  std::size_t length = 0;

  bool operator==(const Fragment&) const = default;
};

// Output of the greedy left-to-right shared-fragment parse. Fragments are
// sorted by summary_start and non-overlapping in summary index space.
struct FragmentDecomposition {
  std::vector<Fragment> fragments;
  std::size_t summary_len = 0;
  std::size_t article_len = 0;
};

// Greedy parse: at each summary position i, find the maximum L such that
// summary[i, i+L) occurs contiguously in the article; if L >= 1, emit a
// fragment (ties among equal-length article matches go to the smallest
// article index) and advance past it, otherwise advance by one token.
//
// Internally the article is indexed by token so long inputs avoid a full
// quadratic scan; the result is identical to the naive definition.
//
// Throws Err::EmptySummary when the summary has no tokens.
FragmentDecomposition greedy_fragments(const TokenSequence& article,
                                       const TokenSequence& summary);

struct ExtractivenessMetrics {
  double coverage = 0.0;  // (sum of fragment lengths) / summary_len, in [0,1]
  double density = 0.0;   // (sum of squared fragment lengths) / summary_len
  std::size_t summary_len = 0;
};

ExtractivenessMetrics extractiveness(const FragmentDecomposition& parse);
ExtractivenessMetrics extractiveness(const TokenSequence& article,
                                     const TokenSequence& summary);

// Half-open [begin, end) token index ranges of the summary not covered by
// any fragment, ordered, maximal.
using IndexRange = std::pair<std::size_t, std::size_t>;

std::vector<IndexRange> novelty_spans(const FragmentDecomposition& parse);
std::vector<IndexRange> novelty_spans(const TokenSequence& article,
                                      const TokenSequence& summary);

}  // namespace facet
