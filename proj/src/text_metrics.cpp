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

#include "facet/text_metrics.hpp"

#include <cstdint>
#include <unordered_map>

#include "facet/errors.hpp"

namespace facet {

namespace {

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0:
    case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_ascii_punct(unsigned char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

// Decodes one UTF-8 codepoint at `i`, advancing `i` past it. Malformed bytes
// are consumed one at a time and reported as themselves (never whitespace).
char32_t next_codepoint(std::string_view text, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(text[i]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    ++i;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + len > text.size()) {
    ++i;
    return b0;
  }
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char b = static_cast<unsigned char>(text[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

void push_token(std::vector<std::string>& tokens, std::string& word) {
  std::size_t begin = 0;
  std::size_t end = word.size();
  while (begin < end && is_ascii_punct(static_cast<unsigned char>(word[begin])))
    ++begin;
  while (end > begin && is_ascii_punct(static_cast<unsigned char>(word[end - 1])))
    --end;
  if (end > begin) tokens.emplace_back(word.substr(begin, end - begin));
  word.clear();
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence seq;
  seq.original_text.assign(text);
  std::string word;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = next_codepoint(text, i);
    if (is_unicode_space(cp)) {
      push_token(seq.tokens, word);
      continue;
    }
    for (std::size_t k = start; k < i; ++k) {
      char c = text[k];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      word.push_back(c);
    }
  }
  push_token(seq.tokens, word);
  return seq;
}

FragmentDecomposition greedy_fragments(const TokenSequence& article,
                                       const TokenSequence& summary) {
  if (summary.empty())
    raise(Err::EmptySummary, "summary has no tokens after normalization");

  FragmentDecomposition out;
  out.summary_len = summary.size();
  out.article_len = article.size();

  // Token ids over the article vocabulary; summary tokens absent from the
  // article get id -1 and can never match.
  std::unordered_map<std::string_view, std::int32_t> vocab;
  vocab.reserve(article.size());
  std::vector<std::int32_t> article_ids(article.size());
  for (std::size_t p = 0; p < article.size(); ++p) {
    auto [it, inserted] =
        vocab.emplace(article.tokens[p], static_cast<std::int32_t>(vocab.size()));
    article_ids[p] = it->second;
  }
  std::vector<std::vector<std::size_t>> positions(vocab.size());
  for (std::size_t p = 0; p < article.size(); ++p)
    positions[static_cast<std::size_t>(article_ids[p])].push_back(p);

  std::vector<std::int32_t> summary_ids(summary.size());
  for (std::size_t s = 0; s < summary.size(); ++s) {
    auto it = vocab.find(std::string_view(summary.tokens[s]));
    summary_ids[s] = it == vocab.end() ? -1 : it->second;
  }

  std::size_t i = 0;
  while (i < summary.size()) {
    std::size_t best_len = 0;
    std::size_t best_pos = 0;
    if (summary_ids[i] >= 0) {
      for (std::size_t p : positions[static_cast<std::size_t>(summary_ids[i])]) {
        std::size_t len = 0;
        while (i + len < summary.size() && p + len < article.size() &&
               summary_ids[i + len] == article_ids[p + len])
          ++len;
        if (len > best_len) {  // strict: first maximum keeps smallest index
          best_len = len;
          best_pos = p;
        }
      }
    }
    if (best_len >= 1) {
      out.fragments.push_back(Fragment{i, best_pos, best_len});
      i += best_len;
    } else {
      ++i;
    }
  }
  return out;
}

ExtractivenessMetrics extractiveness(const FragmentDecomposition& parse) {
  if (parse.summary_len == 0)
    raise(Err::EmptySummary, "decomposition over an empty summary");
  std::size_t covered = 0;
  std::size_t squared = 0;
  for (const Fragment& f : parse.fragments) {
    covered += f.length;
    squared += f.length * f.length;
  }
  ExtractivenessMetrics m;
  m.summary_len = parse.summary_len;
  m.coverage = static_cast<double>(covered) / static_cast<double>(parse.summary_len);
  m.density = static_cast<double>(squared) / static_cast<double>(parse.summary_len);
  return m;
}

ExtractivenessMetrics extractiveness(const TokenSequence& article,
                                     const TokenSequence& summary) {
  return extractiveness(greedy_fragments(article, summary));
}

std::vector<IndexRange> novelty_spans(const FragmentDecomposition& parse) {
  if (parse.summary_len == 0)
    raise(Err::EmptySummary, "decomposition over an empty summary");
  std::vector<IndexRange> spans;
  std::size_t cursor = 0;
  for (const Fragment& f : parse.fragments) {
    if (f.summary_start > cursor) spans.emplace_back(cursor, f.summary_start);
    cursor = f.summary_start + f.length;
  }
  if (cursor < parse.summary_len) spans.emplace_back(cursor, parse.summary_len);
  return spans;
}

std::vector<IndexRange> novelty_spans(const TokenSequence& article,
                                      const TokenSequence& summary) {
  return novelty_spans(greedy_fragments(article, summary));
}

}  // namespace facet
