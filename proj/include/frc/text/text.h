// Copyright 2026 The FRC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRC_TEXT_TEXT_H_
#define FRC_TEXT_TEXT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frc::text {

// A lowercased word together with its byte range in the source text.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Half-open byte range into a source string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
// Lowercase + trim; the key used for exact knowledge matching.
std::string normalize_key(std::string_view s);

// Words are maximal runs of ASCII letters, digits, apostrophes and hyphens,
// plus any non-ASCII bytes (UTF-8 text other than CJK punctuation passes
// through as word characters). Leading and trailing apostrophes/hyphens are
// dropped.
std::vector<Token> tokenize(std::string_view s);
std::vector<std::string> token_strings(std::string_view s);

// True for the contrastive connectives that open a new clause.
bool is_clause_opener(std::string_view lowercase_word);

// Clause spans, trimmed, each holding at least one token. A clause ends at
// sentence or clause punctuation (ASCII and full-width CJK) and a new one
// starts before a contrastive connective such as "but".
std::vector<Span> split_clauses(std::string_view s);

// Case-insensitive (ASCII) search for `needle` starting at `from`.
std::optional<std::size_t> find_ci(std::string_view haystack,
                                   std::string_view needle,
                                   std::size_t from = 0);

// Levenshtein distance between two token sequences.
std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b);

// Token-level edit distance divided by the longer token count, in [0,1].
// Two token-free strings are at distance 0.
double normalized_token_distance(std::string_view a, std::string_view b);

// Joins with a separator.
std::string join(std::span<const std::string> parts, std::string_view sep);

}  // namespace frc::text

#endif  // FRC_TEXT_TEXT_H_
