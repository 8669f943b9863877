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

#include "frc/text/text.h"

#include <algorithm>
#include <array>

namespace frc::text {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_word_byte(unsigned char c) {
  if (c >= 0x80) return true;
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'' || c == '-';
}

bool is_clause_punct(unsigned char c) {
  return c == ',' || c == ';' || c == '.' || c == '!' || c == '?' ||
         c == ':';
}

// Full-width comma, ideographic full stop, full-width !, ?, ;
constexpr std::array<std::string_view, 5> kCjkPunct = {
    "\xEF\xBC\x8C", "\xE3\x80\x82", "\xEF\xBC\x81", "\xEF\xBC\x9F",
    "\xEF\xBC\x9B"};

std::size_t cjk_punct_length(std::string_view s, std::size_t pos) {
  for (auto p : kCjkPunct) {
    if (s.substr(pos, p.size()) == p) return p.size();
  }
  return 0;
}

constexpr std::array<std::string_view, 6> kClauseOpeners = {
    "but", "however", "yet", "although", "though", "whereas"};

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string normalize_key(std::string_view s) { return to_lower(trim(s)); }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (cjk_punct_length(s, i) > 0) {
      i += cjk_punct_length(s, i);
      continue;
    }
    if (!is_word_byte(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < s.size() && is_word_byte(static_cast<unsigned char>(s[i])) &&
           cjk_punct_length(s, i) == 0) {
      ++i;
    }
    std::size_t e = i;
    while (b < e && (s[b] == '\'' || s[b] == '-')) ++b;
    while (e > b && (s[e - 1] == '\'' || s[e - 1] == '-')) --e;
    if (b < e) tokens.push_back(Token{to_lower(s.substr(b, e - b)), b, e});
  }
  return tokens;
}

std::vector<std::string> token_strings(std::string_view s) {
  std::vector<std::string> out;
  for (auto& t : tokenize(s)) out.push_back(std::move(t.text));
  return out;
}

bool is_clause_opener(std::string_view lowercase_word) {
  return std::find(kClauseOpeners.begin(), kClauseOpeners.end(),
                   lowercase_word) != kClauseOpeners.end();
}

std::vector<Span> split_clauses(std::string_view s) {
  std::vector<std::size_t> cuts;  // a clause ends right before each cut
  for (std::size_t i = 0; i < s.size();) {
    if (std::size_t n = cjk_punct_length(s, i); n > 0) {
      cuts.push_back(i + n);
      i += n;
    } else {
      if (is_clause_punct(static_cast<unsigned char>(s[i]))) {
        cuts.push_back(i + 1);
      }
      ++i;
    }
  }
  for (const auto& token : tokenize(s)) {
    if (is_clause_opener(token.text)) cuts.push_back(token.begin);
  }
  cuts.push_back(s.size());
  std::sort(cuts.begin(), cuts.end());

  std::vector<Span> clauses;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    if (cut <= start) continue;
    std::string_view piece = s.substr(start, cut - start);
    std::string_view trimmed = trim(piece);
    if (!tokenize(trimmed).empty()) {
      std::size_t b = start + static_cast<std::size_t>(trimmed.data() -
                                                       piece.data());
      clauses.push_back(Span{b, b + trimmed.size()});
    } else if (!clauses.empty() && !trimmed.empty()) {
      // Trailing punctuation without words stays with the previous clause.
      clauses.back().end =
          start + static_cast<std::size_t>(trimmed.data() - piece.data()) +
          trimmed.size();
    }
    start = cut;
  }
  return clauses;
}

std::optional<std::size_t> find_ci(std::string_view haystack,
                                   std::string_view needle, std::size_t from) {
  if (needle.empty()) return std::nullopt;
  std::string h = to_lower(haystack);
  std::string n = to_lower(needle);
  std::size_t pos = h.find(n, from);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::size_t edit_distance(std::span<const std::string> a,
                          std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double normalized_token_distance(std::string_view a, std::string_view b) {
  auto ta = token_strings(a);
  auto tb = token_strings(b);
  std::size_t longest = std::max(ta.size(), tb.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(edit_distance(ta, tb)) /
         static_cast<double>(longest);
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace frc::text
