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

#include "frc/backends/lexicon_backend.h"

#include <algorithm>

#include "frc/text/text.h"

namespace frc {
namespace {

struct Candidate {
  std::size_t first = 0;  // token range, inclusive
  std::size_t last = 0;
  bool injected = false;

  std::size_t length() const { return last - first + 1; }
};

MembershipVector whole_text_degrees(const std::string& text,
                                    const ClassSet& classes,
                                    const Lexicon& lexicon) {
  return lexicon_membership(text::token_strings(text), classes, lexicon);
}

std::string format_degrees(const ClassSet& classes,
                           std::span<const double> values) {
  std::string out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c > 0) out += ", ";
    out += classes.name(c) + "=" + std::to_string(values[c]);
  }
  return out;
}

}  // namespace

LexiconBackend::LexiconBackend(Lexicon lexicon)
    : lexicon_(std::move(lexicon)) {
  lexicon_.validate();
  id_ = "lexicon:" + lexicon_.fingerprint();
}

std::string LexiconBackend::id() const { return id_; }

ElicitationResponse LexiconBackend::elicit(const ElicitationRequest& request) {
  const ClassSet& classes = request.classes;
  switch (request.kind) {
    case ElicitationKind::kKeywordExtraction:
      return extract_keywords(request);

    case ElicitationKind::kKeywordMembership:
      if (request.injected) {
        if (const auto* known = request.injected->find_keyword(request.text)) {
          return known->memberships;
        }
      }
      return whole_text_degrees(request.text, classes, lexicon_);

    case ElicitationKind::kSubunitSegmentation: {
      SpanList spans;
      for (const auto& span : text::split_clauses(request.text)) {
        spans.spans.push_back(request.text.substr(span.begin, span.size()));
      }
      return spans;
    }

    case ElicitationKind::kWeightAssignment:
      return assign_weights(request);

    case ElicitationKind::kCotProbabilities: {
      MembershipVector degrees =
          whole_text_degrees(request.text, classes, lexicon_);
      std::vector<double> p(classes.size(), 0.0);
      double sum = 0.0;
      for (double d : degrees) sum += d;
      if (sum > 0.0) {
        for (std::size_t c = 0; c < p.size(); ++c) p[c] = degrees[c] / sum;
      } else if (classes.includes_other()) {
        p[*classes.index_of(kOtherClass)] = 1.0;
      } else {
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
      }
      std::vector<std::string> steps{
          "keywords: " + text::join(extract_keywords(request).keywords, "; "),
          "whole-text strengths: " +
              format_degrees(classes, degrees.values()),
          "strengths scaled to probabilities"};
      return ProbabilityVector{std::move(p), std::move(steps)};
    }

    case ElicitationKind::kDpLabel: {
      MembershipVector degrees =
          whole_text_degrees(request.text, classes, lexicon_);
      if (degrees.max() <= 0.0) {
        if (classes.includes_other()) return ClassLabel{std::string(kOtherClass)};
        throw Error(ErrorCode::kMalformedResponse,
                    "no class matches '" + request.text + "'");
      }
      auto best = std::max_element(degrees.begin(), degrees.end());
      return ClassLabel{
          classes.name(static_cast<std::size_t>(best - degrees.begin()))};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown elicitation kind");
}

KeywordList LexiconBackend::extract_keywords(
    const ElicitationRequest& request) const {
  const auto tokens = text::tokenize(request.text);
  std::vector<std::string> words;
  for (const auto& t : tokens) words.push_back(t.text);

  std::vector<Candidate> candidates;
  for (const auto& hit : lexicon_hits(words, request.classes, lexicon_)) {
    candidates.push_back({hit.window_begin, hit.token, false});
  }
  if (request.injected) {
    for (const auto& entry : request.injected->keyword_knowledge) {
      const auto needle = text::token_strings(entry.text);
      if (needle.empty() || needle.size() > words.size()) continue;
      for (std::size_t i = 0; i + needle.size() <= words.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), words.begin() + i)) {
          candidates.push_back({i, i + needle.size() - 1, true});
        }
      }
    }
  }
  // Longest spans win overlaps; injected knowledge wins ties.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.length() != b.length()) {
                       return a.length() > b.length();
                     }
                     if (a.injected != b.injected) return a.injected;
                     return a.first < b.first;
                   });
  std::vector<Candidate> chosen;
  for (const auto& c : candidates) {
    bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const auto& k) {
      return c.first <= k.last && k.first <= c.last;
    });
    if (!clash) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  KeywordList out;
  for (const auto& c : chosen) {
    std::size_t b = tokens[c.first].begin;
    std::size_t e = tokens[c.last].end;
    out.keywords.push_back(request.text.substr(b, e - b));
  }
  return out;
}

RawWeights LexiconBackend::assign_weights(
    const ElicitationRequest& request) const {
  const ClassSet& classes = request.classes;
  const std::size_t m = request.segments.size();
  std::vector<MembershipVector> degrees = request.segment_memberships;
  if (degrees.size() != m) {
    degrees.clear();
    for (const auto& segment : request.segments) {
      degrees.push_back(whole_text_degrees(segment, classes, lexicon_));
    }
  }
  std::vector<bool> contrastive(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    auto tokens = text::token_strings(request.segments[j]);
    contrastive[j] = !tokens.empty() &&
                     (tokens.front() == "but" || tokens.front() == "however" ||
                      tokens.front() == "yet");
  }
  RawWeights raw;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<double> row;
    std::size_t with_evidence = 0;
    for (std::size_t j = 0; j < m; ++j) {
      bool evidence = degrees[j][c] > 0.0;
      with_evidence += evidence ? 1 : 0;
      row.push_back((evidence ? 1.0 : kWeightFloor) *
                    (contrastive[j] ? kContrastBoost : 1.0));
    }
    raw.per_class.push_back(std::move(row));
    raw.notes.push_back(std::to_string(with_evidence) + " of " +
                        std::to_string(m) + " sub-units carry " +
                        classes.name(c) +
                        " evidence; contrastive clauses boosted");
  }
  return raw;
}

}  // namespace frc
