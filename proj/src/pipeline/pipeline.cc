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

#include "frc/pipeline/pipeline.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "frc/core/fuzzy.h"
#include "frc/text/text.h"

namespace frc {
namespace {

class StageClock {
 public:
  explicit StageClock(ClockKind kind) : kind_(kind) {}

  void stamp(std::string stage) {
    times_.push_back({std::move(stage), now()});
  }
  std::vector<StageTime> take() { return std::move(times_); }

 private:
  std::string now() {
    if (kind_ == ClockKind::kLogical) return std::to_string(times_.size());
    auto tp = std::chrono::system_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  tp.time_since_epoch()) %
              1000;
    std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm utc{};
    gmtime_r(&t, &utc);
    std::ostringstream out;
    out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%S") << '.'
        << std::setfill('0') << std::setw(3) << ms.count() << 'Z';
    return out.str();
  }

  ClockKind kind_;
  std::vector<StageTime> times_;
};

void require_tokens(std::string_view text) {
  if (text::trim(text).empty() || text::tokenize(text).empty()) {
    throw Error(ErrorCode::kDegenerateInput, "input has no tokens");
  }
}

// Places each keyword at its first occurrence not already claimed by an
// earlier keyword. Keywords absent from the text are dropped.
std::vector<std::pair<std::string, text::Span>> locate_keywords(
    std::string_view input, const std::vector<std::string>& keywords) {
  std::vector<std::pair<std::string, text::Span>> placed;
  for (const auto& raw : keywords) {
    std::string surface(text::trim(raw));
    if (surface.empty()) continue;
    std::size_t from = 0;
    while (auto pos = text::find_ci(input, surface, from)) {
      text::Span span{*pos, *pos + surface.size()};
      bool taken = std::any_of(placed.begin(), placed.end(), [&](auto& p) {
        return p.second.overlaps(span);
      });
      if (!taken) {
        placed.emplace_back(std::string(input.substr(span.begin, span.size())),
                            span);
        break;
      }
      from = *pos + 1;
    }
  }
  std::sort(placed.begin(), placed.end(), [](const auto& a, const auto& b) {
    return a.second.begin < b.second.begin;
  });
  return placed;
}

// Sub-units must appear in order and without overlap.
std::vector<text::Span> locate_subunits(std::string_view input,
                                        const std::vector<std::string>& spans) {
  std::vector<text::Span> out;
  std::size_t cursor = 0;
  for (const auto& raw : spans) {
    std::string_view s = text::trim(raw);
    if (s.empty()) continue;
    auto pos = text::find_ci(input, s, cursor);
    if (!pos) {
      throw Error(ErrorCode::kSchemaViolation,
                  "sub-unit '" + std::string(s) +
                      "' is not an in-order portion of the text");
    }
    out.push_back({*pos, *pos + s.size()});
    cursor = *pos + s.size();
  }
  if (out.empty()) {
    throw Error(ErrorCode::kSchemaViolation, "segmentation returned nothing");
  }
  return out;
}

}  // namespace

FrcTrace run_frc(std::string_view text, const ClassSet& classes,
                 Backend& backend,
                 std::shared_ptr<const KnowledgeBundle> injected,
                 const RunOptions& options) {
  require_tokens(text);
  if (injected && injected->empty()) injected = nullptr;
  StageClock clock(options.clock);
  const std::string input(text);
  clock.stamp("start");

  // 1. keyword extraction
  ElicitationRequest extraction{ElicitationKind::kKeywordExtraction, input,
                                classes, injected};
  auto surfaces = elicit_as<KeywordList>(backend, extraction).keywords;
  auto located = locate_keywords(input, surfaces);
  clock.stamp("keyword_extraction");

  // 2. keyword memberships
  std::vector<TracedKeyword> keywords;
  for (const auto& [surface, span] : located) {
    const KnowledgeEntry* known =
        injected ? injected->find_keyword(surface) : nullptr;
    if (known != nullptr && known->memberships.size() == classes.size()) {
      keywords.push_back({Keyword{surface, known->memberships}, 0,
                          DegreeSource::kInjected});
      continue;
    }
    ElicitationRequest request{ElicitationKind::kKeywordMembership, surface,
                               classes, injected, input};
    auto degrees = elicit_as<MembershipVector>(backend, request);
    if (degrees.size() != classes.size()) {
      throw Error(ErrorCode::kSchemaViolation,
                  "membership vector of wrong dimension");
    }
    keywords.push_back(
        {Keyword{surface, std::move(degrees)}, 0, DegreeSource::kElicited});
  }
  clock.stamp("keyword_membership");

  // 3. segmentation and keyword assignment
  ElicitationRequest segmentation{ElicitationKind::kSubunitSegmentation, input,
                                  classes};
  auto spans = locate_subunits(
      input, elicit_as<SpanList>(backend, segmentation).spans);
  std::vector<std::vector<std::size_t>> members(spans.size());
  std::vector<std::size_t> unassigned;
  for (std::size_t k = 0; k < keywords.size(); ++k) {
    const text::Span& ks = located[k].second;
    bool placed = false;
    for (std::size_t s = 0; s < spans.size() && !placed; ++s) {
      if (spans[s].contains(ks)) {
        keywords[k].subunit = s;
        members[s].push_back(k);
        placed = true;
      }
    }
    if (!placed) unassigned.push_back(k);
  }
  clock.stamp("subunit_segmentation");

  // 4. local aggregation
  std::vector<TracedSubUnit> subunits;
  auto build = [&](std::string span_text,
                   const std::vector<std::size_t>& indices, bool catch_all) {
    std::vector<Keyword> kws;
    for (std::size_t k : indices) kws.push_back(keywords[k].keyword);
    const KnowledgeEntry* known =
        injected ? injected->find_subunit(span_text) : nullptr;
    if (known != nullptr && known->memberships.size() == classes.size()) {
      subunits.push_back({SubUnit{std::move(span_text), std::move(kws),
                                  known->memberships},
                          DegreeSource::kInjected, catch_all});
    } else {
      subunits.push_back(
          {make_subunit(std::move(span_text), std::move(kws), classes),
           DegreeSource::kElicited, catch_all});
    }
  };
  for (std::size_t s = 0; s < spans.size(); ++s) {
    build(input.substr(spans[s].begin, spans[s].size()), members[s], false);
  }
  if (!unassigned.empty()) {
    std::vector<std::string> parts;
    for (std::size_t k : unassigned) {
      keywords[k].subunit = subunits.size();
      parts.push_back(keywords[k].keyword.surface);
    }
    build(text::join(parts, " "), unassigned, true);
  }
  clock.stamp("local_aggregation");

  // 5. weights
  ElicitationRequest weighting{ElicitationKind::kWeightAssignment, input,
                               classes};
  for (const auto& s : subunits) {
    weighting.segments.push_back(s.subunit.text);
    weighting.segment_memberships.push_back(s.subunit.memberships);
  }
  RawWeights raw = elicit_as<RawWeights>(backend, weighting);
  WeightMatrix weights = normalize_weights(raw.per_class, classes);
  clock.stamp("weight_assignment");

  // 6. fusion
  std::vector<SubUnit> plain;
  for (const auto& s : subunits) plain.push_back(s.subunit);
  MembershipVector fused = fuse_global(plain, weights);
  clock.stamp("global_fusion");

  std::vector<std::string> notes = raw.notes;
  notes.resize(classes.size());
  return FrcTrace{"",          input,
                  classes,     std::move(keywords),
                  std::move(subunits), std::move(weights),
                  std::move(notes),    std::move(fused),
                  backend.id(),        clock.take()};
}

CotTrace run_cot(std::string_view text, const ClassSet& classes,
                 Backend& backend, const RunOptions& options) {
  require_tokens(text);
  StageClock clock(options.clock);
  clock.stamp("start");
  ElicitationRequest request{ElicitationKind::kCotProbabilities,
                             std::string(text), classes};
  auto reply = elicit_as<ProbabilityVector>(backend, request);
  if (reply.values.size() != classes.size()) {
    throw Error(ErrorCode::kSchemaViolation,
                "probability vector of wrong dimension");
  }
  auto normalized = renormalize_probabilities(reply.values, kSimplexDrift);
  if (!normalized) {
    throw Error(ErrorCode::kSimplexViolation,
                "probabilities cannot be renormalized");
  }
  clock.stamp("cot_probabilities");
  return CotTrace{"",           std::string(text),
                  classes,      std::move(reply.step_notes),
                  std::move(*normalized), backend.id(),
                  clock.take()};
}

DpResult run_dp(std::string_view text, const ClassSet& classes,
                Backend& backend, const RunOptions& options) {
  require_tokens(text);
  StageClock clock(options.clock);
  clock.stamp("start");
  ElicitationRequest request{ElicitationKind::kDpLabel, std::string(text),
                             classes};
  std::string label =
      text::normalize_key(elicit_as<ClassLabel>(backend, request).name);
  if (!classes.contains(label)) {
    throw Error(ErrorCode::kMalformedResponse,
                "label '" + label + "' is not a class");
  }
  clock.stamp("dp_label");
  return DpResult{"", std::string(text), classes, std::move(label),
                  backend.id(), clock.take()};
}

}  // namespace frc
