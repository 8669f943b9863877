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

#include "frc/eval/stability.h"

#include <algorithm>
#include <cmath>

#include "frc/core/error.h"
#include "frc/text/text.h"

namespace frc {
namespace {

double char_distance(std::string_view a, std::string_view b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return static_cast<double>(row[b.size()]) / static_cast<double>(longest);
}

}  // namespace

std::string_view distance_kind_name(DistanceKind kind) {
  return kind == DistanceKind::kTokenEdit ? "token_edit" : "char_edit";
}

DistanceKind parse_distance_kind(std::string_view name) {
  if (name == "token_edit") return DistanceKind::kTokenEdit;
  if (name == "char_edit") return DistanceKind::kCharEdit;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown distance kind '" + std::string(name) + "'");
}

double text_distance(std::string_view a, std::string_view b,
                     DistanceKind kind) {
  if (kind == DistanceKind::kTokenEdit) {
    return text::normalized_token_distance(a, b);
  }
  return char_distance(a, b);
}

StabilityEstimate estimate_stability(std::span<const EvalPair> pairs,
                                     std::span<const double> distances,
                                     std::string distance_kind) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyPairSet, "no pairs");
  if (pairs.size() != distances.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "one distance per pair is required");
  }
  StabilityEstimate estimate;
  estimate.distance_kind = std::move(distance_kind);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.original.size() != p.perturbed.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "pair vectors differ in size");
    }
    if (!(distances[i] > 0.0)) {
      ++estimate.skipped;
      continue;
    }
    double delta = 0.0;
    for (std::size_t c = 0; c < p.original.size(); ++c) {
      delta = std::max(delta, std::abs(p.original[c] - p.perturbed[c]));
    }
    double ratio = delta / distances[i];
    estimate.per_pair_ratios.push_back(ratio);
    estimate.k_hat = std::max(estimate.k_hat, ratio);
  }
  if (estimate.per_pair_ratios.empty()) {
    throw Error(ErrorCode::kZeroDistancePairOnly,
                "every pair is at distance 0");
  }
  return estimate;
}

StabilityEstimate estimate_stability(std::span<const TextPair> pairs,
                                     DistanceKind kind) {
  std::vector<EvalPair> scores;
  std::vector<double> distances;
  for (const auto& p : pairs) {
    scores.push_back(p.scores);
    distances.push_back(text_distance(p.original_text, p.perturbed_text, kind));
  }
  return estimate_stability(scores, distances,
                            std::string(distance_kind_name(kind)));
}

}  // namespace frc
