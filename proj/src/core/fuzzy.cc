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

#include "frc/core/fuzzy.h"

#include <algorithm>
#include <cmath>

#include "frc/core/error.h"

namespace frc {

MembershipVector aggregate_local(std::span<const Keyword> keywords,
                                 const ClassSet& classes) {
  if (keywords.empty()) {
    throw Error(ErrorCode::kEmptyKeywordSet,
                "local aggregation needs at least one keyword");
  }
  std::vector<double> out(classes.size(), 0.0);
  for (const auto& keyword : keywords) {
    if (keyword.memberships.size() != classes.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "keyword '" + keyword.surface + "' has " +
                      std::to_string(keyword.memberships.size()) +
                      " degrees, expected " + std::to_string(classes.size()));
    }
    for (std::size_t c = 0; c < out.size(); ++c) {
      out[c] = std::max(out[c], keyword.memberships[c]);
    }
  }
  return MembershipVector(std::move(out));
}

WeightMatrix normalize_weights(const std::vector<std::vector<double>>& raw,
                               const ClassSet& classes) {
  if (raw.size() != classes.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "raw weights for " + std::to_string(raw.size()) +
                    " classes, expected " + std::to_string(classes.size()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    double sum = 0.0;
    for (double w : raw[c]) {
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "raw weight for class " + classes.name(c) +
                        " is negative or not finite");
      }
      sum += w;
    }
    if (sum <= 0.0) {
      throw Error(ErrorCode::kAllZeroWeights, classes.name(c));
    }
    std::vector<double> row;
    row.reserve(raw[c].size());
    for (double w : raw[c]) row.push_back(w / sum);
    rows.push_back(std::move(row));
  }
  return WeightMatrix(std::move(rows));
}

MembershipVector fuse_global(std::span<const SubUnit> subunits,
                             const WeightMatrix& weights) {
  if (weights.subunit_count() != subunits.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(subunits.size()) + " sub-units but " +
                    std::to_string(weights.subunit_count()) +
                    " weight columns");
  }
  const std::size_t class_count = weights.class_count();
  for (const auto& subunit : subunits) {
    if (subunit.memberships.size() != class_count) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "sub-unit '" + subunit.text + "' has " +
                      std::to_string(subunit.memberships.size()) +
                      " degrees, expected " + std::to_string(class_count));
    }
  }
  std::vector<double> fused(class_count, 0.0);
  for (std::size_t c = 0; c < class_count; ++c) {
    double acc = 0.0;
    for (std::size_t j = 0; j < subunits.size(); ++j) {
      acc += weights.weight(c, j) * subunits[j].memberships[c];
    }
    fused[c] = acc;
  }
  // Rounding can push a convex combination of 1.0 values just past 1.
  return MembershipVector::Clamped(std::move(fused));
}

SubUnit make_subunit(std::string text, std::vector<Keyword> keywords,
                     const ClassSet& classes) {
  MembershipVector memberships =
      keywords.empty() ? MembershipVector::Zeros(classes.size())
                       : aggregate_local(keywords, classes);
  return SubUnit{std::move(text), std::move(keywords), std::move(memberships)};
}

}  // namespace frc
