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

#include "frc/backends/backend.h"

#include <cmath>

namespace frc {

std::string_view kind_name(ElicitationKind kind) {
  switch (kind) {
    case ElicitationKind::kKeywordExtraction: return "keyword_extraction";
    case ElicitationKind::kKeywordMembership: return "keyword_membership";
    case ElicitationKind::kSubunitSegmentation: return "subunit_segmentation";
    case ElicitationKind::kWeightAssignment: return "weight_assignment";
    case ElicitationKind::kCotProbabilities: return "cot_probabilities";
    case ElicitationKind::kDpLabel: return "dp_label";
  }
  return "unknown";
}

std::optional<std::vector<double>> renormalize_probabilities(
    std::vector<double> values, double max_drift) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double& v : values) {
    if (!std::isfinite(v)) return std::nullopt;
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0 || std::abs(sum - 1.0) > max_drift) return std::nullopt;
  for (double& v : values) v /= sum;
  return values;
}

}  // namespace frc
