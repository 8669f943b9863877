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

#ifndef FRC_EVAL_METRICS_H_
#define FRC_EVAL_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frc/core/types.h"

namespace frc {

// Scores of one text before and after a perturbation. Holds memberships
// for FRC and probabilities for CoT, in ClassSet order.
struct EvalPair {
  std::vector<double> original;
  std::vector<double> perturbed;
  std::optional<std::vector<int>> shift_labels;  // per class, -1/0/+1
};

// Changes smaller than this count as no change.
inline constexpr double kSignDeadBand = 1e-9;
inline constexpr double kDefaultAmbiguityThreshold = 0.3;
inline constexpr std::string_view kNeutralLabel = "neutral";

int dead_band_sign(double delta);

// 1 - mean |original - perturbed| for one class, summed with Neumaier
// compensation so the result does not depend on rounding order.
// Throws EmptyPairSet and DimensionMismatch.
double robustness_score(std::span<const EvalPair> pairs,
                        std::size_t class_index);

// Fraction of pairs whose change in the class has the sign of its shift
// label. Throws EmptyPairSet, MissingShiftLabels and DimensionMismatch.
double monotonicity_score(std::span<const EvalPair> pairs,
                          std::size_t class_index);

enum class Bucket { kClear, kAmbiguous };

std::string_view bucket_name(Bucket bucket);

struct Split {
  std::string label;  // a class name or kNeutralLabel
  Bucket bucket;
};

// Labels by the larger of the two polar degrees (neutral on a tie within
// kTolerance) and buckets as clear when their difference exceeds
// `threshold` by more than kTolerance, so a difference equal to the
// threshold stays ambiguous under rounding. The catch-all class is ignored.
// Throws WrongClassCount unless exactly two polar classes are present.
Split classify_and_split(std::span<const double> scores,
                         const ClassSet& classes,
                         double threshold = kDefaultAmbiguityThreshold);

// Macro-averaged F1 over the classes present in `gold`. A prediction that
// matches no gold class (e.g. neutral) is a false negative for the gold
// class. Throws LengthMismatch, and InvalidArgument when empty.
double f1_score(std::span<const std::string> predictions,
                std::span<const std::string> gold);

}  // namespace frc

#endif  // FRC_EVAL_METRICS_H_
