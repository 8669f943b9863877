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

#ifndef FRC_EVAL_STABILITY_H_
#define FRC_EVAL_STABILITY_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frc/eval/metrics.h"

namespace frc {

enum class DistanceKind {
  kTokenEdit,  // token Levenshtein / longer token count (default)
  kCharEdit,   // byte Levenshtein / longer byte length
};

std::string_view distance_kind_name(DistanceKind kind);
// Throws InvalidArgument for an unknown name.
DistanceKind parse_distance_kind(std::string_view name);

// d(original, perturbed) in [0,1].
double text_distance(std::string_view a, std::string_view b,
                     DistanceKind kind = DistanceKind::kTokenEdit);

struct TextPair {
  std::string original_text;
  std::string perturbed_text;
  EvalPair scores;
};

// Empirical Lipschitz constant: the largest |delta mu| / d over pairs with
// d > 0, where |delta mu| is the largest change over classes.
struct StabilityEstimate {
  double k_hat = 0.0;
  std::vector<double> per_pair_ratios;  // pairs with d > 0, input order
  std::size_t skipped = 0;              // pairs at distance 0
  std::string distance_kind;
};

// Throws EmptyPairSet, LengthMismatch, and ZeroDistancePairOnly when every
// pair has d = 0.
StabilityEstimate estimate_stability(std::span<const EvalPair> pairs,
                                     std::span<const double> distances,
                                     std::string distance_kind);
StabilityEstimate estimate_stability(
    std::span<const TextPair> pairs,
    DistanceKind kind = DistanceKind::kTokenEdit);

}  // namespace frc

#endif  // FRC_EVAL_STABILITY_H_
