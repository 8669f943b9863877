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

// Fuzzy aggregation: keyword degrees are max-aggregated into sub-units, and
// sub-units are fused per class with convex weights. Everything here is a
// pure function of its arguments.

#ifndef FRC_CORE_FUZZY_H_
#define FRC_CORE_FUZZY_H_

#include <span>
#include <string>
#include <vector>

#include "frc/core/types.h"

namespace frc {

// Per-class maximum over the keyword degrees.
// Throws EmptyKeywordSet for an empty span and DimensionMismatch when a
// keyword vector does not match `classes`.
MembershipVector aggregate_local(std::span<const Keyword> keywords,
                                 const ClassSet& classes);

// Scales each class's raw weights to sum to one. `raw[c][j]` is the raw
// importance of sub-unit j for class c.
// Throws AllZeroWeights when a class has no positive weight,
// InvalidArgument for negative or non-finite weights and DimensionMismatch
// when the row count differs from `classes`.
WeightMatrix normalize_weights(const std::vector<std::vector<double>>& raw,
                               const ClassSet& classes);

// mu_C(X) = sum_j weight(C, j) * mu_C(X_j), clamped into [0,1].
// Throws DimensionMismatch when the weight matrix does not match.
MembershipVector fuse_global(std::span<const SubUnit> subunits,
                             const WeightMatrix& weights);

// Builds a sub-unit whose memberships come from its keywords. A sub-unit
// without keywords gets an all-zero vector.
SubUnit make_subunit(std::string text, std::vector<Keyword> keywords,
                     const ClassSet& classes);

}  // namespace frc

#endif  // FRC_CORE_FUZZY_H_
