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

#ifndef FRC_PIPELINE_PIPELINE_H_
#define FRC_PIPELINE_PIPELINE_H_

#include <memory>
#include <string>
#include <string_view>

#include "frc/backends/backend.h"
#include "frc/pipeline/trace.h"

namespace frc {

enum class ClockKind {
  kWall,     // ISO-8601 UTC wall-clock stamps
  kLogical,  // stage ordinals; keeps deterministic runs byte-identical
};

struct RunOptions {
  ClockKind clock = ClockKind::kWall;
};

// Maximum |sum - 1| that run_cot repairs by renormalizing.
inline constexpr double kSimplexDrift = 0.05;

// Full fuzzy reasoning chain over one text:
//   1. keyword extraction
//   2. per-keyword membership (reusing injected keyword degrees)
//   3. sub-unit segmentation, keywords assigned by span containment, with a
//      trailing catch-all sub-unit for keywords outside every span
//   4. local max-aggregation (or injected sub-unit degrees)
//   5. weight elicitation, normalized per class
//   6. global fusion
// An empty bundle behaves exactly like no bundle.
// Throws DegenerateInput for text without tokens; backend errors propagate.
FrcTrace run_frc(std::string_view text, const ClassSet& classes,
                 Backend& backend,
                 std::shared_ptr<const KnowledgeBundle> injected = nullptr,
                 const RunOptions& options = {});

// Chain-of-thought baseline: one elicitation producing simplex
// probabilities. Throws SimplexViolation when the reported probabilities
// drift more than kSimplexDrift from summing to one.
CotTrace run_cot(std::string_view text, const ClassSet& classes,
                 Backend& backend, const RunOptions& options = {});

// Direct prompting baseline: a single label from the class set.
// Throws MalformedResponse when the label is not a class.
DpResult run_dp(std::string_view text, const ClassSet& classes,
                Backend& backend, const RunOptions& options = {});

}  // namespace frc

#endif  // FRC_PIPELINE_PIPELINE_H_
