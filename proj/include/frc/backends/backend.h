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

#ifndef FRC_BACKENDS_BACKEND_H_
#define FRC_BACKENDS_BACKEND_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "frc/backends/knowledge_bundle.h"
#include "frc/core/error.h"
#include "frc/core/types.h"

namespace frc {

enum class ElicitationKind {
  kKeywordExtraction,
  kKeywordMembership,
  kSubunitSegmentation,
  kWeightAssignment,
  kCotProbabilities,
  kDpLabel,
};

std::string_view kind_name(ElicitationKind kind);

struct ElicitationRequest {
  ElicitationKind kind;
  // The input text; for kKeywordMembership, the keyword itself.
  std::string text;
  ClassSet classes;
  std::shared_ptr<const KnowledgeBundle> injected;
  // Full input text when `text` is a keyword.
  std::string context;
  // kWeightAssignment: the sub-units and their aggregated memberships.
  std::vector<std::string> segments;
  std::vector<MembershipVector> segment_memberships;
};

struct KeywordList {
  std::vector<std::string> keywords;
};
struct SpanList {
  std::vector<std::string> spans;
};
// per_class[c][j]: raw importance of sub-unit j for class c.
struct RawWeights {
  std::vector<std::vector<double>> per_class;
  std::vector<std::string> notes;  // one rationale per class row
};
struct ProbabilityVector {
  std::vector<double> values;
  std::vector<std::string> step_notes;
};
struct ClassLabel {
  std::string name;
};

using ElicitationResponse = std::variant<KeywordList, MembershipVector,
                                         SpanList, RawWeights,
                                         ProbabilityVector, ClassLabel>;

// A source of membership degrees. Implementations must be safe to call from
// several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string id() const = 0;
  // True when identical requests always yield identical responses.
  virtual bool deterministic() const = 0;
  virtual ElicitationResponse elicit(const ElicitationRequest& request) = 0;
};

template <typename T>
T elicit_as(Backend& backend, const ElicitationRequest& request) {
  ElicitationResponse response = backend.elicit(request);
  if (auto* value = std::get_if<T>(&response)) return std::move(*value);
  throw Error(ErrorCode::kMalformedResponse,
              "backend answered " + std::string(kind_name(request.kind)) +
                  " with the wrong response type");
}

// Scales probabilities onto the simplex when their sum lies within
// `max_drift` of one. Negative entries clamp to zero first. Returns nullopt
// when the vector cannot be renormalized.
std::optional<std::vector<double>> renormalize_probabilities(
    std::vector<double> values, double max_drift = 0.05);

}  // namespace frc

#endif  // FRC_BACKENDS_BACKEND_H_
