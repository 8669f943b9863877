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

// Reasoning traces and their JSONL representation.
//
// FRC trace line:
//   {"method": "frc", "id", "input_text", "classes": [...],
//    "keywords": [{"surface", "memberships": {class: degree}, "subunit": j,
//                  "source": "elicited"|"injected"}],
//    "subunits": [{"text", "keyword_indices": [...], "memberships",
//                  "source": "aggregated"|"injected"|"empty",
//                  "catch_all": bool}],
//    "weights": {class: [alpha_j...]}, "adjustment_notes": {class: text},
//    "fused": {class: degree}, "backend_id",
//    "timestamps": [{"stage", "at"}]}
// CoT trace line:
//   {"method": "cot", "id", "input_text", "classes", "step_notes": [...],
//    "probabilities": {class: p}, "backend_id", "timestamps"}
// DP result line:
//   {"method": "dp", "id", "input_text", "classes", "label", "backend_id",
//    "timestamps"}

#ifndef FRC_PIPELINE_TRACE_H_
#define FRC_PIPELINE_TRACE_H_

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frc/core/types.h"

namespace frc {

enum class DegreeSource { kElicited, kInjected };

struct TracedKeyword {
  Keyword keyword;
  std::size_t subunit = 0;
  DegreeSource source = DegreeSource::kElicited;
};

struct TracedSubUnit {
  SubUnit subunit;  // keywords copied from the trace's keyword list
  DegreeSource source = DegreeSource::kElicited;
  // Holds keywords that fell outside every segmented sub-unit.
  bool catch_all = false;
};

struct StageTime {
  std::string stage;
  std::string at;
  friend bool operator==(const StageTime&, const StageTime&) = default;
};

struct FrcTrace {
  std::string id;
  std::string input_text;
  ClassSet classes;
  std::vector<TracedKeyword> keywords;
  std::vector<TracedSubUnit> subunits;
  WeightMatrix weights;
  std::vector<std::string> adjustment_notes;  // one per class row
  MembershipVector fused;
  std::string backend_id;
  std::vector<StageTime> timestamps;

  std::vector<SubUnit> plain_subunits() const;
};

// Probabilities live on the class simplex, unlike FRC memberships.
struct CotTrace {
  std::string id;
  std::string input_text;
  ClassSet classes;
  std::vector<std::string> step_notes;
  std::vector<double> probabilities;
  std::string backend_id;
  std::vector<StageTime> timestamps;
};

struct DpResult {
  std::string id;
  std::string input_text;
  ClassSet classes;
  std::string label;
  std::string backend_id;
  std::vector<StageTime> timestamps;
};

nlohmann::json to_json(const FrcTrace& trace);
nlohmann::json to_json(const CotTrace& trace);
nlohmann::json to_json(const DpResult& result);

// Throw InvalidArgument on a line that does not follow the schema.
FrcTrace frc_trace_from_json(const nlohmann::json& j);
CotTrace cot_trace_from_json(const nlohmann::json& j);
DpResult dp_result_from_json(const nlohmann::json& j);

nlohmann::json memberships_to_json(const ClassSet& classes,
                                   std::span<const double> values);
std::vector<double> memberships_from_json(const ClassSet& classes,
                                          const nlohmann::json& j);
nlohmann::json classes_to_json(const ClassSet& classes);
ClassSet classes_from_json(const nlohmann::json& j);

// Recomputes local aggregation and fusion from the stored fields. Returns an
// empty string when the trace is self-consistent, else the first problem.
std::string check_trace(const FrcTrace& trace);

}  // namespace frc

#endif  // FRC_PIPELINE_TRACE_H_
