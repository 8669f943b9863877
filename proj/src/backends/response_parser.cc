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

#include "frc/backends/response_parser.h"

#include <cmath>
#include <string>

#include "frc/text/text.h"

namespace frc {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedResponse, why);
}

[[noreturn]] void violation(const std::string& why) {
  throw Error(ErrorCode::kSchemaViolation, why);
}

// Matching close brace for the '{' at `open`, skipping string literals.
std::optional<std::size_t> match_brace(std::string_view s, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    char c = s[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::nullopt;
}

const json& require(const json& obj, const char* field) {
  if (!obj.is_object() || !obj.contains(field)) {
    malformed(std::string("missing field '") + field + "'");
  }
  return obj.at(field);
}

// Numbers sometimes come back quoted.
double as_number(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = v.get<std::string>();
      double d = std::stod(s, &used);
      if (used == text::trim(s).size()) return d;
    } catch (const std::exception&) {
    }
  }
  malformed(what + " is not a number");
}

std::vector<std::string> string_list(const json& v, const char* field) {
  if (!v.is_array()) malformed(std::string("'") + field + "' is not a list");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      malformed(std::string("'") + field + "' holds a non-string");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> per_class_numbers(const json& obj,
                                      const ClassSet& classes,
                                      const char* field) {
  if (!obj.is_object()) {
    malformed(std::string("'") + field + "' is not an object");
  }
  std::vector<double> out;
  for (const auto& name : classes.names()) {
    if (!obj.contains(name)) {
      malformed(std::string("'") + field + "' lacks class " + name);
    }
    double v = as_number(obj.at(name), name);
    if (std::isnan(v)) violation(name + " degree is NaN");
    out.push_back(v);
  }
  return out;
}

ElicitationResponse parse_object(const ElicitationRequest& request,
                                 const json& obj) {
  const ClassSet& classes = request.classes;
  switch (request.kind) {
    case ElicitationKind::kKeywordExtraction:
      return KeywordList{string_list(require(obj, "keywords"), "keywords")};

    case ElicitationKind::kKeywordMembership:
      return MembershipVector::Clamped(
          per_class_numbers(require(obj, "memberships"), classes,
                            "memberships"));

    case ElicitationKind::kSubunitSegmentation: {
      auto spans = string_list(require(obj, "subunits"), "subunits");
      if (spans.empty()) malformed("no sub-units");
      return SpanList{std::move(spans)};
    }

    case ElicitationKind::kWeightAssignment: {
      const json& weights = require(obj, "weights");
      if (!weights.is_object()) malformed("'weights' is not an object");
      RawWeights raw;
      for (const auto& name : classes.names()) {
        if (!weights.contains(name)) malformed("'weights' lacks class " + name);
        const json& row = weights.at(name);
        if (!row.is_array()) malformed("weights of " + name + " not a list");
        if (row.size() != request.segments.size()) {
          violation("class " + name + " has " + std::to_string(row.size()) +
                    " weights for " + std::to_string(request.segments.size()) +
                    " sub-units");
        }
        std::vector<double> values;
        for (const auto& w : row) {
          double d = as_number(w, "weight");
          if (!std::isfinite(d) || d < 0.0) {
            violation("weight for " + name + " is negative or not finite");
          }
          values.push_back(d);
        }
        raw.per_class.push_back(std::move(values));
        std::string note;
        if (obj.contains("rationale") && obj.at("rationale").is_object() &&
            obj.at("rationale").contains(name) &&
            obj.at("rationale").at(name).is_string()) {
          note = obj.at("rationale").at(name).get<std::string>();
        }
        raw.notes.push_back(std::move(note));
      }
      return raw;
    }

    case ElicitationKind::kCotProbabilities: {
      auto values = per_class_numbers(require(obj, "probabilities"), classes,
                                      "probabilities");
      auto normalized = renormalize_probabilities(values);
      if (!normalized) malformed("probabilities do not sum to one");
      std::vector<std::string> steps;
      if (obj.contains("steps")) steps = string_list(obj.at("steps"), "steps");
      return ProbabilityVector{std::move(*normalized), std::move(steps)};
    }

    case ElicitationKind::kDpLabel: {
      const json& label = require(obj, "label");
      if (!label.is_string()) malformed("'label' is not a string");
      std::string name = text::normalize_key(label.get<std::string>());
      if (!classes.contains(name)) malformed("label '" + name + "' unknown");
      return ClassLabel{std::move(name)};
    }
  }
  malformed("unknown request kind");
}

}  // namespace

std::optional<json> extract_first_object(std::string_view text) {
  for (std::size_t i = text.find('{'); i != std::string_view::npos;
       i = text.find('{', i + 1)) {
    auto close = match_brace(text, i);
    if (!close) continue;
    json parsed = json::parse(text.substr(i, *close - i + 1), nullptr,
                              /*allow_exceptions=*/false);
    if (!parsed.is_discarded() && parsed.is_object()) return parsed;
  }
  return std::nullopt;
}

ElicitationResponse parse_response(const ElicitationRequest& request,
                                   std::string_view content) {
  auto obj = extract_first_object(content);
  if (!obj) malformed("no JSON object in reply");
  return parse_object(request, *obj);
}

}  // namespace frc
