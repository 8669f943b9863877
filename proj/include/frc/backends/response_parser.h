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

#ifndef FRC_BACKENDS_RESPONSE_PARSER_H_
#define FRC_BACKENDS_RESPONSE_PARSER_H_

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "frc/backends/backend.h"

namespace frc {

// First balanced {...} in `text` that parses as a JSON object. Models wrap
// their answer in prose or code fences; both are skipped.
std::optional<nlohmann::json> extract_first_object(std::string_view text);

// Parses a model reply into the schema for `request.kind`. Degrees are
// clamped into [0,1].
//
// Throws MalformedResponse when no object is found, a required field is
// missing or mistyped, probabilities cannot be renormalized, or a label is
// not in the class set. Throws SchemaViolation for values that parse but
// cannot be repaired: negative or non-finite weights, a wrong number of
// weights, a NaN degree.
ElicitationResponse parse_response(const ElicitationRequest& request,
                                   std::string_view content);

}  // namespace frc

#endif  // FRC_BACKENDS_RESPONSE_PARSER_H_
