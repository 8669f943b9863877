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

#include "frc/core/error.h"

namespace frc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyKeywordSet: return "EmptyKeywordSet";
    case ErrorCode::kAllZeroWeights: return "AllZeroWeights";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTransportError: return "TransportError";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kSimplexViolation: return "SimplexViolation";
    case ErrorCode::kEmptyTraceSet: return "EmptyTraceSet";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kNoSwapCandidates: return "NoSwapCandidates";
    case ErrorCode::kNoSentimentToken: return "NoSentimentToken";
    case ErrorCode::kEmptyPairSet: return "EmptyPairSet";
    case ErrorCode::kMissingShiftLabels: return "MissingShiftLabels";
    case ErrorCode::kWrongClassCount: return "WrongClassCount";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kZeroDistancePairOnly: return "ZeroDistancePairOnly";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace frc
