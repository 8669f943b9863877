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

#ifndef FRC_CORE_ERROR_H_
#define FRC_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace frc {

// Every failure raised by the library carries one of these codes so callers
// can branch on the kind of failure without parsing messages.
enum class ErrorCode {
  kInvalidArgument,
  kOutOfRange,
  // fuzzy aggregation
  kEmptyKeywordSet,
  kAllZeroWeights,
  kDimensionMismatch,
  // backends
  kTransportError,
  kMalformedResponse,
  kSchemaViolation,
  // pipeline
  kDegenerateInput,
  kSimplexViolation,
  kEmptyTraceSet,
  // perturbation
  kGenerationFailed,
  kNoSwapCandidates,
  kNoSentimentToken,
  // evaluation
  kEmptyPairSet,
  kMissingShiftLabels,
  kWrongClassCount,
  kLengthMismatch,
  kZeroDistancePairOnly,
  // configuration and files
  kConfigError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frc

#endif  // FRC_CORE_ERROR_H_
