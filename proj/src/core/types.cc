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

#include "frc/core/types.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "frc/core/error.h"

namespace frc {

ClassSet::ClassSet(std::vector<std::string> names, bool includes_other)
    : names_(std::move(names)), includes_other_(includes_other) {
  if (includes_other_ &&
      std::find(names_.begin(), names_.end(), kOtherClass) == names_.end()) {
    names_.emplace_back(kOtherClass);
  }
  if (names_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a class set needs at least two classes");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty class name");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate class: " + name);
    }
  }
  if (!includes_other_ &&
      std::find(names_.begin(), names_.end(), kOtherClass) != names_.end()) {
    includes_other_ = true;
  }
}

ClassSet ClassSet::Binary() { return ClassSet({"positive", "negative"}); }

std::optional<std::size_t> ClassSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> ClassSet::polar_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] != kOtherClass) out.push_back(i);
  }
  return out;
}

MembershipVector::MembershipVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::kOutOfRange,
                  "membership degree outside [0,1]: " + std::to_string(v));
    }
  }
}

MembershipVector MembershipVector::Zeros(std::size_t size) {
  return MembershipVector(std::vector<double>(size, 0.0));
}

MembershipVector MembershipVector::Clamped(std::vector<double> values) {
  for (double& v : values) {
    if (std::isnan(v)) {
      throw Error(ErrorCode::kOutOfRange, "membership degree is NaN");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return MembershipVector(std::move(values));
}

double MembershipVector::max() const {
  if (values_.empty()) return 0.0;
  return *std::max_element(values_.begin(), values_.end());
}

WeightMatrix::WeightMatrix(std::vector<std::vector<double>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "weight matrix has no classes");
  }
  subunit_count_ = rows_.front().size();
  if (subunit_count_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "weight matrix has no sub-units");
  }
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    const auto& row = rows_[c];
    if (row.size() != subunit_count_) {
      throw Error(ErrorCode::kInvalidArgument, "ragged weight matrix");
    }
    double sum = 0.0;
    for (double w : row) {
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "weights must be finite and nonnegative");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kTolerance) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weights of class " + std::to_string(c) +
                      " sum to " + std::to_string(sum));
    }
  }
}

}  // namespace frc
