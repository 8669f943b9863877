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

#include "frc/eval/metrics.h"

#include <cmath>
#include <map>

#include "frc/core/error.h"

namespace frc {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_pairs(std::span<const EvalPair> pairs, std::size_t class_index) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyPairSet, "no pairs");
  for (const auto& p : pairs) {
    if (p.original.size() != p.perturbed.size() ||
        class_index >= p.original.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "pair vectors do not cover class " +
                      std::to_string(class_index));
    }
  }
}

}  // namespace

int dead_band_sign(double delta) {
  if (std::abs(delta) < kSignDeadBand) return 0;
  return delta > 0 ? 1 : -1;
}

double robustness_score(std::span<const EvalPair> pairs,
                        std::size_t class_index) {
  check_pairs(pairs, class_index);
  CompensatedSum total;
  for (const auto& p : pairs) {
    total.add(std::abs(p.original[class_index] - p.perturbed[class_index]));
  }
  return 1.0 - total.value() / static_cast<double>(pairs.size());
}

double monotonicity_score(std::span<const EvalPair> pairs,
                          std::size_t class_index) {
  check_pairs(pairs, class_index);
  std::size_t hits = 0;
  for (const auto& p : pairs) {
    if (!p.shift_labels || class_index >= p.shift_labels->size()) {
      throw Error(ErrorCode::kMissingShiftLabels,
                  "pair without a shift label for class " +
                      std::to_string(class_index));
    }
    int observed =
        dead_band_sign(p.perturbed[class_index] - p.original[class_index]);
    if (observed == (*p.shift_labels)[class_index]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

std::string_view bucket_name(Bucket bucket) {
  return bucket == Bucket::kClear ? "clear" : "ambiguous";
}

Split classify_and_split(std::span<const double> scores,
                         const ClassSet& classes, double threshold) {
  auto polar = classes.polar_indices();
  if (polar.size() != 2) {
    throw Error(ErrorCode::kWrongClassCount,
                "the clear/ambiguous rule needs exactly two polar classes, "
                "got " + std::to_string(polar.size()));
  }
  if (scores.size() != classes.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "score vector does not match the class set");
  }
  double a = scores[polar[0]];
  double b = scores[polar[1]];
  double diff = std::abs(a - b);
  Split split;
  if (diff < kTolerance) {
    split.label = std::string(kNeutralLabel);
  } else {
    split.label = classes.name(a > b ? polar[0] : polar[1]);
  }
  split.bucket =
      diff - threshold > kTolerance ? Bucket::kClear : Bucket::kAmbiguous;
  return split;
}

double f1_score(std::span<const std::string> predictions,
                std::span<const std::string> gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold labels");
  }
  if (gold.empty()) throw Error(ErrorCode::kInvalidArgument, "no records");
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> per_class;
  for (const auto& g : gold) per_class[g];
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predictions[i] == gold[i]) {
      ++per_class[gold[i]].tp;
      continue;
    }
    ++per_class[gold[i]].fn;
    if (auto it = per_class.find(predictions[i]); it != per_class.end()) {
      ++it->second.fp;
    }
  }
  double total = 0.0;
  for (const auto& [cls, c] : per_class) {
    std::size_t denominator = 2 * c.tp + c.fp + c.fn;
    if (denominator > 0) {
      total += 2.0 * static_cast<double>(c.tp) /
               static_cast<double>(denominator);
    }
  }
  return total / static_cast<double>(per_class.size());
}

}  // namespace frc
