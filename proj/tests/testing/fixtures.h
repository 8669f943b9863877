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

// Hand-built metric fixtures with their expected values worked out by hand.

#ifndef FRC_TESTS_TESTING_FIXTURES_H_
#define FRC_TESTS_TESTING_FIXTURES_H_

#include <string>
#include <vector>

#include "frc/core/types.h"
#include "frc/eval/metrics.h"

namespace frc::testing {

// Ten pairs; class 0 deltas 0.1, 0.2, 0, 0.05, 0.15, 0.1, 0, 0.3, 0.05,
// 0.05 sum to 1.0, so RS = 1 - 1.0 / 10. Class 1 deltas sum to 0.5.
inline std::vector<EvalPair> rs_fixture() {
  return {
      {{0.9, 0.1}, {0.8, 0.1}, std::nullopt},
      {{0.5, 0.5}, {0.7, 0.4}, std::nullopt},
      {{0.3, 0.2}, {0.3, 0.2}, std::nullopt},
      {{0.6, 0.0}, {0.55, 0.05}, std::nullopt},
      {{0.2, 0.8}, {0.35, 0.8}, std::nullopt},
      {{1.0, 0.0}, {0.9, 0.0}, std::nullopt},
      {{0.0, 1.0}, {0.0, 0.9}, std::nullopt},
      {{0.4, 0.6}, {0.1, 0.6}, std::nullopt},
      {{0.75, 0.25}, {0.7, 0.0}, std::nullopt},
      {{0.45, 0.55}, {0.5, 0.55}, std::nullopt},
  };
}
inline constexpr double kRsFixtureClass0 = 0.9;
inline constexpr double kRsFixtureClass1 = 0.95;

// Twelve labeled pairs; class 0 has 9 sign matches (pairs 3, 7 and 10
// miss), class 1 has 12.
inline std::vector<EvalPair> ms_fixture() {
  auto p = [](double a0, double b0, int y0, double a1, double b1, int y1) {
    return EvalPair{{a0, a1}, {b0, b1}, std::vector<int>{y0, y1}};
  };
  return {
      p(0.6, 0.9, 1, 0.0, 0.0, 0),     // 1  hit, hit
      p(0.6, 0.3, -1, 0.2, 0.2, 0),    // 2  hit, hit
      p(0.6, 0.6, 1, 0.1, 0.1, 0),     // 3  miss (no change), hit
      p(0.5, 0.5, 0, 0.6, 0.9, 1),     // 4  hit, hit
      p(0.4, 0.6, 1, 0.7, 0.35, -1),   // 5  hit, hit
      p(0.8, 0.4, -1, 0.0, 0.0, 0),    // 6  hit, hit
      p(0.3, 0.2, 1, 0.3, 0.3, 0),     // 7  miss (wrong sign), hit
      p(0.2, 0.2, 0, 0.5, 0.25, -1),   // 8  hit, hit
      p(0.55, 0.825, 1, 0.1, 0.1, 0),  // 9  hit, hit
      p(0.7, 0.7001, 0, 0.4, 0.6, 1),  // 10 miss (moved), hit
      p(0.45, 0.225, -1, 0.9, 0.9, 0), // 11 hit, hit
      p(0.9, 0.9, 0, 0.2, 0.1, -1),    // 12 hit, hit
  };
}
inline constexpr double kMsFixtureClass0 = 9.0 / 12.0;
inline constexpr double kMsFixtureClass1 = 1.0;

// Thirty three-class predictions, ten per gold class:
//   gold positive: 8 positive, 1 negative, 1 neutral
//   gold negative: 6 negative, 2 positive, 2 mixed
//   gold mixed:    5 mixed, 1 positive, 3 negative, 1 neutral
// positive tp 8 fp 3 fn 2, negative tp 6 fp 4 fn 4, mixed tp 5 fp 2 fn 5.
struct F1Fixture {
  std::vector<std::string> predictions;
  std::vector<std::string> gold;
};
inline F1Fixture f1_fixture() {
  F1Fixture f;
  auto add = [&](const char* gold, const char* predicted, int count) {
    for (int i = 0; i < count; ++i) {
      f.gold.emplace_back(gold);
      f.predictions.emplace_back(predicted);
    }
  };
  add("positive", "positive", 4);
  add("negative", "mixed", 1);
  add("mixed", "negative", 2);
  add("positive", "negative", 1);
  add("negative", "negative", 6);
  add("mixed", "mixed", 5);
  add("positive", "neutral", 1);
  add("negative", "positive", 2);
  add("mixed", "positive", 1);
  add("positive", "positive", 4);
  add("mixed", "negative", 1);
  add("negative", "mixed", 1);
  add("mixed", "neutral", 1);
  return f;
}
inline constexpr double kF1Fixture =
    (16.0 / 21.0 + 12.0 / 20.0 + 10.0 / 17.0) / 3.0;

// Twenty (positive, negative) score pairs over differences 0, 0.299, 0.3,
// 0.301 and 0.8, each with the expected label and bucket.
struct SplitCase {
  double positive;
  double negative;
  std::string label;
  Bucket bucket;
};
inline std::vector<SplitCase> split_fixture() {
  return {
      {0.905, 0.905, "neutral", Bucket::kAmbiguous},
      {0.425, 0.425, "neutral", Bucket::kAmbiguous},
      {0.0, 0.0, "neutral", Bucket::kAmbiguous},
      {1.0, 1.0, "neutral", Bucket::kAmbiguous},
      {0.5, 0.201, "positive", Bucket::kAmbiguous},
      {0.201, 0.5, "negative", Bucket::kAmbiguous},
      {0.999, 0.7, "positive", Bucket::kAmbiguous},
      {0.0, 0.299, "negative", Bucket::kAmbiguous},
      {0.5, 0.2, "positive", Bucket::kAmbiguous},
      {0.2, 0.5, "negative", Bucket::kAmbiguous},
      {0.3, 0.0, "positive", Bucket::kAmbiguous},
      {0.7, 1.0, "negative", Bucket::kAmbiguous},
      {0.501, 0.2, "positive", Bucket::kClear},
      {0.2, 0.501, "negative", Bucket::kClear},
      {0.301, 0.0, "positive", Bucket::kClear},
      {0.699, 1.0, "negative", Bucket::kClear},
      {0.9, 0.1, "positive", Bucket::kClear},
      {0.1, 0.9, "negative", Bucket::kClear},
      {0.8, 0.0, "positive", Bucket::kClear},
      {0.2, 1.0, "negative", Bucket::kClear},
  };
}

}  // namespace frc::testing

#endif  // FRC_TESTS_TESTING_FIXTURES_H_
