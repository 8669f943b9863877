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

// Evaluation reports: one row per method (or transfer configuration) with
// RS by perturbation level, MS by class, and F1 over clear, ambiguous and
// all labeled records.
//
// JSON layout:
//   {"dataset_fingerprint", "config_snapshot", "threshold",
//    "methods": [{"method", "rs_by_level": {"low", "medium", "high"},
//                 "rs_by_class": {level: {class: rs}}, "ms_by_class",
//                 "ms_avg", "k_hat_low", "f1_clear", "f1_ambiguous",
//                 "f1_avg", "n_clear", "n_ambiguous", "n_labeled",
//                 "failures"}]}
// Quantities that cannot be computed are null.

#ifndef FRC_EVAL_REPORT_H_
#define FRC_EVAL_REPORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "frc/core/types.h"
#include "frc/eval/metrics.h"

namespace frc {

// Level names in report order.
inline constexpr std::string_view kLevelNames[] = {"low", "medium", "high"};

struct MethodReport {
  std::string method;
  // Class-averaged RS per level.
  std::map<std::string, double> rs_by_level;
  std::map<std::string, std::map<std::string, double>> rs_by_class;
  std::map<std::string, double> ms_by_class;
  std::optional<double> ms_avg;
  std::optional<double> k_hat_low;
  std::optional<double> f1_clear;
  std::optional<double> f1_ambiguous;
  std::optional<double> f1_avg;
  std::optional<std::size_t> n_clear;
  std::optional<std::size_t> n_ambiguous;
  std::size_t n_labeled = 0;
  std::size_t failures = 0;
};

struct EvalReport {
  std::string dataset_fingerprint;
  nlohmann::json config_snapshot = nlohmann::json::object();
  double threshold = kDefaultAmbiguityThreshold;
  std::vector<MethodReport> methods;
};

// One prediction for the F1 part of a method row.
struct ScoredRecord {
  std::optional<std::string> gold;
  std::string predicted;
  std::optional<Bucket> bucket;  // absent when the method cannot be split
};

// Fills RS (class-averaged per level), MS (per class and averaged) and F1.
// Levels or monotonic sets without pairs are left out; F1 and bucket
// counts are null when nothing is labeled or buckets are unknown.
MethodReport summarize_method(
    std::string method, const ClassSet& classes,
    const std::map<std::string, std::vector<EvalPair>>& robust_pairs,
    const std::vector<EvalPair>& monotonic_pairs,
    const std::vector<ScoredRecord>& records);

nlohmann::json to_json(const MethodReport& row);
nlohmann::json to_json(const EvalReport& report);

// Fixed-width comparison table, one line per method.
std::string render_table(const EvalReport& report);

// 64-bit FNV-1a of the bytes, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace frc

#endif  // FRC_EVAL_REPORT_H_
