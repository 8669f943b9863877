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

#include "frc/eval/report.h"

#include <cstdio>

#include "frc/core/hash.h"

namespace frc {
namespace {

using nlohmann::json;

template <typename T>
json or_null(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

std::string cell(const std::optional<double>& value) {
  if (!value) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *value);
  return buf;
}

std::string cell(const std::optional<std::size_t>& value) {
  return value ? std::to_string(*value) : "-";
}

std::optional<double> find(const std::map<std::string, double>& m,
                           std::string_view key) {
  auto it = m.find(std::string(key));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<double> f1_where(const std::vector<ScoredRecord>& records,
                               std::optional<Bucket> bucket) {
  std::vector<std::string> predicted;
  std::vector<std::string> gold;
  for (const auto& r : records) {
    if (!r.gold) continue;
    if (bucket && r.bucket != bucket) continue;
    predicted.push_back(r.predicted);
    gold.push_back(*r.gold);
  }
  if (gold.empty()) return std::nullopt;
  return f1_score(predicted, gold);
}

}  // namespace

MethodReport summarize_method(
    std::string method, const ClassSet& classes,
    const std::map<std::string, std::vector<EvalPair>>& robust_pairs,
    const std::vector<EvalPair>& monotonic_pairs,
    const std::vector<ScoredRecord>& records) {
  MethodReport row;
  row.method = std::move(method);
  for (const auto& [level, pairs] : robust_pairs) {
    if (pairs.empty()) continue;
    double sum = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      double rs = robustness_score(pairs, c);
      row.rs_by_class[level][classes.name(c)] = rs;
      sum += rs;
    }
    row.rs_by_level[level] = sum / static_cast<double>(classes.size());
  }
  if (!monotonic_pairs.empty()) {
    double sum = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      double ms = monotonicity_score(monotonic_pairs, c);
      row.ms_by_class[classes.name(c)] = ms;
      sum += ms;
    }
    row.ms_avg = sum / static_cast<double>(classes.size());
  }

  bool all_bucketed = true;
  std::size_t clear = 0;
  std::size_t ambiguous = 0;
  for (const auto& r : records) {
    if (!r.gold) continue;
    ++row.n_labeled;
    if (!r.bucket) {
      all_bucketed = false;
    } else if (*r.bucket == Bucket::kClear) {
      ++clear;
    } else {
      ++ambiguous;
    }
  }
  if (row.n_labeled > 0) {
    row.f1_avg = f1_where(records, std::nullopt);
    if (all_bucketed) {
      row.n_clear = clear;
      row.n_ambiguous = ambiguous;
      row.f1_clear = f1_where(records, Bucket::kClear);
      row.f1_ambiguous = f1_where(records, Bucket::kAmbiguous);
    }
  }
  return row;
}

json to_json(const MethodReport& row) {
  json rs = json::object();
  for (auto level : kLevelNames) rs[std::string(level)] = or_null(find(row.rs_by_level, level));
  return {{"method", row.method},
          {"rs_by_level", rs},
          {"rs_by_class", row.rs_by_class},
          {"ms_by_class", row.ms_by_class},
          {"ms_avg", or_null(row.ms_avg)},
          {"k_hat_low", or_null(row.k_hat_low)},
          {"f1_clear", or_null(row.f1_clear)},
          {"f1_ambiguous", or_null(row.f1_ambiguous)},
          {"f1_avg", or_null(row.f1_avg)},
          {"n_clear", or_null(row.n_clear)},
          {"n_ambiguous", or_null(row.n_ambiguous)},
          {"n_labeled", row.n_labeled},
          {"failures", row.failures}};
}

json to_json(const EvalReport& report) {
  json methods = json::array();
  for (const auto& row : report.methods) methods.push_back(to_json(row));
  return {{"dataset_fingerprint", report.dataset_fingerprint},
          {"config_snapshot", report.config_snapshot},
          {"threshold", report.threshold},
          {"methods", methods}};
}

std::string render_table(const EvalReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line),
                "%-24s %8s %8s %8s %8s %8s %8s %8s %7s %7s\n", "method",
                "RS low", "RS med", "RS high", "MS avg", "F1 clr", "F1 amb",
                "F1 avg", "n clr", "n amb");
  out += line;
  out += std::string(104, '-') + "\n";
  for (const auto& row : report.methods) {
    std::snprintf(line, sizeof(line),
                  "%-24s %8s %8s %8s %8s %8s %8s %8s %7s %7s\n",
                  row.method.c_str(), cell(find(row.rs_by_level, "low")).c_str(),
                  cell(find(row.rs_by_level, "medium")).c_str(),
                  cell(find(row.rs_by_level, "high")).c_str(),
                  cell(row.ms_avg).c_str(), cell(row.f1_clear).c_str(),
                  cell(row.f1_ambiguous).c_str(), cell(row.f1_avg).c_str(),
                  cell(row.n_clear).c_str(), cell(row.n_ambiguous).c_str());
    out += line;
  }
  return out;
}

std::string fnv1a_hex(std::string_view bytes) { return hex64(fnv1a(bytes)); }

}  // namespace frc
