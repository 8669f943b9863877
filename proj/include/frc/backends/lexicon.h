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

#ifndef FRC_BACKENDS_LEXICON_H_
#define FRC_BACKENDS_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frc/core/types.h"

namespace frc {

// Number of preceding tokens inspected for modifiers and negators.
inline constexpr std::size_t kModifierWindow = 2;
inline constexpr double kMaxModifierFactor = 2.0;

// Sentiment lexicon backing the deterministic oracle.
//
// File format (UTF-8 JSON):
//   {"entries":   {"good": {"positive": 0.6, "negative": 0.0}},
//    "modifiers": {"very": 1.5},
//    "negators":  ["not"]}
// Keys are lowercased on load. Classes missing from an entry read as 0.
struct Lexicon {
  std::map<std::string, std::map<std::string, double>> entries;
  std::map<std::string, double> modifiers;
  std::set<std::string> negators;

  // Throws InvalidArgument when a strength is outside [0,1], a factor is
  // outside (0,2], or a word plays two roles.
  void validate() const;

  bool is_entry(const std::string& w) const { return entries.contains(w); }
  bool is_modifier(const std::string& w) const { return modifiers.contains(w); }
  bool is_negator(const std::string& w) const { return negators.contains(w); }
  double base_strength(const std::string& word, const std::string& cls) const;

  static Lexicon FromJson(const nlohmann::json& j);
  static Lexicon Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // Stable 64-bit FNV-1a digest of the canonical JSON, hex encoded.
  std::string fingerprint() const;
};

// One sentiment-bearing token after applying its modifier window.
struct LexiconHit {
  std::size_t token = 0;         // index of the entry token
  std::size_t window_begin = 0;  // first modifier/negator token, or `token`
  double factor = 1.0;           // product of modifier factors in the window
  bool negated = false;
  std::vector<double> strengths;  // per class, clamped into [0,1]
};

std::vector<LexiconHit> lexicon_hits(std::span<const std::string> tokens,
                                     const ClassSet& classes,
                                     const Lexicon& lexicon);

// Per class: max over matched entries of base strength times the product of
// modifier factors among the preceding kModifierWindow tokens, with the
// first two classes swapped when a negator sits in that window. Clamped into
// [0,1]; tokens without an entry contribute nothing.
MembershipVector lexicon_membership(std::span<const std::string> tokens,
                                    const ClassSet& classes,
                                    const Lexicon& lexicon);

}  // namespace frc

#endif  // FRC_BACKENDS_LEXICON_H_
