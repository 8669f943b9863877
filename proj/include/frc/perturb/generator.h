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

#ifndef FRC_PERTURB_GENERATOR_H_
#define FRC_PERTURB_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "frc/backends/http_backend.h"
#include "frc/backends/lexicon.h"
#include "frc/core/types.h"
#include "frc/perturb/record.h"
#include "frc/perturb/synonyms.h"

namespace frc {

enum class RobustLevel { kLow, kMedium, kHigh };

PerturbKind kind_of(RobustLevel level);

struct MonotonicEdit {
  std::string text;
  ShiftLabels labels;
};

// Source of perturbed texts. Implementations keep no per-call state and may
// be used from several threads.
class Generator {
 public:
  virtual ~Generator() = default;

  virtual std::string id() const = 0;
  // A sentiment-preserving rewrite. `seed` drives every random choice.
  virtual std::string rewrite(std::string_view text, RobustLevel level,
                              std::uint64_t seed) = 0;
  // A rewrite that moves classes.name(target) in `direction` (+1 or -1).
  virtual MonotonicEdit shift(std::string_view text, const ClassSet& classes,
                              std::size_t target, int direction) = 0;
};

// Lexicon-driven rewrites whose effect on the lexicon oracle is known:
//   low     1-2 tokens replaced by their closest synonym
//   medium  every table word replaced by its closest synonym, then the
//           clause order reversed
//   high    each clause rebuilt from an opener plus its sentiment phrases,
//           with every table word replaced by its loosest synonym
//   shift   kIntensifier (+1) or kDiminisher (-1) inserted before the
//           strongest token of the target class
class DeterministicGenerator : public Generator {
 public:
  static constexpr std::string_view kIntensifier = "very";
  static constexpr std::string_view kDiminisher = "slightly";

  // Throws InvalidArgument unless the lexicon lists kIntensifier with a
  // factor above 1 and kDiminisher with a factor below 1.
  DeterministicGenerator(Lexicon lexicon, SynonymTable synonyms);

  std::string id() const override { return "deterministic"; }
  std::string rewrite(std::string_view text, RobustLevel level,
                      std::uint64_t seed) override;
  // Throws NoSentimentToken when no token can be moved without touching
  // another class or another token's modifier window.
  MonotonicEdit shift(std::string_view text, const ClassSet& classes,
                      std::size_t target, int direction) override;

 private:
  std::string swap_some(std::string_view text, std::uint64_t seed) const;
  std::string swap_all_and_reorder(std::string_view text) const;
  std::string paraphrase(std::string_view text, std::uint64_t seed) const;

  Lexicon lexicon_;
  SynonymTable synonyms_;
};

// Asks a chat model for the rewrite; the reply must hold {"text": "..."}.
// Monotonic labels mark only the target class.
class LlmGenerator : public Generator {
 public:
  explicit LlmGenerator(BackendConfig config);

  std::string id() const override;
  std::string rewrite(std::string_view text, RobustLevel level,
                      std::uint64_t seed) override;
  MonotonicEdit shift(std::string_view text, const ClassSet& classes,
                      std::size_t target, int direction) override;

 private:
  std::string ask(const std::string& instruction, std::string_view text);

  ChatClient client_;
};

}  // namespace frc

#endif  // FRC_PERTURB_GENERATOR_H_
