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

#ifndef FRC_BACKENDS_LEXICON_BACKEND_H_
#define FRC_BACKENDS_LEXICON_BACKEND_H_

#include <string>

#include "frc/backends/backend.h"
#include "frc/backends/lexicon.h"

namespace frc {

// Raw weight of a sub-unit with no evidence for a class.
inline constexpr double kWeightFloor = 0.05;
// Multiplier on raw weights of sub-units opened by "but", "however", "yet".
inline constexpr double kContrastBoost = 1.5;

// Deterministic stand-in for a language model, answering every elicitation
// kind from a lexicon:
//   keyword_extraction    entry tokens with their modifier window, plus any
//                         injected keyword found in the text
//   keyword_membership    injected degrees when known, else
//                         lexicon_membership over the keyword's tokens
//   subunit_segmentation  text::split_clauses
//   weight_assignment     1 for sub-units with evidence for the class,
//                         kWeightFloor otherwise, times kContrastBoost for
//                         contrastive clauses
//   cot_probabilities     whole-text degrees scaled onto the simplex
//   dp_label              argmax of whole-text degrees
// Pure and thread-safe.
class LexiconBackend : public Backend {
 public:
  explicit LexiconBackend(Lexicon lexicon);

  std::string id() const override;
  bool deterministic() const override { return true; }
  ElicitationResponse elicit(const ElicitationRequest& request) override;

  const Lexicon& lexicon() const { return lexicon_; }

 private:
  KeywordList extract_keywords(const ElicitationRequest& request) const;
  RawWeights assign_weights(const ElicitationRequest& request) const;

  Lexicon lexicon_;
  std::string id_;
};

}  // namespace frc

#endif  // FRC_BACKENDS_LEXICON_BACKEND_H_
