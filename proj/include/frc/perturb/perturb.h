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

#ifndef FRC_PERTURB_PERTURB_H_
#define FRC_PERTURB_PERTURB_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frc/core/types.h"
#include "frc/perturb/generator.h"
#include "frc/perturb/record.h"

namespace frc {

// Generator calls per robustness record before giving up.
inline constexpr int kGenerationAttempts = 3;

// One sentiment-preserving perturbation at `level`. The record id and
// source id are left for the caller.
// Throws InvalidArgument for blank text, NoSwapCandidates from the
// generator, and GenerationFailed when every attempt echoes the input or
// returns an unusable reply.
PerturbedRecord perturb_robust(std::string_view text, RobustLevel level,
                               Generator& generator, std::uint64_t seed = 0);

// One intensity shift of `target_class` in `direction`.
// Throws InvalidArgument when direction is not +1 or -1 or the class is
// unknown, NoSentimentToken from the generator, and GenerationFailed when
// the output does not differ from the input.
PerturbedRecord perturb_monotonic(std::string_view text,
                                  const ClassSet& classes,
                                  std::string_view target_class, int direction,
                                  Generator& generator);

// Per-record seed, independent of processing order.
std::uint64_t record_seed(std::uint64_t seed, std::string_view id,
                          PerturbKind kind);

struct PerturbFailure {
  std::string source_id;
  PerturbKind kind;
  std::string message;
};

struct PerturbOutcome {
  std::vector<PerturbedRecord> records;
  std::vector<PerturbFailure> failures;
};

// One record per (source, kind), in dataset order then `kinds` order, with
// id "<source_id>/<kind>". Monotonic records target the gold class when it
// is polar, falling back to the other polar classes, and try a seeded
// direction before its opposite. Failed records are reported, not fatal.
PerturbOutcome perturb_dataset(const std::vector<DatasetRecord>& dataset,
                               const ClassSet& classes,
                               const std::vector<PerturbKind>& kinds,
                               Generator& generator, std::uint64_t seed,
                               int workers = 1);

}  // namespace frc

#endif  // FRC_PERTURB_PERTURB_H_
