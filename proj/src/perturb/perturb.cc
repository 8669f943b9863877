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

#include "frc/perturb/perturb.h"

#include <optional>

#include "frc/core/error.h"
#include "frc/core/hash.h"
#include "frc/pipeline/batch.h"
#include "frc/text/text.h"

namespace frc {
namespace {

RobustLevel level_of(PerturbKind kind) {
  switch (kind) {
    case PerturbKind::kRobustMedium:
      return RobustLevel::kMedium;
    case PerturbKind::kRobustHigh:
      return RobustLevel::kHigh;
    default:
      return RobustLevel::kLow;
  }
}

void require_text(std::string_view text) {
  if (text::trim(text).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot perturb blank text");
  }
}

PerturbedRecord monotonic_for(const DatasetRecord& source,
                              const ClassSet& classes, Generator& generator,
                              std::uint64_t seed) {
  std::vector<std::size_t> targets;
  if (source.label) {
    if (auto gold = classes.index_of(*source.label)) {
      if (*gold < classes.size() && classes.name(*gold) != kOtherClass) {
        targets.push_back(*gold);
      }
    }
  }
  for (std::size_t c : classes.polar_indices()) {
    if (targets.empty() || c != targets.front()) targets.push_back(c);
  }
  int first = (record_seed(seed, source.id, PerturbKind::kMonotonic) & 1)
                  ? 1
                  : -1;
  std::optional<Error> last;
  for (std::size_t target : targets) {
    for (int direction : {first, -first}) {
      try {
        return perturb_monotonic(source.text, classes, classes.name(target),
                                 direction, generator);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoSentimentToken) throw;
        last = e;
      }
    }
  }
  throw last.value_or(
      Error(ErrorCode::kNoSentimentToken, "no polar class to shift"));
}

}  // namespace

PerturbedRecord perturb_robust(std::string_view text, RobustLevel level,
                               Generator& generator, std::uint64_t seed) {
  require_text(text);
  std::string last_problem = "output equals input";
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::string out;
    try {
      out = generator.rewrite(text, level,
                              seed + 0x9e3779b97f4a7c15ULL * attempt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMalformedResponse &&
          e.code() != ErrorCode::kTransportError) {
        throw;
      }
      last_problem = e.what();
      continue;
    }
    if (text::trim(out).empty() || out == text) {
      last_problem = "output equals input";
      continue;
    }
    PerturbedRecord record;
    record.original_text = std::string(text);
    record.perturbed_text = std::move(out);
    record.kind = kind_of(level);
    return record;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no usable rewrite after " + std::to_string(kGenerationAttempts) +
                  " attempts: " + last_problem);
}

PerturbedRecord perturb_monotonic(std::string_view text,
                                  const ClassSet& classes,
                                  std::string_view target_class, int direction,
                                  Generator& generator) {
  if (direction != 1 && direction != -1) {
    throw Error(ErrorCode::kInvalidArgument,
                "shift direction must be +1 or -1, got " +
                    std::to_string(direction));
  }
  auto target = classes.index_of(target_class);
  if (!target) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown class '" + std::string(target_class) + "'");
  }
  require_text(text);
  MonotonicEdit edit = generator.shift(text, classes, *target, direction);
  if (edit.text == text) {
    throw Error(ErrorCode::kGenerationFailed, "shift left the text unchanged");
  }
  PerturbedRecord record;
  record.original_text = std::string(text);
  record.perturbed_text = std::move(edit.text);
  record.kind = PerturbKind::kMonotonic;
  record.shift_labels = std::move(edit.labels);
  return record;
}

std::uint64_t record_seed(std::uint64_t seed, std::string_view id,
                          PerturbKind kind) {
  const char tag = static_cast<char>(kind);
  return fnv1a_update(fnv1a_update(kFnvOffsetBasis ^ seed, id),
                      std::string_view(&tag, 1));
}

PerturbOutcome perturb_dataset(const std::vector<DatasetRecord>& dataset,
                               const ClassSet& classes,
                               const std::vector<PerturbKind>& kinds,
                               Generator& generator, std::uint64_t seed,
                               int workers) {
  const std::size_t total = dataset.size() * kinds.size();
  auto results = run_batch<PerturbedRecord>(total, workers, [&](std::size_t i) {
    const DatasetRecord& source = dataset[i / kinds.size()];
    PerturbKind kind = kinds[i % kinds.size()];
    PerturbedRecord record =
        kind == PerturbKind::kMonotonic
            ? monotonic_for(source, classes, generator, seed)
            : perturb_robust(source.text, level_of(kind), generator,
                             record_seed(seed, source.id, kind));
    record.id = source.id + "/" + std::string(perturb_kind_name(kind));
    record.source_id = source.id;
    return record;
  });
  PerturbOutcome outcome;
  for (std::size_t i = 0; i < total; ++i) {
    if (auto* record = std::get_if<PerturbedRecord>(&results[i])) {
      outcome.records.push_back(std::move(*record));
    } else {
      outcome.failures.push_back({dataset[i / kinds.size()].id,
                                  kinds[i % kinds.size()],
                                  std::get<std::string>(results[i])});
    }
  }
  return outcome;
}

}  // namespace frc
