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

#include "frc/backends/lexicon.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "frc/core/error.h"
#include "frc/core/hash.h"
#include "frc/text/text.h"

namespace frc {

void Lexicon::validate() const {
  for (const auto& [word, strengths] : entries) {
    for (const auto& [cls, s] : strengths) {
      if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "lexicon strength of '" + word + "' for " + cls +
                        " outside [0,1]");
      }
    }
    if (modifiers.contains(word) || negators.contains(word)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + word + "' is both an entry and a modifier/negator");
    }
  }
  for (const auto& [word, factor] : modifiers) {
    if (!std::isfinite(factor) || factor <= 0.0 ||
        factor > kMaxModifierFactor) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modifier factor of '" + word + "' outside (0,2]");
    }
    if (negators.contains(word)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + word + "' is both a modifier and a negator");
    }
  }
}

double Lexicon::base_strength(const std::string& word,
                              const std::string& cls) const {
  auto it = entries.find(word);
  if (it == entries.end()) return 0.0;
  auto jt = it->second.find(cls);
  return jt == it->second.end() ? 0.0 : jt->second;
}

Lexicon Lexicon::FromJson(const nlohmann::json& j) {
  Lexicon lexicon;
  try {
    if (j.contains("entries")) {
      for (const auto& [word, strengths] : j.at("entries").items()) {
        auto& row = lexicon.entries[text::to_lower(word)];
        for (const auto& [cls, value] : strengths.items()) {
          row[cls] = value.get<double>();
        }
      }
    }
    if (j.contains("modifiers")) {
      for (const auto& [word, factor] : j.at("modifiers").items()) {
        lexicon.modifiers[text::to_lower(word)] = factor.get<double>();
      }
    }
    if (j.contains("negators")) {
      for (const auto& word : j.at("negators")) {
        lexicon.negators.insert(text::to_lower(word.get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed lexicon: ") + e.what());
  }
  lexicon.validate();
  return lexicon;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open lexicon " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                "lexicon " + path.string() + " is not JSON: " + e.what());
  }
  return FromJson(j);
}

nlohmann::json Lexicon::ToJson() const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::object();
  for (const auto& [word, strengths] : entries) {
    j["entries"][word] = strengths;
  }
  j["modifiers"] = modifiers;
  j["negators"] = negators;
  return j;
}

std::string Lexicon::fingerprint() const {
  return hex64(fnv1a(ToJson().dump()));
}

std::vector<LexiconHit> lexicon_hits(std::span<const std::string> tokens,
                                     const ClassSet& classes,
                                     const Lexicon& lexicon) {
  std::vector<LexiconHit> hits;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto entry = lexicon.entries.find(tokens[i]);
    if (entry == lexicon.entries.end()) continue;
    LexiconHit hit;
    hit.token = i;
    hit.window_begin = i;
    for (std::size_t back = 1; back <= kModifierWindow && back <= i; ++back) {
      const std::string& w = tokens[i - back];
      if (auto m = lexicon.modifiers.find(w); m != lexicon.modifiers.end()) {
        hit.factor *= m->second;
        hit.window_begin = i - back;
      } else if (lexicon.negators.contains(w)) {
        hit.negated = !hit.negated;
        hit.window_begin = i - back;
      }
    }
    hit.strengths.assign(classes.size(), 0.0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto s = entry->second.find(classes.name(c));
      if (s != entry->second.end()) hit.strengths[c] = s->second * hit.factor;
    }
    if (hit.negated) std::swap(hit.strengths[0], hit.strengths[1]);
    for (double& s : hit.strengths) s = std::clamp(s, 0.0, 1.0);
    hits.push_back(std::move(hit));
  }
  return hits;
}

MembershipVector lexicon_membership(std::span<const std::string> tokens,
                                    const ClassSet& classes,
                                    const Lexicon& lexicon) {
  std::vector<double> out(classes.size(), 0.0);
  for (const auto& hit : lexicon_hits(tokens, classes, lexicon)) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      out[c] = std::max(out[c], hit.strengths[c]);
    }
  }
  return MembershipVector(std::move(out));
}

}  // namespace frc
