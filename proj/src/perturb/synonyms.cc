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

#include "frc/perturb/synonyms.h"

#include <fstream>

#include "frc/core/error.h"
#include "frc/text/text.h"

namespace frc {

SynonymTable::SynonymTable(
    std::map<std::string, std::vector<std::string>> table) {
  for (auto& [word, options] : table) {
    std::string key = text::normalize_key(word);
    if (key.empty() || options.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "synonym entry '" + word + "' has no replacements");
    }
    for (auto& option : options) {
      option = text::normalize_key(option);
      if (option.empty() || option == key) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad replacement for '" + key + "'");
      }
    }
    table_[key] = std::move(options);
  }
}

SynonymTable SynonymTable::FromJson(const nlohmann::json& j) {
  try {
    return SynonymTable(
        j.get<std::map<std::string, std::vector<std::string>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad synonym table: ") + e.what());
  }
}

SynonymTable SynonymTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  auto j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + " is not JSON");
  }
  return FromJson(j);
}

nlohmann::json SynonymTable::ToJson() const { return table_; }

const std::string& SynonymTable::closest(const std::string& word) const {
  return table_.at(word).front();
}

const std::string& SynonymTable::loosest(const std::string& word) const {
  return table_.at(word).back();
}

}  // namespace frc
