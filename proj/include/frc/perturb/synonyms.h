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

#ifndef FRC_PERTURB_SYNONYMS_H_
#define FRC_PERTURB_SYNONYMS_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace frc {

// Word -> replacements ordered from closest to loosest meaning.
// File format: {"good": ["fine", "decent"], ...}; keys are lowercased.
class SynonymTable {
 public:
  SynonymTable() = default;
  // Throws InvalidArgument on an empty list or a word listed as its own
  // synonym.
  explicit SynonymTable(std::map<std::string, std::vector<std::string>> table);

  static SynonymTable FromJson(const nlohmann::json& j);
  static SynonymTable Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  bool contains(const std::string& word) const { return table_.contains(word); }
  const std::string& closest(const std::string& word) const;
  const std::string& loosest(const std::string& word) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

}  // namespace frc

#endif  // FRC_PERTURB_SYNONYMS_H_
