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

#ifndef FRC_BACKENDS_KNOWLEDGE_BUNDLE_H_
#define FRC_BACKENDS_KNOWLEDGE_BUNDLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "frc/core/types.h"

namespace frc {

struct KnowledgeEntry {
  std::string text;  // keyword surface or sub-unit span
  MembershipVector memberships;
};

// Keyword- and sub-unit-level degrees taken from a teacher model's traces.
// Either part may be empty. Lookups match the lowercased, trimmed text
// exactly.
struct KnowledgeBundle {
  std::vector<std::string> classes;  // layout of every memberships vector
  std::vector<KnowledgeEntry> keyword_knowledge;
  std::vector<KnowledgeEntry> subunit_knowledge;
  std::string teacher_model;

  bool empty() const {
    return keyword_knowledge.empty() && subunit_knowledge.empty();
  }
  const KnowledgeEntry* find_keyword(std::string_view surface) const;
  const KnowledgeEntry* find_subunit(std::string_view span) const;

  KnowledgeBundle keywords_only() const;
  KnowledgeBundle subunits_only() const;
};

}  // namespace frc

#endif  // FRC_BACKENDS_KNOWLEDGE_BUNDLE_H_
