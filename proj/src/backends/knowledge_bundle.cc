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

#include "frc/backends/knowledge_bundle.h"

#include "frc/text/text.h"

namespace frc {
namespace {

const KnowledgeEntry* find_in(const std::vector<KnowledgeEntry>& entries,
                              std::string_view key) {
  const std::string wanted = text::normalize_key(key);
  for (const auto& entry : entries) {
    if (text::normalize_key(entry.text) == wanted) return &entry;
  }
  return nullptr;
}

}  // namespace

const KnowledgeEntry* KnowledgeBundle::find_keyword(
    std::string_view surface) const {
  return find_in(keyword_knowledge, surface);
}

const KnowledgeEntry* KnowledgeBundle::find_subunit(
    std::string_view span) const {
  return find_in(subunit_knowledge, span);
}

KnowledgeBundle KnowledgeBundle::keywords_only() const {
  KnowledgeBundle out = *this;
  out.subunit_knowledge.clear();
  return out;
}

KnowledgeBundle KnowledgeBundle::subunits_only() const {
  KnowledgeBundle out = *this;
  out.keyword_knowledge.clear();
  return out;
}

}  // namespace frc
