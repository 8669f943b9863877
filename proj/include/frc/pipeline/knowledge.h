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

// Teacher-to-student transfer: intermediate FRC results from a large model
// are collected into a KnowledgeBundle and injected into a smaller model's
// prompts.

#ifndef FRC_PIPELINE_KNOWLEDGE_H_
#define FRC_PIPELINE_KNOWLEDGE_H_

#include <filesystem>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "frc/backends/backend.h"
#include "frc/backends/knowledge_bundle.h"
#include "frc/pipeline/trace.h"

namespace frc {

// Deduplicates keyword surfaces and sub-unit spans (lowercased, trimmed)
// across the traces. On a collision the entry with the highest maximum
// class degree wins; the first one seen wins ties. Entries keep
// first-appearance order.
// Throws EmptyTraceSet for no traces and InvalidArgument when the traces
// come from different backends or class sets.
KnowledgeBundle extract_knowledge(std::span<const FrcTrace> traces);

// The prompt for `request` with `bundle` injected. Identical to the
// uninjected prompt when the bundle is empty.
std::string build_student_prompt(const ElicitationRequest& request,
                                 const KnowledgeBundle& bundle);

// {"teacher_model", "classes", "keyword_knowledge": [{"surface",
//  "memberships"}], "subunit_knowledge": [{"text", "memberships"}]}
nlohmann::json to_json(const KnowledgeBundle& bundle);
KnowledgeBundle bundle_from_json(const nlohmann::json& j);
void save_bundle(const KnowledgeBundle& bundle,
                 const std::filesystem::path& path);
KnowledgeBundle load_bundle(const std::filesystem::path& path);

}  // namespace frc

#endif  // FRC_PIPELINE_KNOWLEDGE_H_
