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

// Versioned prompt templates. Each elicitation kind has its own template and
// every template ends by asking for exactly one JSON object whose schema is
// spelled out in the prompt.

#ifndef FRC_BACKENDS_PROMPTS_H_
#define FRC_BACKENDS_PROMPTS_H_

#include <map>
#include <string>
#include <string_view>

#include "frc/backends/backend.h"

namespace frc {

inline constexpr std::string_view kPromptVersion = "frc-prompts/1";

struct RenderedPrompt {
  std::string system;
  std::string user;

  std::string text() const { return system + "\n\n" + user; }
};

// Replaces every {{name}} with vars[name]. Unknown placeholders are left in
// place.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars);

// The knowledge section for extraction and membership prompts: a keyword
// block when keyword knowledge is present, then a sub-unit block when
// sub-unit knowledge is present. Empty for a null or empty bundle.
std::string render_knowledge_blocks(const KnowledgeBundle* bundle);

RenderedPrompt render_prompt(const ElicitationRequest& request);

// Follow-up user message sent once after an unparsable reply.
std::string reprompt_message(ElicitationKind kind);

}  // namespace frc

#endif  // FRC_BACKENDS_PROMPTS_H_
