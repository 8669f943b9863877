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

#include "frc/backends/prompts.h"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace frc {
namespace {

constexpr std::string_view kSystem =
    R"(You are a careful sentiment analyst. You reason in explicit steps and you report fuzzy membership degrees: for every class, a number in [0,1] saying how strongly the text belongs to that class. Degrees are independent across classes and do NOT need to sum to one. Always finish with exactly one JSON object and nothing after it.)";

constexpr std::string_view kCotSystem =
    R"(You are a careful sentiment analyst. You reason in explicit steps and you report a probability for every class. Probabilities must sum to one. Always finish with exactly one JSON object and nothing after it.)";

constexpr std::string_view kKeywordExtraction =
    R"(Step 1 of 4: keyword extraction.
Classes: {{classes}}.
{{knowledge}}Extract every sentiment-bearing keyword or short phrase from the text. Copy each keyword exactly as it appears in the text, including any intensifier or negation directly in front of it ("not good", "very slow").

Text: {{text}}

Answer with one JSON object:
{"keywords": ["<keyword as written in the text>", ...]})";

constexpr std::string_view kKeywordMembership =
    R"(Step 1 of 4: keyword membership degrees.
Classes: {{classes}}.
{{knowledge}}Full text, for context: {{context}}
Keyword: {{text}}

For each class give the degree in [0,1] to which this keyword, read in context, expresses that class. A keyword may belong strongly to several classes at once.

Answer with one JSON object:
{"memberships": {{membership_schema}}})";

constexpr std::string_view kSubunitSegmentation =
    R"(Step 2 of 4: multi-granular parsing.
Split the text into sub-units: consecutive, non-overlapping portions of the text, each carrying a single sentiment without emotional overlap with the others. Copy every sub-unit verbatim from the text, in order.

Text: {{text}}

Answer with one JSON object:
{"subunits": ["<sub-unit copied from the text>", ...]})";

constexpr std::string_view kWeightAssignment =
    R"(Step 3 of 4: dynamic weight adjustment.
Classes: {{classes}}.
Text: {{text}}
Sub-units with their membership degrees:
{{segments}}
For each class, give a nonnegative importance score to every sub-unit ({{segment_count}} scores per class, in sub-unit order). Consider language phenomena (tone shifts, irony, implication), sentiment intensity, and contextual shifts (for example from descriptive to evaluative). Add one line of rationale per class. Scores are normalized per class afterwards.

Answer with one JSON object:
{"weights": {{weight_schema}}, "rationale": {{rationale_schema}}})";

constexpr std::string_view kCotProbabilities =
    R"(Analyze the sentiment step by step.
Classes: {{classes}}.
Step 1: identify the sentiment keywords.
Step 2: split the text into parts and judge the sentiment of each part.
Step 3: weigh the parts against each other in context.
Step 4: give a probability for every class; the probabilities must sum to 1.

Text: {{text}}

Answer with one JSON object:
{"steps": ["<step 1 finding>", "<step 2 finding>", "<step 3 finding>"], "probabilities": {{membership_schema}}})";

constexpr std::string_view kDpLabel =
    R"(Classify the sentiment of the text as one of: {{classes}}.

Text: {{text}}

Answer with one JSON object:
{"label": "<one of the classes>"})";

std::string format_degree(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

std::string format_vector(const std::vector<std::string>& classes,
                          const MembershipVector& m) {
  std::string out;
  for (std::size_t c = 0; c < classes.size() && c < m.size(); ++c) {
    if (c > 0) out += ", ";
    out += classes[c] + "=" + format_degree(m[c]);
  }
  return out;
}

std::string class_list(const ClassSet& classes) {
  std::string out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c > 0) out += ", ";
    out += classes.name(c);
  }
  return out;
}

std::string schema_object(const ClassSet& classes, std::string_view value) {
  std::string out = "{";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c > 0) out += ", ";
    out += "\"" + classes.name(c) + "\": " + std::string(value);
  }
  return out + "}";
}

}  // namespace

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    std::size_t open = tmpl.find("{{", i);
    if (open == std::string_view::npos) break;
    std::size_t close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    out.append(tmpl.substr(i, open - i));
    std::string name(tmpl.substr(open + 2, close - open - 2));
    if (auto it = vars.find(name); it != vars.end()) {
      out += it->second;
    } else {
      out.append(tmpl.substr(open, close + 2 - open));
    }
    i = close + 2;
  }
  out.append(tmpl.substr(i));
  return out;
}

std::string render_knowledge_blocks(const KnowledgeBundle* bundle) {
  if (bundle == nullptr || bundle->empty()) return "";
  std::string out;
  if (!bundle->keyword_knowledge.empty()) {
    out += "Reference keyword knowledge (degrees from a stronger model):\n";
    for (const auto& entry : bundle->keyword_knowledge) {
      out += "- \"" + entry.text +
             "\": " + format_vector(bundle->classes, entry.memberships) + "\n";
    }
    out += "\n";
  }
  if (!bundle->subunit_knowledge.empty()) {
    out += "Reference sub-unit knowledge (degrees from a stronger model):\n";
    for (const auto& entry : bundle->subunit_knowledge) {
      out += "- \"" + entry.text +
             "\": " + format_vector(bundle->classes, entry.memberships) + "\n";
    }
    out += "\n";
  }
  return out;
}

RenderedPrompt render_prompt(const ElicitationRequest& request) {
  std::map<std::string, std::string> vars{
      {"classes", class_list(request.classes)},
      {"text", request.text},
      {"context", request.context},
      {"membership_schema", schema_object(request.classes, "<number>")},
  };
  switch (request.kind) {
    case ElicitationKind::kKeywordExtraction:
      vars["knowledge"] = render_knowledge_blocks(request.injected.get());
      return {std::string(kSystem), render_template(kKeywordExtraction, vars)};
    case ElicitationKind::kKeywordMembership:
      vars["knowledge"] = render_knowledge_blocks(request.injected.get());
      return {std::string(kSystem), render_template(kKeywordMembership, vars)};
    case ElicitationKind::kSubunitSegmentation:
      return {std::string(kSystem),
              render_template(kSubunitSegmentation, vars)};
    case ElicitationKind::kWeightAssignment: {
      std::string segments;
      for (std::size_t j = 0; j < request.segments.size(); ++j) {
        segments += std::to_string(j + 1) + ". \"" + request.segments[j] +
                    "\"";
        if (j < request.segment_memberships.size()) {
          segments += " (" +
                      format_vector(request.classes.names(),
                                    request.segment_memberships[j]) +
                      ")";
        }
        segments += "\n";
      }
      vars["segments"] = segments;
      vars["segment_count"] = std::to_string(request.segments.size());
      vars["weight_schema"] =
          schema_object(request.classes, "[<number>, ...]");
      vars["rationale_schema"] = schema_object(request.classes, "\"<text>\"");
      return {std::string(kSystem), render_template(kWeightAssignment, vars)};
    }
    case ElicitationKind::kCotProbabilities:
      return {std::string(kCotSystem),
              render_template(kCotProbabilities, vars)};
    case ElicitationKind::kDpLabel:
      return {"You are a sentiment classifier. Answer with exactly one JSON "
              "object.",
              render_template(kDpLabel, vars)};
  }
  return {};
}

std::string reprompt_message(ElicitationKind kind) {
  return "Your previous reply could not be parsed for step '" +
         std::string(kind_name(kind)) +
         "'. Reply again with only the JSON object in the requested schema, "
         "with no other text.";
}

}  // namespace frc
