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

#include "frc/pipeline/knowledge.h"

#include <fstream>
#include <map>
#include <memory>

#include "frc/backends/prompts.h"
#include "frc/text/text.h"

namespace frc {
namespace {

using nlohmann::json;

class Deduper {
 public:
  void offer(const std::string& text, const MembershipVector& degrees) {
    std::string key = text::normalize_key(text);
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_.emplace(key, entries_.size());
      entries_.push_back({text, degrees});
    } else if (degrees.max() > entries_[it->second].memberships.max()) {
      entries_[it->second] = {text, degrees};
    }
  }
  std::vector<KnowledgeEntry> take() { return std::move(entries_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<KnowledgeEntry> entries_;
};

json entries_to_json(const std::vector<KnowledgeEntry>& entries,
                     const ClassSet& classes, const char* text_field) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{text_field, e.text},
                   {"memberships",
                    memberships_to_json(classes, e.memberships.values())}});
  }
  return out;
}

std::vector<KnowledgeEntry> entries_from_json(const json& j,
                                              const ClassSet& classes,
                                              const char* text_field) {
  std::vector<KnowledgeEntry> out;
  for (const auto& e : j) {
    out.push_back({e.at(text_field).get<std::string>(),
                   MembershipVector::Clamped(
                       memberships_from_json(classes, e.at("memberships")))});
  }
  return out;
}

}  // namespace

KnowledgeBundle extract_knowledge(std::span<const FrcTrace> traces) {
  if (traces.empty()) {
    throw Error(ErrorCode::kEmptyTraceSet, "no teacher traces");
  }
  const ClassSet& classes = traces.front().classes;
  const std::string& teacher = traces.front().backend_id;
  Deduper keywords;
  Deduper subunits;
  for (const auto& trace : traces) {
    if (trace.backend_id != teacher) {
      throw Error(ErrorCode::kInvalidArgument,
                  "traces come from several backends: " + teacher + ", " +
                      trace.backend_id);
    }
    if (!(trace.classes == classes)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "traces use different class sets");
    }
    for (const auto& k : trace.keywords) {
      keywords.offer(k.keyword.surface, k.keyword.memberships);
    }
    for (const auto& s : trace.subunits) {
      subunits.offer(s.subunit.text, s.subunit.memberships);
    }
  }
  return KnowledgeBundle{classes.names(), keywords.take(), subunits.take(),
                         teacher};
}

std::string build_student_prompt(const ElicitationRequest& request,
                                 const KnowledgeBundle& bundle) {
  ElicitationRequest injected = request;
  injected.injected = bundle.empty()
                          ? nullptr
                          : std::make_shared<const KnowledgeBundle>(bundle);
  return render_prompt(injected).text();
}

json to_json(const KnowledgeBundle& bundle) {
  ClassSet classes(bundle.classes);
  return {{"teacher_model", bundle.teacher_model},
          {"classes", bundle.classes},
          {"keyword_knowledge",
           entries_to_json(bundle.keyword_knowledge, classes, "surface")},
          {"subunit_knowledge",
           entries_to_json(bundle.subunit_knowledge, classes, "text")}};
}

KnowledgeBundle bundle_from_json(const json& j) {
  try {
    ClassSet classes = classes_from_json(j.at("classes"));
    return KnowledgeBundle{
        classes.names(),
        entries_from_json(j.value("keyword_knowledge", json::array()), classes,
                          "surface"),
        entries_from_json(j.value("subunit_knowledge", json::array()), classes,
                          "text"),
        j.value("teacher_model", "")};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad knowledge bundle: ") + e.what());
  }
}

void save_bundle(const KnowledgeBundle& bundle,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << to_json(bundle).dump(2) << "\n";
}

KnowledgeBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + " is not JSON");
  }
  return bundle_from_json(j);
}

}  // namespace frc
