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

#include "frc/pipeline/trace.h"

#include <cmath>

#include "frc/core/error.h"
#include "frc/core/fuzzy.h"
#include "frc/text/text.h"

namespace frc {
namespace {

using nlohmann::json;

json times_to_json(const std::vector<StageTime>& times) {
  json out = json::array();
  for (const auto& t : times) out.push_back({{"stage", t.stage}, {"at", t.at}});
  return out;
}

std::vector<StageTime> times_from_json(const json& j) {
  std::vector<StageTime> out;
  for (const auto& t : j) {
    out.push_back({t.at("stage").get<std::string>(),
                   t.at("at").get<std::string>()});
  }
  return out;
}

template <typename F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad ") + what + " record: " + e.what());
  }
}

std::string subunit_source(const TracedSubUnit& s) {
  if (s.source == DegreeSource::kInjected) return "injected";
  return s.subunit.keywords.empty() ? "empty" : "aggregated";
}

}  // namespace

std::vector<SubUnit> FrcTrace::plain_subunits() const {
  std::vector<SubUnit> out;
  out.reserve(subunits.size());
  for (const auto& s : subunits) out.push_back(s.subunit);
  return out;
}

json memberships_to_json(const ClassSet& classes,
                         std::span<const double> values) {
  json out = json::object();
  for (std::size_t c = 0; c < classes.size() && c < values.size(); ++c) {
    out[classes.name(c)] = values[c];
  }
  return out;
}

std::vector<double> memberships_from_json(const ClassSet& classes,
                                          const json& j) {
  std::vector<double> out;
  for (const auto& name : classes.names()) {
    out.push_back(j.at(name).get<double>());
  }
  return out;
}

json classes_to_json(const ClassSet& classes) { return classes.names(); }

ClassSet classes_from_json(const json& j) {
  return ClassSet(j.get<std::vector<std::string>>());
}

json to_json(const FrcTrace& trace) {
  json j;
  j["method"] = "frc";
  j["id"] = trace.id;
  j["input_text"] = trace.input_text;
  j["classes"] = classes_to_json(trace.classes);
  j["keywords"] = json::array();
  for (const auto& k : trace.keywords) {
    j["keywords"].push_back(
        {{"surface", k.keyword.surface},
         {"memberships",
          memberships_to_json(trace.classes, k.keyword.memberships.values())},
         {"subunit", k.subunit},
         {"source",
          k.source == DegreeSource::kInjected ? "injected" : "elicited"}});
  }
  j["subunits"] = json::array();
  for (std::size_t s = 0; s < trace.subunits.size(); ++s) {
    const auto& su = trace.subunits[s];
    json indices = json::array();
    for (std::size_t k = 0; k < trace.keywords.size(); ++k) {
      if (trace.keywords[k].subunit == s) indices.push_back(k);
    }
    j["subunits"].push_back(
        {{"text", su.subunit.text},
         {"keyword_indices", indices},
         {"memberships",
          memberships_to_json(trace.classes, su.subunit.memberships.values())},
         {"source", subunit_source(su)},
         {"catch_all", su.catch_all}});
  }
  j["weights"] = json::object();
  j["adjustment_notes"] = json::object();
  for (std::size_t c = 0; c < trace.classes.size(); ++c) {
    const auto row = trace.weights.row(c);
    j["weights"][trace.classes.name(c)] =
        std::vector<double>(row.begin(), row.end());
    j["adjustment_notes"][trace.classes.name(c)] =
        c < trace.adjustment_notes.size() ? trace.adjustment_notes[c] : "";
  }
  j["fused"] = memberships_to_json(trace.classes, trace.fused.values());
  j["backend_id"] = trace.backend_id;
  j["timestamps"] = times_to_json(trace.timestamps);
  return j;
}

json to_json(const CotTrace& trace) {
  return {{"method", "cot"},
          {"id", trace.id},
          {"input_text", trace.input_text},
          {"classes", classes_to_json(trace.classes)},
          {"step_notes", trace.step_notes},
          {"probabilities",
           memberships_to_json(trace.classes, trace.probabilities)},
          {"backend_id", trace.backend_id},
          {"timestamps", times_to_json(trace.timestamps)}};
}

json to_json(const DpResult& result) {
  return {{"method", "dp"},
          {"id", result.id},
          {"input_text", result.input_text},
          {"classes", classes_to_json(result.classes)},
          {"label", result.label},
          {"backend_id", result.backend_id},
          {"timestamps", times_to_json(result.timestamps)}};
}

FrcTrace frc_trace_from_json(const json& j) {
  return guarded("frc trace", [&] {
    ClassSet classes = classes_from_json(j.at("classes"));
    std::vector<TracedKeyword> keywords;
    for (const auto& k : j.at("keywords")) {
      keywords.push_back(TracedKeyword{
          Keyword{k.at("surface").get<std::string>(),
                  MembershipVector(
                      memberships_from_json(classes, k.at("memberships")))},
          k.at("subunit").get<std::size_t>(),
          k.at("source").get<std::string>() == "injected"
              ? DegreeSource::kInjected
              : DegreeSource::kElicited});
    }
    std::vector<TracedSubUnit> subunits;
    for (const auto& s : j.at("subunits")) {
      SubUnit su{s.at("text").get<std::string>(), {},
                 MembershipVector(
                     memberships_from_json(classes, s.at("memberships")))};
      for (const auto& index : s.at("keyword_indices")) {
        su.keywords.push_back(keywords.at(index.get<std::size_t>()).keyword);
      }
      subunits.push_back(TracedSubUnit{
          std::move(su),
          s.at("source").get<std::string>() == "injected"
              ? DegreeSource::kInjected
              : DegreeSource::kElicited,
          s.value("catch_all", false)});
    }
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;
    for (const auto& name : classes.names()) {
      rows.push_back(j.at("weights").at(name).get<std::vector<double>>());
      notes.push_back(j.at("adjustment_notes").value(name, ""));
    }
    MembershipVector fused(memberships_from_json(classes, j.at("fused")));
    return FrcTrace{j.at("id").get<std::string>(),
                    j.at("input_text").get<std::string>(),
                    std::move(classes),
                    std::move(keywords),
                    std::move(subunits),
                    WeightMatrix(std::move(rows)),
                    std::move(notes),
                    std::move(fused),
                    j.at("backend_id").get<std::string>(),
                    times_from_json(j.at("timestamps"))};
  });
}

CotTrace cot_trace_from_json(const json& j) {
  return guarded("cot trace", [&] {
    ClassSet classes = classes_from_json(j.at("classes"));
    auto probabilities = memberships_from_json(classes, j.at("probabilities"));
    return CotTrace{j.at("id").get<std::string>(),
                    j.at("input_text").get<std::string>(),
                    std::move(classes),
                    j.at("step_notes").get<std::vector<std::string>>(),
                    std::move(probabilities),
                    j.at("backend_id").get<std::string>(),
                    times_from_json(j.at("timestamps"))};
  });
}

DpResult dp_result_from_json(const json& j) {
  return guarded("dp result", [&] {
    return DpResult{j.at("id").get<std::string>(),
                    j.at("input_text").get<std::string>(),
                    classes_from_json(j.at("classes")),
                    j.at("label").get<std::string>(),
                    j.at("backend_id").get<std::string>(),
                    times_from_json(j.at("timestamps"))};
  });
}

std::string check_trace(const FrcTrace& trace) {
  for (std::size_t k = 0; k < trace.keywords.size(); ++k) {
    const auto& kw = trace.keywords[k];
    if (kw.subunit >= trace.subunits.size()) {
      return "keyword " + std::to_string(k) + " has no sub-unit";
    }
    if (!text::find_ci(trace.subunits[kw.subunit].subunit.text,
                       kw.keyword.surface)) {
      return "keyword '" + kw.keyword.surface + "' not in its sub-unit";
    }
  }
  for (const auto& s : trace.subunits) {
    if (s.source == DegreeSource::kInjected || s.subunit.keywords.empty()) {
      continue;
    }
    MembershipVector local = aggregate_local(s.subunit.keywords, trace.classes);
    for (std::size_t c = 0; c < trace.classes.size(); ++c) {
      if (std::abs(local[c] - s.subunit.memberships[c]) > kTolerance) {
        return "sub-unit '" + s.subunit.text + "' is not the keyword max";
      }
    }
  }
  MembershipVector fused = fuse_global(trace.plain_subunits(), trace.weights);
  for (std::size_t c = 0; c < trace.classes.size(); ++c) {
    if (std::abs(fused[c] - trace.fused[c]) > kTolerance) {
      return "stored fused degree of " + trace.classes.name(c) +
             " does not match recomputation";
    }
  }
  return "";
}

}  // namespace frc
