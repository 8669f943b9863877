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

// In-process chat-completions server for HTTP backend tests.

#ifndef FRC_TESTS_TESTING_STUB_SERVER_H_
#define FRC_TESTS_TESTING_STUB_SERVER_H_

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "frc/backends/backend.h"

namespace frc::testing {

// Serves POST /v1/chat/completions. The handler sees the request body and
// returns the assistant content, or nullopt for an HTTP 500.
class StubServer {
 public:
  using Handler =
      std::function<std::optional<std::string>(const nlohmann::json& body)>;

  explicit StubServer(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   ++requests_;
                   auto body = nlohmann::json::parse(req.body);
                   {
                     std::lock_guard<std::mutex> lock(mu_);
                     bodies_.push_back(body);
                   }
                   auto content = handler_(body);
                   if (!content) {
                     res.status = 500;
                     res.set_content("{\"error\":\"stub\"}", "application/json");
                     return;
                   }
                   nlohmann::json reply = {
                       {"id", "stub"},
                       {"object", "chat.completion"},
                       {"choices",
                        {{{"index", 0},
                          {"message",
                           {{"role", "assistant"}, {"content", *content}}},
                          {"finish_reason", "stop"}}}}};
                   res.set_content(reply.dump(), "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  long requests() const { return requests_.load(); }
  std::vector<nlohmann::json> bodies() const {
    std::lock_guard<std::mutex> lock(mu_);
    return bodies_;
  }

 private:
  Handler handler_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<long> requests_{0};
  mutable std::mutex mu_;
  std::vector<nlohmann::json> bodies_;
};

// Reconstructs the elicitation request from a rendered prompt.
inline ElicitationRequest request_from_prompt(const std::string& user) {
  auto line_after = [&](const std::string& prefix) -> std::string {
    std::istringstream in(user);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    }
    return "";
  };
  auto strip_period = [](std::string s) {
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  std::string class_line = strip_period(line_after("Classes: "));
  if (class_line.empty()) {
    auto pos = user.find("one of: ");
    class_line = strip_period(user.substr(pos + 8, user.find('\n', pos) - pos - 8));
  }
  std::vector<std::string> names;
  bool has_other = false;
  std::istringstream names_in(class_line);
  for (std::string name; std::getline(names_in, name, ',');) {
    while (!name.empty() && name.front() == ' ') name.erase(0, 1);
    if (name == "other") {
      has_other = true;
    } else {
      names.push_back(name);
    }
  }
  if (names.size() < 2) names = {"positive", "negative"};
  ElicitationRequest request{ElicitationKind::kDpLabel, "",
                             ClassSet(names, has_other)};
  request.text = line_after("Text: ");
  if (user.find("keyword extraction") != std::string::npos) {
    request.kind = ElicitationKind::kKeywordExtraction;
  } else if (user.find("keyword membership") != std::string::npos) {
    request.kind = ElicitationKind::kKeywordMembership;
    request.text = line_after("Keyword: ");
    request.context = line_after("Full text, for context: ");
  } else if (user.find("multi-granular") != std::string::npos) {
    request.kind = ElicitationKind::kSubunitSegmentation;
  } else if (user.find("dynamic weight") != std::string::npos) {
    request.kind = ElicitationKind::kWeightAssignment;
    static const std::regex segment(R"re(^\d+\. "(.*)"( \(.*\))?$)re");
    std::istringstream in(user);
    for (std::string line; std::getline(in, line);) {
      std::smatch m;
      if (std::regex_match(line, m, segment)) request.segments.push_back(m[1]);
    }
  } else if (user.find("step by step") != std::string::npos) {
    request.kind = ElicitationKind::kCotProbabilities;
  }
  return request;
}

inline nlohmann::json response_to_json(const ElicitationResponse& response,
                                       const ClassSet& classes) {
  using nlohmann::json;
  auto per_class = [&](const std::vector<double>& values) {
    json out = json::object();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      out[classes.name(c)] = values[c];
    }
    return out;
  };
  if (auto* k = std::get_if<KeywordList>(&response)) {
    return {{"keywords", k->keywords}};
  }
  if (auto* m = std::get_if<MembershipVector>(&response)) {
    return {{"memberships",
             per_class(std::vector<double>(m->begin(), m->end()))}};
  }
  if (auto* s = std::get_if<SpanList>(&response)) {
    return {{"subunits", s->spans}};
  }
  if (auto* w = std::get_if<RawWeights>(&response)) {
    json weights = json::object();
    json rationale = json::object();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      weights[classes.name(c)] = w->per_class[c];
      rationale[classes.name(c)] = w->notes[c];
    }
    return {{"weights", weights}, {"rationale", rationale}};
  }
  if (auto* p = std::get_if<ProbabilityVector>(&response)) {
    return {{"steps", p->step_notes}, {"probabilities", per_class(p->values)}};
  }
  return {{"label", std::get<ClassLabel>(response).name}};
}

// A model that answers every prompt the way `backend` would, wrapped in a
// short preamble and a code fence.
inline StubServer::Handler backend_speaker(Backend& backend) {
  return [&backend](const nlohmann::json& body) -> std::optional<std::string> {
    std::string user = body.at("messages").at(1).at("content");
    ElicitationRequest request = request_from_prompt(user);
    nlohmann::json answer =
        response_to_json(backend.elicit(request), request.classes);
    return "Let me think this through.\n```json\n" + answer.dump() + "\n```";
  };
}

}  // namespace frc::testing

#endif  // FRC_TESTS_TESTING_STUB_SERVER_H_
