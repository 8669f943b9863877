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

#include "frc/backends/http_backend.h"

#include <chrono>
#include <cstdlib>
#include <regex>
#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "frc/backends/prompts.h"
#include "frc/backends/response_parser.h"

namespace frc {
namespace {

// Releases a semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<kMaxConcurrency>& sem)
      : sem_(sem) {
    sem_.acquire();
  }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<kMaxConcurrency>& sem_;
};

bool retryable_status(int status) { return status == 429 || status >= 500; }

}  // namespace

void BackendConfig::validate() const {
  if (endpoint_url.empty()) {
    throw Error(ErrorCode::kConfigError, "endpoint_url is empty");
  }
  if (!(temperature >= 0.0)) {
    throw Error(ErrorCode::kConfigError, "temperature must be >= 0");
  }
  if (max_retries < 1 || max_retries > 20) {
    throw Error(ErrorCode::kConfigError, "max_retries must be in [1,20]");
  }
  if (!(timeout_seconds > 0.0)) {
    throw Error(ErrorCode::kConfigError, "timeout must be positive");
  }
  if (concurrency_limit < 1 || concurrency_limit > kMaxConcurrency) {
    throw Error(ErrorCode::kConfigError,
                "concurrency_limit must be in [1," +
                    std::to_string(kMaxConcurrency) + "]");
  }
  if (retry_backoff_ms < 0) {
    throw Error(ErrorCode::kConfigError, "retry_backoff_ms must be >= 0");
  }
}

void BackendConfig::apply_environment() {
  if (const char* key = std::getenv("FRC_API_KEY"); key && *key) {
    api_key = key;
  }
  if (const char* url = std::getenv("FRC_ENDPOINT"); url && *url) {
    endpoint_url = url;
  }
}

ChatClient::ChatClient(BackendConfig config)
    : config_(std::move(config)), in_flight_(config_.concurrency_limit) {
  config_.validate();
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch match;
  if (!std::regex_match(config_.endpoint_url, match, kUrl)) {
    throw Error(ErrorCode::kConfigError,
                "endpoint_url is not an http(s) URL: " + config_.endpoint_url);
  }
  origin_ = match[1].str();
  std::string base = match[2].matched ? match[2].str() : "";
  while (!base.empty() && base.back() == '/') base.pop_back();
  path_ = base + "/v1/chat/completions";
}

ChatClient::~ChatClient() = default;

nlohmann::json ChatClient::request_body(
    const std::vector<ChatMessage>& messages) const {
  nlohmann::json body;
  body["model"] = config_.model_name;
  body["temperature"] = config_.temperature;
  body["messages"] = nlohmann::json::array();
  for (const auto& m : messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  return body;
}

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) {
  const std::string body = request_body(messages).dump();
  SlotGuard slot(in_flight_);

  const auto timeout = std::chrono::duration<double>(config_.timeout_seconds);
  const auto timeout_us =
      std::chrono::duration_cast<std::chrono::microseconds>(timeout);
  std::string last_error;
  int backoff_ms = config_.retry_backoff_ms;
  for (int attempt = 1; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    httplib::Client client(origin_);
    client.set_connection_timeout(timeout_us);
    client.set_read_timeout(timeout_us);
    client.set_write_timeout(timeout_us);
    if (!config_.api_key.empty()) client.set_bearer_token_auth(config_.api_key);

    auto result = client.Post(path_, body, "application/json");
    ++attempts_;
    if (!result) {
      last_error = httplib::to_string(result.error());
      spdlog::warn("chat request attempt {}/{} failed: {}", attempt,
                   config_.max_retries, last_error);
      continue;
    }
    if (retryable_status(result->status)) {
      last_error = "HTTP " + std::to_string(result->status);
      spdlog::warn("chat request attempt {}/{} failed: {}", attempt,
                   config_.max_retries, last_error);
      continue;
    }
    if (result->status != 200) {
      throw Error(ErrorCode::kTransportError,
                  "HTTP " + std::to_string(result->status) + ": " +
                      result->body.substr(0, 200));
    }
    nlohmann::json reply = nlohmann::json::parse(result->body, nullptr,
                                                 /*allow_exceptions=*/false);
    try {
      if (!reply.is_discarded()) {
        const auto& content =
            reply.at("choices").at(0).at("message").at("content");
        if (content.is_string()) return content.get<std::string>();
      }
    } catch (const nlohmann::json::exception&) {
    }
    throw Error(ErrorCode::kTransportError,
                "server reply has no choices[0].message.content");
  }
  throw Error(ErrorCode::kTransportError,
              "giving up after " + std::to_string(config_.max_retries) +
                  " attempts: " + last_error);
}

HttpBackend::HttpBackend(BackendConfig config) : client_(std::move(config)) {}

std::string HttpBackend::id() const {
  return "http:" + client_.config().model_name;
}

ElicitationResponse HttpBackend::elicit(const ElicitationRequest& request) {
  RenderedPrompt prompt = render_prompt(request);
  std::vector<ChatMessage> messages{{"system", prompt.system},
                                    {"user", prompt.user}};
  std::string reply = client_.complete(messages);
  try {
    return parse_response(request, reply);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kMalformedResponse) throw;
    spdlog::warn("unparsable {} reply, reprompting: {}",
                 kind_name(request.kind), e.what());
  }
  ++reprompts_;
  messages.push_back({"assistant", reply});
  messages.push_back({"user", reprompt_message(request.kind)});
  return parse_response(request, client_.complete(messages));
}

}  // namespace frc
