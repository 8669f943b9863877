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

#ifndef FRC_BACKENDS_HTTP_BACKEND_H_
#define FRC_BACKENDS_HTTP_BACKEND_H_

#include <atomic>
#include <memory>
#include <semaphore>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frc/backends/backend.h"

namespace frc {

inline constexpr int kMaxConcurrency = 256;

struct BackendConfig {
  std::string endpoint_url = "http://127.0.0.1:8000";
  std::string model_name = "default";
  double temperature = 0.0;
  int max_retries = 3;  // transport attempts per request
  double timeout_seconds = 60.0;
  int concurrency_limit = 4;
  int retry_backoff_ms = 200;  // doubled after each failed attempt
  std::string api_key;         // sent as a bearer token when non-empty

  // Throws ConfigError on out-of-range fields.
  void validate() const;
  // Fills api_key from FRC_API_KEY and endpoint_url from FRC_ENDPOINT.
  void apply_environment();
};

struct ChatMessage {
  std::string role;
  std::string content;
};

// Client for OpenAI-compatible servers:
// POST {endpoint_url}/v1/chat/completions, reply in
// choices[0].message.content.
class ChatClient {
 public:
  explicit ChatClient(BackendConfig config);
  ~ChatClient();

  // Sends one completion, retrying transport failures (connection errors,
  // timeouts, 5xx and 429) up to max_retries attempts in total.
  // Throws TransportError when every attempt fails or the server answers
  // with an unusable body.
  std::string complete(const std::vector<ChatMessage>& messages);

  nlohmann::json request_body(const std::vector<ChatMessage>& messages) const;

  const BackendConfig& config() const { return config_; }
  // Completed HTTP exchanges, successful or not.
  long transport_attempts() const { return attempts_.load(); }

 private:
  BackendConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // base path + /v1/chat/completions
  std::counting_semaphore<kMaxConcurrency> in_flight_;
  std::atomic<long> attempts_{0};
};

// Backend that renders prompts, sends them through a ChatClient and parses
// the reply. A reply that cannot be parsed earns exactly one reprompt; a
// second failure is surfaced as MalformedResponse.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(BackendConfig config);

  std::string id() const override;
  bool deterministic() const override { return false; }
  ElicitationResponse elicit(const ElicitationRequest& request) override;

  ChatClient& client() { return client_; }
  long reprompts() const { return reprompts_.load(); }

 private:
  ChatClient client_;
  std::atomic<long> reprompts_{0};
};

}  // namespace frc

#endif  // FRC_BACKENDS_HTTP_BACKEND_H_
