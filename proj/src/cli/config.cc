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

#include "frc/cli/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "frc/core/error.h"
#include "frc/text/text.h"

namespace frc {
namespace {

namespace pt = boost::property_tree;
namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string key = text::normalize_key(item);
    if (!key.empty()) out.push_back(key);
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  return text::join(items, ",");
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

template <typename T>
T get(const pt::ptree& tree, const std::string& key, T fallback) {
  if (!tree.get_optional<std::string>(key)) return fallback;
  try {
    // The throwing overload; the defaulted one swallows bad values.
    return tree.get<T>(key);
  } catch (const pt::ptree_error& e) {
    throw Error(ErrorCode::kConfigError, key + ": " + e.what());
  }
}

fs::path resolve(const fs::path& base, const std::string& value) {
  if (value.empty()) return {};
  fs::path p(value);
  return p.is_absolute() ? p.lexically_normal()
                         : (base / p).lexically_normal();
}

void require_file(const fs::path& p, const char* what) {
  if (!p.empty() && !fs::exists(p)) {
    throw Error(ErrorCode::kConfigError,
                std::string(what) + " not found: " + p.string());
  }
}

}  // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
  const auto& x = a.http;
  const auto& y = b.http;
  return a.backend == b.backend && a.lexicon == b.lexicon &&
         x.endpoint_url == y.endpoint_url && x.model_name == y.model_name &&
         x.temperature == y.temperature && x.max_retries == y.max_retries &&
         x.timeout_seconds == y.timeout_seconds &&
         x.concurrency_limit == y.concurrency_limit &&
         x.retry_backoff_ms == y.retry_backoff_ms &&
         a.class_names == b.class_names && a.include_other == b.include_other &&
         a.methods == b.methods && a.seed == b.seed &&
         a.threshold == b.threshold && a.out == b.out &&
         a.dataset == b.dataset && a.perturbed == b.perturbed &&
         a.synonyms == b.synonyms && a.teacher_traces == b.teacher_traces &&
         a.kinds == b.kinds && a.generator == b.generator;
}

void RunConfig::validate() const {
  if (backend != "lexicon" && backend != "http") {
    throw Error(ErrorCode::kConfigError,
                "backend.kind must be lexicon or http, got '" + backend + "'");
  }
  if (backend == "lexicon" && lexicon.empty()) {
    throw Error(ErrorCode::kConfigError,
                "backend.lexicon is required for the lexicon backend");
  }
  http.validate();
  try {
    (void)classes();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  if (methods.empty()) {
    throw Error(ErrorCode::kConfigError, "run.methods is empty");
  }
  for (const auto& m : methods) {
    if (m != "frc" && m != "cot" && m != "dp") {
      throw Error(ErrorCode::kConfigError, "unknown method '" + m + "'");
    }
  }
  if (!(threshold >= 0.0)) {
    throw Error(ErrorCode::kConfigError, "run.threshold must be >= 0");
  }
  for (const auto& k : kinds) {
    if (k != "robust_low" && k != "robust_medium" && k != "robust_high" &&
        k != "monotonic") {
      throw Error(ErrorCode::kConfigError, "unknown perturbation kind '" + k +
                                               "'");
    }
  }
  if (generator != "deterministic" && generator != "llm") {
    throw Error(ErrorCode::kConfigError,
                "perturb.generator must be deterministic or llm");
  }
  require_file(lexicon, "lexicon");
  require_file(dataset, "dataset");
  require_file(perturbed, "perturbed set");
  require_file(synonyms, "synonym table");
  require_file(teacher_traces, "teacher traces");
}

RunConfig load_config(const fs::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  const fs::path base = path.parent_path();
  RunConfig c;
  c.backend = text::normalize_key(get<std::string>(tree, "backend.kind", c.backend));
  c.lexicon = resolve(base, get<std::string>(tree, "backend.lexicon", ""));
  c.http.endpoint_url = get(tree, "backend.endpoint", c.http.endpoint_url);
  c.http.model_name = get(tree, "backend.model", c.http.model_name);
  c.http.temperature = get(tree, "backend.temperature", c.http.temperature);
  c.http.max_retries = get(tree, "backend.max_retries", c.http.max_retries);
  c.http.timeout_seconds = get(tree, "backend.timeout", c.http.timeout_seconds);
  c.http.concurrency_limit =
      get(tree, "backend.concurrency", c.http.concurrency_limit);
  c.http.retry_backoff_ms =
      get(tree, "backend.retry_backoff_ms", c.http.retry_backoff_ms);

  c.class_names = split_list(
      get<std::string>(tree, "classes.names", join_list(c.class_names)));
  c.include_other = get(tree, "classes.include_other", c.include_other);

  c.methods =
      split_list(get<std::string>(tree, "run.methods", join_list(c.methods)));
  c.seed = get(tree, "run.seed", c.seed);
  c.threshold = get(tree, "run.threshold", c.threshold);
  c.out = resolve(base, get<std::string>(tree, "run.out", c.out.string()));

  c.dataset = resolve(base, get<std::string>(tree, "data.dataset", ""));
  c.perturbed = resolve(base, get<std::string>(tree, "data.perturbed", ""));
  c.synonyms = resolve(base, get<std::string>(tree, "data.synonyms", ""));
  c.teacher_traces =
      resolve(base, get<std::string>(tree, "data.teacher_traces", ""));

  c.kinds =
      split_list(get<std::string>(tree, "perturb.kinds", join_list(c.kinds)));
  c.generator = text::normalize_key(
      get<std::string>(tree, "perturb.generator", c.generator));
  return c;
}

std::string config_to_ini(const RunConfig& c) {
  std::ostringstream out;
  out << "[backend]\n"
      << "kind=" << c.backend << "\n"
      << "lexicon=" << c.lexicon.string() << "\n"
      << "endpoint=" << c.http.endpoint_url << "\n"
      << "model=" << c.http.model_name << "\n"
      << "temperature=" << format_double(c.http.temperature) << "\n"
      << "max_retries=" << c.http.max_retries << "\n"
      << "timeout=" << format_double(c.http.timeout_seconds) << "\n"
      << "concurrency=" << c.http.concurrency_limit << "\n"
      << "retry_backoff_ms=" << c.http.retry_backoff_ms << "\n\n"
      << "[classes]\n"
      << "names=" << join_list(c.class_names) << "\n"
      << "include_other=" << (c.include_other ? "true" : "false") << "\n\n"
      << "[run]\n"
      << "methods=" << join_list(c.methods) << "\n"
      << "seed=" << c.seed << "\n"
      << "threshold=" << format_double(c.threshold) << "\n"
      << "out=" << c.out.string() << "\n\n"
      << "[data]\n"
      << "dataset=" << c.dataset.string() << "\n"
      << "perturbed=" << c.perturbed.string() << "\n"
      << "synonyms=" << c.synonyms.string() << "\n"
      << "teacher_traces=" << c.teacher_traces.string() << "\n\n"
      << "[perturb]\n"
      << "kinds=" << join_list(c.kinds) << "\n"
      << "generator=" << c.generator << "\n";
  return out.str();
}

void save_config(const RunConfig& config, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << config_to_ini(config);
}

nlohmann::json config_summary(const RunConfig& c) {
  auto name = [](const fs::path& p) { return p.filename().string(); };
  nlohmann::json j = {{"backend", c.backend},
                      {"classes", c.class_names},
                      {"include_other", c.include_other},
                      {"methods", c.methods},
                      {"seed", c.seed},
                      {"threshold", c.threshold},
                      {"dataset", name(c.dataset)},
                      {"perturbed", name(c.perturbed)},
                      {"kinds", c.kinds},
                      {"generator", c.generator}};
  if (c.backend == "lexicon") {
    j["lexicon"] = name(c.lexicon);
  } else {
    j["model"] = c.http.model_name;
    j["temperature"] = c.http.temperature;
  }
  return j;
}

}  // namespace frc
