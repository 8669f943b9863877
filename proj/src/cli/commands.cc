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

#include "frc/cli/commands.h"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "frc/backends/lexicon_backend.h"
#include "frc/eval/metrics.h"
#include "frc/eval/report.h"
#include "frc/eval/stability.h"
#include "frc/perturb/perturb.h"
#include "frc/pipeline/batch.h"
#include "frc/pipeline/knowledge.h"
#include "frc/pipeline/pipeline.h"

namespace frc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// What a method says about one text.
struct Scored {
  std::optional<std::vector<double>> values;  // FRC memberships, CoT probs
  std::string label;
};

RunOptions options_for(const Backend& backend) {
  return {backend.deterministic() ? ClockKind::kLogical : ClockKind::kWall};
}

int workers_for(const RunConfig& config) {
  return std::max(1, config.http.concurrency_limit);
}

json run_method(const std::string& method, const std::string& id,
                const std::string& text, const ClassSet& classes,
                Backend& backend,
                std::shared_ptr<const KnowledgeBundle> injected = nullptr) {
  RunOptions options = options_for(backend);
  if (method == "frc") {
    FrcTrace t = run_frc(text, classes, backend, std::move(injected), options);
    t.id = id;
    return to_json(t);
  }
  if (method == "cot") {
    CotTrace t = run_cot(text, classes, backend, options);
    t.id = id;
    return to_json(t);
  }
  DpResult r = run_dp(text, classes, backend, options);
  r.id = id;
  return to_json(r);
}

Scored score_of(const json& trace, const ClassSet& classes,
                double threshold) {
  Scored s;
  const std::string method = trace.at("method").get<std::string>();
  if (method == "dp") {
    s.label = trace.at("label").get<std::string>();
    return s;
  }
  s.values = memberships_from_json(
      classes, trace.at(method == "frc" ? "fused" : "probabilities"));
  try {
    s.label = classify_and_split(*s.values, classes, threshold).label;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kWrongClassCount) throw;
    auto polar = classes.polar_indices();
    std::size_t best = polar.front();
    for (std::size_t c : polar) {
      if ((*s.values)[c] > (*s.values)[best]) best = c;
    }
    s.label = classes.name(best);
  }
  return s;
}

std::optional<Bucket> bucket_of(const Scored& s, const ClassSet& classes,
                                double threshold) {
  if (!s.values) return std::nullopt;
  try {
    return classify_and_split(*s.values, classes, threshold).bucket;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kWrongClassCount) throw;
    return std::nullopt;
  }
}

std::string read_bytes(const fs::path& path) {
  if (path.empty()) return "";
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void prepare_out(const RunConfig& config) {
  fs::create_directories(config.out);
  save_config(config, config.out / "config.snapshot.ini");
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << content;
}

std::vector<DatasetRecord> require_dataset(const RunConfig& config) {
  if (config.dataset.empty()) {
    throw Error(ErrorCode::kConfigError, "no dataset configured");
  }
  return read_dataset(config.dataset);
}

std::string level_name(PerturbKind kind) {
  switch (kind) {
    case PerturbKind::kRobustLow:
      return "low";
    case PerturbKind::kRobustMedium:
      return "medium";
    case PerturbKind::kRobustHigh:
      return "high";
    case PerturbKind::kMonotonic:
      break;
  }
  return "";
}

// Traces per method keyed by input text.
using TraceCache = std::map<std::string, std::map<std::string, json>>;

// Runs `method` on every text the cache lacks. Returns failure count.
std::size_t fill_cache(TraceCache& cache, const std::string& method,
                       const std::vector<std::string>& texts,
                       const ClassSet& classes, Backend& backend,
                       int workers) {
  std::vector<std::string> missing;
  for (const auto& t : texts) {
    if (!cache[method].contains(t)) missing.push_back(t);
  }
  auto results = run_batch<json>(missing.size(), workers, [&](std::size_t i) {
    return run_method(method, "", missing[i], classes, backend);
  });
  std::size_t failures = 0;
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (auto* trace = std::get_if<json>(&results[i])) {
      cache[method][missing[i]] = std::move(*trace);
    } else {
      ++failures;
      spdlog::error("{} failed on '{}': {}", method, missing[i],
                    std::get<std::string>(results[i]));
    }
  }
  return failures;
}

std::unique_ptr<Generator> make_generator(const RunConfig& config) {
  if (config.generator == "llm") {
    BackendConfig http = config.http;
    http.apply_environment();
    return std::make_unique<LlmGenerator>(http);
  }
  if (config.lexicon.empty() || config.synonyms.empty()) {
    throw Error(ErrorCode::kConfigError,
                "the deterministic generator needs a lexicon and a synonym "
                "table");
  }
  return std::make_unique<DeterministicGenerator>(
      Lexicon::Load(config.lexicon), SynonymTable::Load(config.synonyms));
}

std::vector<int> labels_in_order(const PerturbedRecord& r,
                                 const ClassSet& classes) {
  if (!r.shift_labels) {
    throw Error(ErrorCode::kMissingShiftLabels, "record " + r.id);
  }
  std::vector<int> out;
  for (const auto& name : classes.names()) {
    auto it = r.shift_labels->find(name);
    if (it == r.shift_labels->end()) {
      throw Error(ErrorCode::kMissingShiftLabels,
                  "record " + r.id + " has no label for " + name);
    }
    out.push_back(it->second);
  }
  return out;
}

void emit_report(const EvalReport& report, const fs::path& out,
                 const std::string& stem) {
  write_text(out / (stem + ".json"), to_json(report).dump(2) + "\n");
  std::string table = render_table(report);
  write_text(out / (stem + ".txt"), table);
  std::cout << table;
}

}  // namespace

std::unique_ptr<Backend> make_backend(const RunConfig& config) {
  if (config.backend == "lexicon") {
    return std::make_unique<LexiconBackend>(Lexicon::Load(config.lexicon));
  }
  BackendConfig http = config.http;
  http.apply_environment();
  http.validate();
  return std::make_unique<HttpBackend>(http);
}

int cmd_analyze(const RunConfig& config, const std::optional<std::string>& text) {
  const ClassSet classes = config.classes();
  std::vector<DatasetRecord> records;
  if (text) {
    records.push_back({"text", *text, std::nullopt, "en"});
  } else {
    records = require_dataset(config);
  }
  auto backend = make_backend(config);
  prepare_out(config);
  std::size_t failures = 0;
  for (const auto& method : config.methods) {
    auto results =
        run_batch<json>(records.size(), workers_for(config), [&](std::size_t i) {
          return run_method(method, records[i].id, records[i].text, classes,
                            *backend);
        });
    std::vector<json> traces;
    std::vector<json> labels;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (auto* trace = std::get_if<json>(&results[i])) {
        Scored s = score_of(*trace, classes, config.threshold);
        auto bucket = bucket_of(s, classes, config.threshold);
        labels.push_back(
            {{"id", records[i].id},
             {"method", method},
             {"label", s.label},
             {"bucket", bucket ? json(bucket_name(*bucket)) : json(nullptr)},
             {"gold", records[i].label ? json(*records[i].label)
                                       : json(nullptr)}});
        if (text) std::cout << trace->dump() << "\n";
        traces.push_back(std::move(*trace));
      } else {
        ++failures;
        spdlog::error("record {} ({}): {}", records[i].id, method,
                      std::get<std::string>(results[i]));
      }
    }
    write_jsonl(traces, config.out / ("traces_" + method + ".jsonl"));
    write_jsonl(labels, config.out / ("labels_" + method + ".jsonl"));
    spdlog::info("{}: {} of {} records analyzed", method, traces.size(),
                 records.size());
  }
  return failures == 0 ? kExitOk : kExitPartial;
}

int cmd_perturb(const RunConfig& config) {
  const ClassSet classes = config.classes();
  auto dataset = require_dataset(config);
  std::vector<PerturbKind> kinds;
  for (const auto& k : config.kinds) kinds.push_back(parse_perturb_kind(k));
  auto generator = make_generator(config);
  prepare_out(config);
  PerturbOutcome outcome = perturb_dataset(dataset, classes, kinds, *generator,
                                           config.seed, workers_for(config));
  for (const auto& f : outcome.failures) {
    spdlog::error("record {} ({}): {}", f.source_id, perturb_kind_name(f.kind),
                  f.message);
  }
  write_perturbed(outcome.records, config.out / "perturbed.jsonl");
  spdlog::info("{} perturbed records written, {} failed",
               outcome.records.size(), outcome.failures.size());
  return outcome.failures.empty() ? kExitOk : kExitPartial;
}

int cmd_evaluate(const RunConfig& config, const std::vector<fs::path>& traces) {
  const ClassSet classes = config.classes();
  std::vector<DatasetRecord> dataset;
  if (!config.dataset.empty()) dataset = read_dataset(config.dataset);
  std::vector<PerturbedRecord> perturbed;
  if (!config.perturbed.empty()) perturbed = read_perturbed(config.perturbed);
  if (dataset.empty() && perturbed.empty()) {
    throw Error(ErrorCode::kConfigError,
                "evaluate needs a dataset or a perturbed set");
  }

  TraceCache cache;
  for (const auto& path : traces) {
    for (auto& line : read_jsonl(path)) {
      std::string method = line.value("method", "");
      std::string input = line.value("input_text", "");
      cache[method].emplace(input, std::move(line));
    }
  }
  std::vector<std::string> texts;
  for (const auto& r : dataset) texts.push_back(r.text);
  for (const auto& r : perturbed) {
    texts.push_back(r.original_text);
    texts.push_back(r.perturbed_text);
  }

  std::unique_ptr<Backend> backend;
  std::map<std::string, std::size_t> failures;
  for (const auto& method : config.methods) {
    bool covered = std::all_of(texts.begin(), texts.end(), [&](auto& t) {
      return cache[method].contains(t);
    });
    if (covered) continue;
    if (!backend) backend = make_backend(config);
    failures[method] = fill_cache(cache, method, texts, classes, *backend,
                                  workers_for(config));
  }
  // A method's scores, or nullopt when it failed on the text.
  auto scored = [&](const std::string& method,
                    const std::string& text) -> std::optional<Scored> {
    auto it = cache[method].find(text);
    if (it == cache[method].end()) return std::nullopt;
    return score_of(it->second, classes, config.threshold);
  };
  const bool frc_partition =
      std::find(config.methods.begin(), config.methods.end(), "frc") !=
      config.methods.end();

  prepare_out(config);
  EvalReport report;
  report.dataset_fingerprint = fnv1a_hex(read_bytes(config.dataset) +
                                         read_bytes(config.perturbed));
  report.config_snapshot = config_summary(config);
  report.threshold = config.threshold;
  std::size_t total_failures = 0;
  for (const auto& method : config.methods) {
    std::map<std::string, std::vector<EvalPair>> robust;
    std::vector<TextPair> low_texts;
    std::vector<EvalPair> monotonic;
    for (const auto& r : perturbed) {
      auto a = scored(method, r.original_text);
      auto b = scored(method, r.perturbed_text);
      if (!a || !b || !a->values || !b->values) continue;
      EvalPair pair{*a->values, *b->values, std::nullopt};
      if (r.kind == PerturbKind::kMonotonic) {
        pair.shift_labels = labels_in_order(r, classes);
        monotonic.push_back(std::move(pair));
      } else {
        if (r.kind == PerturbKind::kRobustLow) {
          low_texts.push_back({r.original_text, r.perturbed_text, pair});
        }
        robust[level_name(r.kind)].push_back(std::move(pair));
      }
    }
    std::vector<ScoredRecord> records;
    for (const auto& r : dataset) {
      auto s = scored(method, r.text);
      if (!s) continue;
      std::optional<Bucket> bucket;
      if (frc_partition) {
        if (auto f = scored("frc", r.text)) {
          bucket = bucket_of(*f, classes, config.threshold);
        }
      } else {
        bucket = bucket_of(*s, classes, config.threshold);
      }
      records.push_back({r.label, s->label, bucket});
    }
    MethodReport row =
        summarize_method(method, classes, robust, monotonic, records);
    if (!low_texts.empty()) {
      try {
        row.k_hat_low = estimate_stability(low_texts).k_hat;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kZeroDistancePairOnly) throw;
      }
    }
    row.failures = failures[method];
    total_failures += row.failures;
    report.methods.push_back(std::move(row));
  }
  emit_report(report, config.out, "report");
  return total_failures == 0 ? kExitOk : kExitPartial;
}

int cmd_transfer(const RunConfig& config) {
  const ClassSet classes = config.classes();
  auto dataset = require_dataset(config);
  std::vector<FrcTrace> teacher;
  if (!config.teacher_traces.empty()) {
    for (const auto& line : read_jsonl(config.teacher_traces)) {
      if (line.value("method", "") == "frc") {
        teacher.push_back(frc_trace_from_json(line));
      }
    }
  }
  std::vector<std::pair<std::string, std::shared_ptr<const KnowledgeBundle>>>
      configurations{{"none", nullptr}};
  if (teacher.empty()) {
    spdlog::warn("no teacher traces; only the baseline configuration runs");
  } else {
    KnowledgeBundle bundle = extract_knowledge(teacher);
    configurations.emplace_back(
        "keyword",
        std::make_shared<const KnowledgeBundle>(bundle.keywords_only()));
    configurations.emplace_back(
        "subunit",
        std::make_shared<const KnowledgeBundle>(bundle.subunits_only()));
    configurations.emplace_back(
        "keyword+subunit", std::make_shared<const KnowledgeBundle>(bundle));
    prepare_out(config);
    save_bundle(bundle, config.out / "knowledge_bundle.json");
  }
  auto backend = make_backend(config);
  prepare_out(config);

  EvalReport report;
  report.dataset_fingerprint = fnv1a_hex(read_bytes(config.dataset) +
                                         read_bytes(config.teacher_traces));
  report.config_snapshot = config_summary(config);
  report.threshold = config.threshold;
  std::size_t total_failures = 0;
  for (const auto& [name, bundle] : configurations) {
    auto results = run_batch<json>(
        dataset.size(), workers_for(config), [&](std::size_t i) {
          return run_method("frc", dataset[i].id, dataset[i].text, classes,
                            *backend, bundle);
        });
    std::vector<json> traces;
    std::vector<ScoredRecord> records;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (auto* trace = std::get_if<json>(&results[i])) {
        Scored s = score_of(*trace, classes, config.threshold);
        records.push_back({dataset[i].label, s.label,
                           bucket_of(s, classes, config.threshold)});
        traces.push_back(std::move(*trace));
      } else {
        ++failures;
        spdlog::error("record {} ({}): {}", dataset[i].id, name,
                      std::get<std::string>(results[i]));
      }
    }
    std::string stem = name;
    std::replace(stem.begin(), stem.end(), '+', '_');
    write_jsonl(traces, config.out / ("traces_transfer_" + stem + ".jsonl"));
    MethodReport row = summarize_method("frc/" + name, classes, {}, {}, records);
    row.failures = failures;
    total_failures += failures;
    report.methods.push_back(std::move(row));
  }
  emit_report(report, config.out, "transfer_report");
  return total_failures == 0 ? kExitOk : kExitPartial;
}

int run_cli(int argc, const char* const* argv) {
  // stdout carries traces and tables; diagnostics go to stderr.
  if (!spdlog::get("frc")) {
    spdlog::set_default_logger(spdlog::stderr_color_mt("frc"));
  }
  CLI::App app{"Fuzzy reasoning chain engine and evaluation harness", "frc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> backend, out, threshold_text, lexicon, dataset,
      perturbed, synonyms, teacher, generator, endpoint, model, text;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> methods, kinds, trace_files;

  app.add_option("--config", config_path, "INI run configuration");
  app.add_option("--backend", backend, "http or lexicon");
  app.add_option("--method", methods, "frc, cot, dp (comma separated)")
      ->delimiter(',');
  app.add_option("--out", out, "output directory");
  app.add_option("--seed", seed, "seed for artifact-side randomness");
  app.add_option("--threshold", threshold_text, "ambiguity threshold");
  app.add_option("--lexicon", lexicon, "lexicon JSON for the oracle");
  app.add_option("--dataset", dataset, "JSONL dataset");
  app.add_option("--perturbed", perturbed, "JSONL perturbed set");
  app.add_option("--synonyms", synonyms, "synonym table JSON");
  app.add_option("--teacher-traces", teacher, "teacher FRC traces (JSONL)");
  app.add_option("--kinds", kinds, "perturbation kinds")->delimiter(',');
  app.add_option("--generator", generator, "deterministic or llm");
  app.add_option("--endpoint", endpoint, "chat completions base URL");
  app.add_option("--model", model, "model name");

  auto* analyze = app.add_subcommand("analyze", "run methods over texts");
  analyze->add_option("--text", text, "analyze one text");
  auto* perturb = app.add_subcommand("perturb", "generate perturbations");
  auto* evaluate = app.add_subcommand("evaluate", "compute RS, MS and F1");
  evaluate->add_option("--traces", trace_files, "trace JSONL files to reuse");
  auto* transfer = app.add_subcommand("transfer", "teacher-to-student runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFatal;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    auto path = [](const std::string& p) {
      return fs::absolute(p).lexically_normal();
    };
    if (backend) config.backend = *backend;
    if (!methods.empty()) config.methods = methods;
    if (out) config.out = path(*out);
    if (seed) config.seed = *seed;
    if (threshold_text) {
      try {
        config.threshold = std::stod(*threshold_text);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kConfigError,
                    "--threshold expects a number, got " + *threshold_text);
      }
    }
    if (lexicon) config.lexicon = path(*lexicon);
    if (dataset) config.dataset = path(*dataset);
    if (perturbed) config.perturbed = path(*perturbed);
    if (synonyms) config.synonyms = path(*synonyms);
    if (teacher) config.teacher_traces = path(*teacher);
    if (!kinds.empty()) config.kinds = kinds;
    if (generator) config.generator = *generator;
    if (endpoint) config.http.endpoint_url = *endpoint;
    if (model) config.http.model_name = *model;
    config.validate();

    if (*analyze) return cmd_analyze(config, text);
    if (*perturb) return cmd_perturb(config);
    if (*evaluate) {
      std::vector<fs::path> files;
      for (const auto& f : trace_files) files.push_back(path(f));
      return cmd_evaluate(config, files);
    }
    if (*transfer) return cmd_transfer(config);
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitFatal;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitFatal;
  }
  return kExitFatal;
}

}  // namespace frc
