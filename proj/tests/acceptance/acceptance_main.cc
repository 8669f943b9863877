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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "frc/backends/http_backend.h"
#include "frc/backends/lexicon_backend.h"
#include "frc/cli/commands.h"
#include "frc/core/fuzzy.h"
#include "frc/eval/metrics.h"
#include "frc/eval/report.h"
#include "frc/eval/stability.h"
#include "frc/perturb/generator.h"
#include "frc/perturb/perturb.h"
#include "frc/pipeline/knowledge.h"
#include "frc/pipeline/pipeline.h"
#include "testing/fixtures.h"
#include "testing/property.h"
#include "testing/stub_server.h"

namespace frc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string data(const std::string& name) {
  return std::string(FRC_DATA_DIR) + "/" + name;
}

std::string fmt(const char* format, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "frc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

Lexicon curated_lexicon() { return Lexicon::Load(data("lexicon_en.json")); }

DeterministicGenerator curated_generator() {
  return DeterministicGenerator(curated_lexicon(),
                                SynonymTable::Load(data("synonyms_en.json")));
}

std::vector<double> fused_of(std::string_view text, Backend& backend) {
  auto m = run_frc(text, ClassSet::Binary(), backend).fused;
  return {m.begin(), m.end()};
}

// Robust pairs per level on the curated corpus, scored by the FRC oracle.
std::map<RobustLevel, std::vector<TextPair>> robust_pairs(std::uint64_t seed) {
  auto dataset = read_dataset(data("corpus_robust.jsonl"));
  auto gen = curated_generator();
  LexiconBackend oracle(curated_lexicon());
  auto outcome = perturb_dataset(
      dataset, ClassSet::Binary(),
      {PerturbKind::kRobustLow, PerturbKind::kRobustMedium,
       PerturbKind::kRobustHigh},
      gen, seed);
  if (!outcome.failures.empty()) {
    throw Error(ErrorCode::kGenerationFailed,
                std::to_string(outcome.failures.size()) +
                    " robust perturbations failed");
  }
  std::map<RobustLevel, std::vector<TextPair>> out;
  for (const auto& r : outcome.records) {
    RobustLevel level = r.kind == PerturbKind::kRobustLow ? RobustLevel::kLow
                        : r.kind == PerturbKind::kRobustMedium
                            ? RobustLevel::kMedium
                            : RobustLevel::kHigh;
    out[level].push_back({r.original_text, r.perturbed_text,
                          EvalPair{fused_of(r.original_text, oracle),
                                   fused_of(r.perturbed_text, oracle)}});
  }
  return out;
}

double class_averaged_rs(const std::vector<TextPair>& pairs) {
  std::vector<EvalPair> scores;
  for (const auto& p : pairs) scores.push_back(p.scores);
  return (robustness_score(scores, 0) + robustness_score(scores, 1)) / 2.0;
}

// 1. Fusion oracle equivalence.
Outcome fusion_oracle() {
  auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    testing::Gen g(7000 + i);
    std::size_t n = g.between(2, 4);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < n; ++c) names.push_back("c" + std::to_string(c));
    ClassSet classes(names);
    std::size_t m = g.between(1, 6);
    std::vector<std::vector<std::vector<double>>> raw_keywords(m);
    std::vector<SubUnit> units;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Keyword> keywords;
      for (std::size_t k = 0, count = g.between(0, 5); k < count; ++k) {
        auto degrees = g.degrees(n);
        raw_keywords[j].push_back(degrees);
        keywords.push_back({"k", MembershipVector(degrees)});
      }
      units.push_back(make_subunit("u", keywords, classes));
    }
    std::vector<std::vector<double>> raw_weights;
    for (std::size_t c = 0; c < n; ++c) raw_weights.push_back(g.raw_weights(m));
    auto fused = fuse_global(units, normalize_weights(raw_weights, classes));

    for (std::size_t c = 0; c < n; ++c) {
      long double total = 0.0L;
      for (std::size_t j = 0; j < m; ++j) total += raw_weights[c][j];
      long double want = 0.0L;
      for (std::size_t j = 0; j < m; ++j) {
        long double local = 0.0L;
        for (const auto& k : raw_keywords[j]) {
          local = std::max<long double>(local, k[c]);
        }
        want += raw_weights[c][j] / total * local;
      }
      worst = std::max(worst, static_cast<double>(std::fabs(fused[c] - want)));
    }
  }
  double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 1.0,
          fmt("1000 instances, max |err| %.3g (tol 1e-9), %.3f s (limit 1 s)",
              worst, elapsed)};
}

// 2. Metric exactness on hand-built fixtures.
Outcome metric_exactness() {
  double err = 0.0;
  auto rs = testing::rs_fixture();
  err = std::max(err, std::fabs(robustness_score(rs, 0) - testing::kRsFixtureClass0));
  err = std::max(err, std::fabs(robustness_score(rs, 1) - testing::kRsFixtureClass1));
  auto ms = testing::ms_fixture();
  err = std::max(err, std::fabs(monotonicity_score(ms, 0) - testing::kMsFixtureClass0));
  err = std::max(err, std::fabs(monotonicity_score(ms, 1) - testing::kMsFixtureClass1));
  auto f1 = testing::f1_fixture();
  err = std::max(err, std::fabs(f1_score(f1.predictions, f1.gold) - testing::kF1Fixture));

  std::vector<EvalPair> unperturbed;
  std::vector<EvalPair> all_correct;
  for (const auto& p : rs) {
    unperturbed.push_back({p.original, p.original});
    std::vector<int> labels;
    std::vector<double> moved = p.original;
    for (std::size_t c = 0; c < moved.size(); ++c) {
      int y = moved[c] < 0.5 ? 1 : -1;
      moved[c] += 0.25 * y;
      labels.push_back(y);
    }
    all_correct.push_back({p.original, moved, labels});
  }
  double identity = std::fabs(robustness_score(unperturbed, 0) - 1.0) +
                    std::fabs(monotonicity_score(all_correct, 0) - 1.0) +
                    std::fabs(monotonicity_score(all_correct, 1) - 1.0);
  return {err <= 1e-12 && identity == 0.0,
          fmt("RS/MS/F1 fixtures (10/12/30 records) max |err| %.3g (tol "
              "1e-12); identity cases exact: ",
              err) +
              (identity == 0.0 ? "yes" : "no")};
}

// 3. Offline MS = 1.0 on the monotonic corpus.
Outcome offline_ms() {
  auto start = Clock::now();
  auto dataset = read_dataset(data("corpus_monotonic.jsonl"));
  auto gen = curated_generator();
  LexiconBackend oracle(curated_lexicon());
  auto outcome = perturb_dataset(dataset, ClassSet::Binary(),
                                 {PerturbKind::kMonotonic}, gen, 7);
  const ClassSet classes = ClassSet::Binary();
  std::vector<EvalPair> pairs;
  for (const auto& r : outcome.records) {
    std::vector<int> labels;
    for (const auto& name : classes.names()) {
      labels.push_back(r.shift_labels->at(name));
    }
    pairs.push_back({fused_of(r.original_text, oracle),
                     fused_of(r.perturbed_text, oracle), labels});
  }
  double ms0 = monotonicity_score(pairs, 0);
  double ms1 = monotonicity_score(pairs, 1);
  double elapsed = seconds_since(start);
  bool pass = outcome.failures.empty() && pairs.size() == dataset.size() &&
              ms0 == 1.0 && ms1 == 1.0 && elapsed < 5.0;
  return {pass, std::to_string(pairs.size()) + "/" +
                    std::to_string(dataset.size()) + " records, " +
                    fmt("MS positive %.6f, negative %.6f (target 1.0 exact), "
                        "%.2f s (limit 5 s)",
                        ms0, ms1, elapsed)};
}

// 4. RS decreases with perturbation level.
Outcome rs_ordering() {
  auto pairs = robust_pairs(7);
  double low = class_averaged_rs(pairs[RobustLevel::kLow]);
  double medium = class_averaged_rs(pairs[RobustLevel::kMedium]);
  double high = class_averaged_rs(pairs[RobustLevel::kHigh]);
  bool pass = low - medium >= 0.01 && medium - high >= 0.01;
  return {pass, fmt("RS low %.4f > medium %.4f > high %.4f, margins %.4f / ",
                    low, medium, high, low - medium) +
                    fmt("%.4f (need >= 0.01)", medium - high)};
}

// 5. FRC keeps both classes high on conflicts; CoT sits near (0.5, 0.5).
Outcome conflict_contrast() {
  auto dataset = read_dataset(data("corpus_conflict.jsonl"));
  LexiconBackend oracle(curated_lexicon());
  double frc_min = 1.0;
  double cot_drift = 0.0;
  for (const auto& r : dataset) {
    auto fused = run_frc(r.text, ClassSet::Binary(), oracle).fused;
    frc_min = std::min({frc_min, fused[0], fused[1]});
    auto cot = run_cot(r.text, ClassSet::Binary(), oracle);
    for (double p : cot.probabilities) {
      cot_drift = std::max(cot_drift, std::fabs(p - 0.5));
    }
  }
  return {frc_min > 0.7 && cot_drift <= 0.05,
          std::to_string(dataset.size()) + " conflict texts, " +
              fmt("min FRC membership %.4f (need > 0.7), max CoT |p - 0.5| "
                  "%.4f (need <= 0.05)",
                  frc_min, cot_drift)};
}

// 6. Clear/ambiguous rule on the boundary fixture.
Outcome split_rule() {
  auto cases = testing::split_fixture();
  std::size_t ok = 0;
  bool boundary_ambiguous = true;
  for (const auto& c : cases) {
    std::vector<double> scores{c.positive, c.negative};
    auto split = classify_and_split(scores, ClassSet::Binary());
    ok += split.label == c.label && split.bucket == c.bucket;
    if (std::fabs(std::fabs(c.positive - c.negative) - 0.3) < 1e-9) {
      boundary_ambiguous = boundary_ambiguous && split.bucket == Bucket::kAmbiguous;
    }
  }
  return {ok == cases.size() && boundary_ambiguous,
          std::to_string(ok) + "/" + std::to_string(cases.size()) +
              " cases over diff {0, 0.299, 0.3, 0.301, 0.8}; diff = 0.3 "
              "ambiguous: " +
              (boundary_ambiguous ? "yes" : "no")};
}

// 7. Transfer configurations, baseline identity and F1 ordering.
Outcome transfer_plumbing(const fs::path& work) {
  fs::path dir = work / "transfer";
  std::string corpus = data("corpus_transfer.jsonl");
  if (cli({"analyze", "--lexicon", data("lexicon_en.json"), "--dataset", corpus,
           "--out", (dir / "teacher").string()}) != kExitOk ||
      cli({"analyze", "--lexicon", data("lexicon_student_en.json"), "--dataset",
           corpus, "--out", (dir / "student").string()}) != kExitOk ||
      cli({"transfer", "--lexicon", data("lexicon_student_en.json"),
           "--dataset", corpus, "--teacher-traces",
           (dir / "teacher/traces_frc.jsonl").string(), "--out",
           (dir / "out").string()}) != kExitOk) {
    return {false, "a CLI run failed"};
  }
  auto report = json::parse(slurp(dir / "out/transfer_report.json"));
  std::map<std::string, double> f1;
  for (const auto& row : report.at("methods")) {
    f1[row.at("method").get<std::string>()] = row.at("f1_avg").get<double>();
  }
  bool four = f1.size() == 4 && f1.count("frc/none") && f1.count("frc/keyword") &&
              f1.count("frc/subunit") && f1.count("frc/keyword+subunit");

  // The no-bundle row reproduces plain FRC byte for byte, and so does an
  // explicitly empty bundle.
  bool baseline_identical =
      slurp(dir / "out/traces_transfer_none.jsonl") ==
      slurp(dir / "student/traces_frc.jsonl");
  LexiconBackend student(Lexicon::Load(data("lexicon_student_en.json")));
  auto empty = std::make_shared<const KnowledgeBundle>();
  for (const auto& r : read_dataset(corpus)) {
    RunOptions logical{ClockKind::kLogical};
    baseline_identical =
        baseline_identical &&
        to_json(run_frc(r.text, ClassSet::Binary(), student, nullptr, logical))
                .dump() ==
            to_json(run_frc(r.text, ClassSet::Binary(), student, empty, logical))
                .dump();
  }
  if (!four) return {false, "expected four configurations"};
  double none = f1["frc/none"];
  double keyword = f1["frc/keyword"];
  double both = f1["frc/keyword+subunit"];
  bool pass = baseline_identical && both >= keyword && keyword >= none;
  return {pass, fmt("F1 keyword+subunit %.4f >= keyword %.4f >= none %.4f "
                    "(subunit %.4f); ",
                    both, keyword, none, f1["frc/subunit"]) +
                    "empty bundle byte-identical to baseline: " +
                    (baseline_identical ? "yes" : "no")};
}

// 8. Stability bound and linear scaling.
Outcome stability_bound() {
  auto pairs = robust_pairs(7)[RobustLevel::kLow];
  auto estimate = estimate_stability(pairs);
  std::vector<EvalPair> halved;
  std::vector<double> distances;
  for (const auto& p : pairs) {
    EvalPair h = p.scores;
    for (std::size_t c = 0; c < h.perturbed.size(); ++c) {
      h.perturbed[c] = h.original[c] + 0.5 * (p.scores.perturbed[c] - h.original[c]);
    }
    halved.push_back(std::move(h));
    distances.push_back(text_distance(p.original_text, p.perturbed_text));
  }
  double k_half = estimate_stability(halved, distances, "token_edit").k_hat;
  double scale_err = std::fabs(k_half - 0.5 * estimate.k_hat);
  bool pass = estimate.k_hat <= 1.0 && scale_err <= 1e-12;
  return {pass, std::to_string(pairs.size()) + " low-level pairs, " +
                    fmt("k_hat %.4f (need <= 1.0); halved deltas give %.6f, "
                        "|err| %.3g (tol 1e-12)",
                        estimate.k_hat, k_half, scale_err)};
}

// 9. Byte-identical reruns.
Outcome determinism(const fs::path& work) {
  std::vector<std::string> files{"traces_frc.jsonl", "traces_cot.jsonl",
                                 "traces_dp.jsonl", "perturbed.jsonl",
                                 "report.json"};
  std::vector<std::string> hashes[2];
  for (int run = 0; run < 2; ++run) {
    std::string out = (work / ("determinism_" + std::to_string(run))).string();
    std::string perturbed = out + "/perturbed.jsonl";
    if (cli({"analyze", "--config", data("example.ini"), "--out", out}) != kExitOk ||
        cli({"perturb", "--config", data("example.ini"), "--out", out}) != kExitOk ||
        cli({"evaluate", "--config", data("example.ini"), "--perturbed",
             perturbed, "--out", out}) != kExitOk) {
      return {false, "a CLI run failed"};
    }
    for (const auto& f : files) {
      hashes[run].push_back(fnv1a_hex(slurp(fs::path(out) / f)));
    }
  }
  return {hashes[0] == hashes[1],
          std::to_string(files.size()) +
              " artifacts compared by FNV-1a hash (traces, perturbed set, "
              "report); report " +
              hashes[0].back() + (hashes[0] == hashes[1] ? " == " : " != ") +
              hashes[1].back()};
}

// 10. HTTP wire conformance against a local stub.
Outcome wire_conformance(const fs::path& work) {
  LexiconBackend oracle(curated_lexicon());
  testing::StubServer server(testing::backend_speaker(oracle));
  std::string out = (work / "http").string();
  int code = cli({"analyze", "--backend", "http", "--endpoint", server.url(),
                  "--model", "stub", "--dataset", data("corpus_conflict.jsonl"),
                  "--method", "frc,cot,dp", "--out", out});
  std::size_t lines = 0;
  {
    std::ifstream in(fs::path(out) / "traces_frc.jsonl");
    for (std::string line; std::getline(in, line);) lines += !line.empty();
  }
  bool end_to_end = code == kExitOk && lines == 24;

  testing::StubServer garbled(
      [](const json&) { return std::string("Positive, I think."); });
  BackendConfig config;
  config.endpoint_url = garbled.url();
  config.retry_backoff_ms = 0;
  HttpBackend backend(config);
  bool malformed = false;
  try {
    backend.elicit(ElicitationRequest{ElicitationKind::kDpLabel, "good food",
                                      ClassSet::Binary()});
  } catch (const Error& e) {
    malformed = e.code() == ErrorCode::kMalformedResponse;
  }
  bool one_reprompt = malformed && backend.reprompts() == 1 &&
                      garbled.requests() == 2;
  return {end_to_end && one_reprompt,
          "analyze over HTTP: exit " + std::to_string(code) + ", " +
              std::to_string(lines) + "/24 FRC traces, " +
              std::to_string(server.requests()) + " requests; garbled stub: " +
              std::to_string(garbled.requests()) + " requests, " +
              std::to_string(backend.reprompts()) + " reprompt, " +
              (malformed ? "MalformedResponse" : "no MalformedResponse")};
}

}  // namespace
}  // namespace frc

int main() {
  using frc::Outcome;
  namespace fs = std::filesystem;
  fs::path work = fs::temp_directory_path() / "frc_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fusion oracle equivalence", frc::fusion_oracle},
      {"Metric exactness", frc::metric_exactness},
      {"Offline MS = 1.0", frc::offline_ms},
      {"Offline RS ordering", frc::rs_ordering},
      {"FRC vs CoT structural contrast", frc::conflict_contrast},
      {"Clear/ambiguous rule", frc::split_rule},
      {"Transfer plumbing", [&] { return frc::transfer_plumbing(work); }},
      {"Stability bound", frc::stability_bound},
      {"Determinism", [&] { return frc::determinism(work); }},
      {"Wire conformance", [&] { return frc::wire_conformance(work); }},
  };
  std::vector<std::string> lines;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    char head[96];
    std::snprintf(head, sizeof(head), "%s [%2zu] %s: ", o.pass ? "PASS" : "FAIL",
                  i + 1, criteria[i].first.c_str());
    lines.push_back(head + o.detail);
  }
  fs::remove_all(work);
  std::printf("\n=== acceptance ===\n");
  for (const auto& line : lines) std::printf("%s\n", line.c_str());
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
