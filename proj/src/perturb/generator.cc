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

#include "frc/perturb/generator.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <vector>

#include "frc/backends/response_parser.h"
#include "frc/core/error.h"
#include "frc/text/text.h"

namespace frc {
namespace {

constexpr std::string_view kOpeners[] = {"honestly", "overall", "in short",
                                         "all in all", "to sum up"};
constexpr std::string_view kFiller = "nothing else stood out";

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }

std::string capitalize(std::string s) {
  if (!s.empty() && is_lower(s[0])) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

// Lowercases a leading capital unless it stands alone ("I").
std::string decapitalize(std::string s) {
  if (s.size() > 1 && is_upper(s[0]) && is_lower(s[1])) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
  return s;
}

// Rebuilds `source` with the tokens in `replacements` substituted, carrying
// over a leading capital.
std::string substitute(std::string_view source,
                       const std::vector<text::Token>& tokens,
                       const std::map<std::size_t, std::string>& replacements) {
  std::string out;
  std::size_t cursor = 0;
  for (const auto& [index, word] : replacements) {
    const auto& tok = tokens[index];
    out.append(source.substr(cursor, tok.begin - cursor));
    out += is_upper(source[tok.begin]) ? capitalize(word) : word;
    cursor = tok.end;
  }
  out.append(source.substr(cursor));
  return out;
}

std::string_view strip_trailing_punct(std::string_view s) {
  while (!s.empty() && (std::string_view(",;.!?: ").find(s.back()) !=
                        std::string_view::npos)) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

PerturbKind kind_of(RobustLevel level) {
  switch (level) {
    case RobustLevel::kLow:
      return PerturbKind::kRobustLow;
    case RobustLevel::kMedium:
      return PerturbKind::kRobustMedium;
    case RobustLevel::kHigh:
      return PerturbKind::kRobustHigh;
  }
  return PerturbKind::kRobustLow;
}

DeterministicGenerator::DeterministicGenerator(Lexicon lexicon,
                                               SynonymTable synonyms)
    : lexicon_(std::move(lexicon)), synonyms_(std::move(synonyms)) {
  lexicon_.validate();
  auto up = lexicon_.modifiers.find(std::string(kIntensifier));
  auto down = lexicon_.modifiers.find(std::string(kDiminisher));
  if (up == lexicon_.modifiers.end() || up->second <= 1.0 ||
      down == lexicon_.modifiers.end() || down->second >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lexicon needs modifiers 'very' (>1) and 'slightly' (<1)");
  }
}

std::string DeterministicGenerator::rewrite(std::string_view text,
                                            RobustLevel level,
                                            std::uint64_t seed) {
  switch (level) {
    case RobustLevel::kLow:
      return swap_some(text, seed);
    case RobustLevel::kMedium:
      return swap_all_and_reorder(text);
    case RobustLevel::kHigh:
      return paraphrase(text, seed);
  }
  return std::string(text);
}

std::string DeterministicGenerator::swap_some(std::string_view text,
                                              std::uint64_t seed) const {
  const auto tokens = text::tokenize(text);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (synonyms_.contains(tokens[i].text)) candidates.push_back(i);
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoSwapCandidates,
                "no synonym-table word in '" + std::string(text) + "'");
  }
  // Raw engine output keeps the choice identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::size_t n = std::min<std::size_t>(1 + rng() % 2, candidates.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + rng() % (candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  std::map<std::size_t, std::string> replacements;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t t = candidates[i];
    replacements[t] = synonyms_.closest(tokens[t].text);
  }
  return substitute(text, tokens, replacements);
}

std::string DeterministicGenerator::swap_all_and_reorder(
    std::string_view text) const {
  const auto tokens = text::tokenize(text);
  std::map<std::size_t, std::string> replacements;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (synonyms_.contains(tokens[i].text)) {
      replacements[i] = synonyms_.closest(tokens[i].text);
    }
  }
  std::string swapped = substitute(text, tokens, replacements);
  auto clauses = text::split_clauses(swapped);
  if (clauses.size() < 2) return swapped;

  std::string_view whole = text::trim(swapped);
  std::string ending;
  if (!whole.empty() && std::string_view(".!?").find(whole.back()) !=
                            std::string_view::npos) {
    ending = whole.back();
  }
  std::vector<std::string> parts;
  for (auto it = clauses.rbegin(); it != clauses.rend(); ++it) {
    parts.emplace_back(strip_trailing_punct(
        std::string_view(swapped).substr(it->begin, it->size())));
  }
  parts.back() = decapitalize(parts.back());
  parts.front() = capitalize(parts.front());
  return text::join(parts, ", ") + ending;
}

std::string DeterministicGenerator::paraphrase(std::string_view text,
                                               std::uint64_t seed) const {
  std::vector<std::string> openers;
  for (auto opener : kOpeners) {
    auto words = text::token_strings(opener);
    bool clean = std::none_of(words.begin(), words.end(), [&](auto& w) {
      return lexicon_.is_entry(w) || lexicon_.is_modifier(w) ||
             lexicon_.is_negator(w) || text::is_clause_opener(w);
    });
    if (clean) openers.emplace_back(opener);
  }
  if (openers.empty()) {
    throw Error(ErrorCode::kGenerationFailed, "no usable clause openers");
  }
  const ClassSet any_classes = ClassSet::Binary();
  std::vector<std::string> clauses;
  auto spans = text::split_clauses(text);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    auto words = text::token_strings(text.substr(spans[i].begin,
                                                 spans[i].size()));
    std::string opener =
        !words.empty() && text::is_clause_opener(words.front())
            ? words.front()
            : openers[(seed + i) % openers.size()];
    std::vector<std::string> phrases;
    for (const auto& hit : lexicon_hits(words, any_classes, lexicon_)) {
      std::vector<std::string> phrase;
      for (std::size_t t = hit.window_begin; t <= hit.token; ++t) {
        phrase.push_back(synonyms_.contains(words[t])
                             ? synonyms_.loosest(words[t])
                             : words[t]);
      }
      phrases.push_back(text::join(phrase, " "));
    }
    std::string body =
        phrases.empty() ? std::string(kFiller) : text::join(phrases, " and ");
    clauses.push_back(capitalize(opener + " " + body));
  }
  return text::join(clauses, ". ") + ".";
}

MonotonicEdit DeterministicGenerator::shift(std::string_view text,
                                            const ClassSet& classes,
                                            std::size_t target,
                                            int direction) {
  if (direction != 1 && direction != -1) {
    throw Error(ErrorCode::kInvalidArgument, "direction must be +1 or -1");
  }
  if (target >= classes.size()) {
    throw Error(ErrorCode::kInvalidArgument, "target class out of range");
  }
  const auto tokens = text::tokenize(text);
  std::vector<std::string> words;
  for (const auto& t : tokens) words.push_back(t.text);
  const auto hits = lexicon_hits(words, classes, lexicon_);

  double top = 0.0;  // strongest target degree among all hits
  for (const auto& h : hits) top = std::max(top, h.strengths[target]);

  const LexiconHit* best = nullptr;
  for (const auto& h : hits) {
    double s = h.strengths[target];
    bool clean_window = h.window_begin == h.token && !h.negated;
    bool others_zero = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (c != target && h.strengths[c] != 0.0) others_zero = false;
    }
    bool next_free = h.token + 1 >= words.size() ||
                     !lexicon_.is_entry(words[h.token + 1]);
    bool movable = direction > 0 ? s < 1.0 : true;
    if (s > 0.0 && s == top && clean_window && others_zero && next_free &&
        movable && best == nullptr) {
      best = &h;
    }
  }
  if (best != nullptr && direction < 0) {
    // Weakening only lowers the maximum when no other hit ties it.
    int at_top = 0;
    for (const auto& h : hits) at_top += h.strengths[target] == top ? 1 : 0;
    if (at_top > 1) best = nullptr;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kNoSentimentToken,
                "no movable " + classes.name(target) + " token in '" +
                    std::string(text) + "'");
  }

  const auto& tok = tokens[best->token];
  std::string modifier(direction > 0 ? kIntensifier : kDiminisher);
  std::string out(text.substr(0, tok.begin));
  if (tok.begin == 0 && is_upper(text[0])) {
    out += capitalize(modifier) + " " +
           decapitalize(std::string(text.substr(tok.begin)));
  } else {
    out += modifier + " " + std::string(text.substr(tok.begin));
  }
  MonotonicEdit edit{std::move(out), {}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    edit.labels[classes.name(c)] = c == target ? direction : 0;
  }
  return edit;
}

LlmGenerator::LlmGenerator(BackendConfig config) : client_(std::move(config)) {}

std::string LlmGenerator::id() const {
  return "llm:" + client_.config().model_name;
}

std::string LlmGenerator::ask(const std::string& instruction,
                              std::string_view text) {
  std::vector<ChatMessage> messages{
      {"system",
       "You rewrite short review texts. Answer with one JSON object of the "
       "form {\"text\": \"<rewritten text>\"} and nothing else."},
      {"user", instruction + "\n\nText: " + std::string(text)}};
  std::string reply = client_.complete(messages);
  auto object = extract_first_object(reply);
  if (!object || !object->contains("text") || !(*object)["text"].is_string()) {
    throw Error(ErrorCode::kMalformedResponse,
                "rewrite reply lacks a \"text\" string");
  }
  return (*object)["text"].get<std::string>();
}

std::string LlmGenerator::rewrite(std::string_view text, RobustLevel level,
                                  std::uint64_t /*seed*/) {
  switch (level) {
    case RobustLevel::kLow:
      return ask("Replace one or two words with synonyms. Keep everything "
                 "else, including the sentiment, unchanged.",
                 text);
    case RobustLevel::kMedium:
      return ask("Restructure the sentence and replace several words with "
                 "synonyms while keeping the sentiment unchanged.",
                 text);
    case RobustLevel::kHigh:
      return ask("Rewrite the text completely with a different sentence "
                 "structure. The sentiment must stay the same.",
                 text);
  }
  return std::string(text);
}

MonotonicEdit LlmGenerator::shift(std::string_view text,
                                  const ClassSet& classes, std::size_t target,
                                  int direction) {
  if (direction != 1 && direction != -1) {
    throw Error(ErrorCode::kInvalidArgument, "direction must be +1 or -1");
  }
  std::string instruction =
      std::string("Make the text slightly ") +
      (direction > 0 ? "more " : "less ") + classes.name(target) +
      " by swapping a sentiment-bearing word or adding an adverb such as "
      "'very' or 'slightly'. Change nothing else.";
  MonotonicEdit edit{ask(instruction, text), {}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    edit.labels[classes.name(c)] = c == target ? direction : 0;
  }
  return edit;
}

}  // namespace frc
