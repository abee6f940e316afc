// Copyright 2026 The HaS Gateway Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "has/llm.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "has/metrics.hpp"
#include "has/text.hpp"
#include "has/validate.hpp"
#include "httplib.h"

namespace has::llm {
namespace {

constexpr std::string_view kSubstituteInstruction =
    "Substitute given words in the text into other random words.";

std::string python_repr(std::string_view s) {
  const bool has_single = s.find('\'') != std::string_view::npos;
  const bool has_double = s.find('"') != std::string_view::npos;
  const char quote = has_single && !has_double ? '"' : '\'';
  std::string out(1, quote);
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '\\' || c == quote) {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else if (c == '\t') {
      out += "\\t";
    } else if (u < 0x20 || u == 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\x%02x", u);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  out.push_back(quote);
  return out;
}

std::string ascii_upper(std::string s) {
  for (char& c : s) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return s;
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

// --- prompt templates -------------------------------------------------------

std::string python_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += python_repr(items[i]);
  }
  out += "]";
  return out;
}

std::vector<std::string> parse_python_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && text::is_space_byte(s[i])) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error("not a string list at offset " + std::to_string(i) + ": " + why);
  };
  skip_ws();
  if (i >= s.size() || s[i] != '[') fail("expected '['");
  ++i;
  skip_ws();
  if (i < s.size() && s[i] == ']') return out;
  for (;;) {
    skip_ws();
    if (i >= s.size() || (s[i] != '\'' && s[i] != '"')) fail("expected a quote");
    const char quote = s[i++];
    std::string item;
    for (;;) {
      if (i >= s.size()) fail("unterminated string");
      char c = s[i++];
      if (c == quote) break;
      if (c != '\\') {
        item.push_back(c);
        continue;
      }
      if (i >= s.size()) fail("dangling escape");
      char e = s[i++];
      switch (e) {
        case 'n':
          item.push_back('\n');
          break;
        case 'r':
          item.push_back('\r');
          break;
        case 't':
          item.push_back('\t');
          break;
        case 'x': {
          if (i + 2 > s.size()) fail("short \\x escape");
          item.push_back(static_cast<char>(
              std::stoi(std::string(s.substr(i, 2)), nullptr, 16)));
          i += 2;
          break;
        }
        default:
          item.push_back(e);
      }
    }
    out.push_back(std::move(item));
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') return out;
    fail("expected ',' or ']'");
  }
}

std::string build_prompt_s(std::string_view c,
                           const std::vector<std::string>& entities) {
  std::string out(kSubstituteInstruction);
  out += "\nText: ";
  out += c;
  out += "\nGiven words: ";
  out += python_list(entities);
  out += "\nSubstituted text:";
  return out;
}

std::string build_prompt_l(std::string_view e, TaskType task,
                           const std::optional<std::string>& target_language) {
  std::string out;
  switch (task) {
    case TaskType::kTranslate:
      if (!target_language || target_language->empty()) {
        throw ConfigError("a translation prompt needs a target language");
      }
      out = "Translate the following text to " + *target_language + ":";
      break;
    case TaskType::kAbstract:
      out = "Abstract the following text:";
      break;
    case TaskType::kPolish:
      out = "Polish the following text:";
      break;
    case TaskType::kClassify:
      out = "Classify the following text:";
      break;
  }
  out += "\nText: ";
  out += e;
  return out;
}

std::string build_prompt_r(std::string_view e, std::string_view l,
                           std::string_view c, TaskType task) {
  const std::string t(to_string(task));
  std::string out = "Input: ";
  out += e;
  out += "\n" + t + ": ";
  out += l;
  out += "\nInput: ";
  out += c;
  out += "\n" + t + ":";
  return out;
}

std::string render_hide_training(std::string_view c,
                                 const std::vector<std::string>& entities,
                                 std::string_view s) {
  std::string out = build_prompt_s(c, entities);
  out += " ";
  out += s;
  return out;
}

std::string render_seek_training(std::string_view e, std::string_view l,
                                 std::string_view c, std::string_view r,
                                 TaskType task) {
  std::string out = build_prompt_r(e, l, c, task);
  out += " ";
  out += r;
  return out;
}

std::string_view payload_of(std::string_view content) {
  constexpr std::string_view kText = "\nText: ";
  if (content.substr(0, kSubstituteInstruction.size()) == kSubstituteInstruction &&
      content.substr(kSubstituteInstruction.size(), kText.size()) == kText) {
    const std::size_t begin = kSubstituteInstruction.size() + kText.size();
    const std::size_t given = content.rfind("\nGiven words: ");
    if (given != std::string_view::npos && given >= begin) {
      return content.substr(begin, given - begin);
    }
  }
  const std::size_t first_nl = content.find('\n');
  if (first_nl != std::string_view::npos && first_nl > 0 &&
      content[first_nl - 1] == ':' &&
      content.substr(first_nl, kText.size()) == kText &&
      content.substr(0, 5) != "Input") {
    return content.substr(first_nl + kText.size());
  }
  if (content.substr(0, 7) == "Input: ") {
    const std::size_t last_input = content.rfind("\nInput: ");
    const std::size_t last_nl = content.rfind('\n');
    if (last_input != std::string_view::npos && last_nl > last_input) {
      std::string_view tail = content.substr(last_nl + 1);
      for (TaskType t : {TaskType::kTranslate, TaskType::kAbstract, TaskType::kPolish,
                         TaskType::kClassify}) {
        if (tail == std::string(to_string(t)) + ":") {
          const std::size_t begin = last_input + 8;
          return content.substr(begin, last_nl - begin);
        }
      }
    }
  }
  return content;
}

// --- requests ---------------------------------------------------------------

void LlmRequest::check() const {
  if (std::none_of(messages.begin(), messages.end(),
                   [](const Message& m) { return m.role == "user"; })) {
    throw Error("request has no user message");
  }
  for (const Message& m : messages) {
    if (m.role != "system" && m.role != "user" && m.role != "assistant") {
      throw Error("unknown message role '" + m.role + "'");
    }
  }
  if (params.temperature < 0.0) throw Error("temperature must be non-negative");
}

const Message& LlmRequest::last_user() const {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == "user") return *it;
  }
  throw Error("request has no user message");
}

nlohmann::json LlmRequest::to_json() const {
  nlohmann::json msgs = nlohmann::json::array();
  for (const Message& m : messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  return nlohmann::json{{"model", model},
                        {"messages", msgs},
                        {"temperature", params.temperature},
                        {"max_tokens", params.max_tokens}};
}

LlmRequest LlmRequest::from_json(const nlohmann::json& j) {
  LlmRequest r;
  try {
    if (j.contains("model")) r.model = j.at("model").get<std::string>();
    for (const auto& m : j.at("messages")) {
      r.messages.push_back(
          Message{m.at("role").get<std::string>(), m.at("content").get<std::string>()});
    }
    if (j.contains("temperature")) {
      r.params.temperature = j.at("temperature").get<double>();
    }
    if (j.contains("max_tokens")) r.params.max_tokens = j.at("max_tokens").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed chat request: ") + e.what());
  }
  r.check();
  return r;
}

LlmRequest LlmRequest::user(std::string content) {
  LlmRequest r;
  r.messages.push_back(Message{"user", std::move(content)});
  return r;
}

HttpStatusError::HttpStatusError(int status)
    : BackendError("upstream returned HTTP " + std::to_string(status)),
      status_(status) {}

// --- mocks ------------------------------------------------------------------

std::string EchoBackend::complete(const LlmRequest& req) const {
  return std::string(payload_of(req.last_user().content));
}

DictTranslateBackend::DictTranslateBackend(std::map<std::string, std::string> lexicon,
                                           std::string target)
    : lexicon_(std::move(lexicon)), target_(std::move(target)) {}

DictTranslateBackend DictTranslateBackend::load(const std::filesystem::path& path,
                                                std::string target) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read lexicon " + path.string());
  std::map<std::string, std::string> lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected source<TAB>target");
    }
    lex[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return DictTranslateBackend(std::move(lex), std::move(target));
}

std::string DictTranslateBackend::translate(std::string_view s) const {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (const std::size_t ph = placeholder_shape_at(s, i)) {
      out.append(s.substr(i, ph));
      i += ph;
      continue;
    }
    if (!text::word_at(s, i)) {
      std::size_t len = 1;
      text::char_at(s, i, &len);
      out.append(s.substr(i, len));
      i += len;
      continue;
    }
    const std::size_t end = text::word_end(s, i);
    const std::string word(s.substr(i, end - i));
    i = end;
    auto it = lexicon_.find(word);
    if (it != lexicon_.end()) {
      out += it->second;
      continue;
    }
    it = lexicon_.find(text::ascii_lower(word));
    if (it == lexicon_.end() || it->second.empty()) {
      out += word;
      continue;
    }
    std::string t = it->second;
    const bool all_caps = word.size() > 1 &&
                          std::all_of(word.begin(), word.end(), [](char c) {
                            return is_upper(c) || !text::is_ascii_alnum(c);
                          });
    if (all_caps) {
      t = ascii_upper(t);
    } else if (is_upper(word[0]) && t[0] >= 'a' && t[0] <= 'z') {
      t[0] = static_cast<char>(t[0] - 'a' + 'A');
    }
    out += t;
  }
  return out;
}

std::string DictTranslateBackend::complete(const LlmRequest& req) const {
  return translate(payload_of(req.last_user().content));
}

ClassifyBackend::ClassifyBackend(std::map<std::string, std::vector<std::string>> table)
    : table_(std::move(table)) {
  if (table_.empty()) throw ConfigError("keyword table has no labels");
  for (auto& [label, words] : table_) {
    for (std::string& w : words) w = text::fold_case(w);
  }
}

ClassifyBackend ClassifyBackend::load(const std::filesystem::path& path) {
  try {
    auto j = nlohmann::json::parse(slurp(path));
    return ClassifyBackend(j.get<std::map<std::string, std::vector<std::string>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("keyword table " + path.string() + ": " + e.what());
  }
}

std::string ClassifyBackend::classify(std::string_view text) const {
  const metrics::Tokens toks = metrics::tokenize(text);
  std::string best;
  std::size_t best_score = 0;
  bool first = true;
  for (const auto& [label, words] : table_) {
    const std::set<std::string> keys(words.begin(), words.end());
    std::size_t score = 0;
    for (const std::string& t : toks) score += keys.count(t);
    if (first || score > best_score) {
      best = label;
      best_score = score;
      first = false;
    }
  }
  return best;
}

std::string ClassifyBackend::complete(const LlmRequest& req) const {
  return classify(payload_of(req.last_user().content));
}

std::vector<std::string> ClassifyBackend::labels() const {
  std::vector<std::string> out;
  for (const auto& [label, words] : table_) out.push_back(label);
  return out;
}

// --- remote -----------------------------------------------------------------

RemoteChatBackend::RemoteChatBackend(RemoteConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw ConfigError("remote backend needs an endpoint");
  if (config_.key_env.empty()) throw ConfigError("remote backend needs key_env");
  const std::size_t scheme_end = config_.endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint must start with http:// or https://");
  }
  const std::string scheme = config_.endpoint.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("endpoint must start with http:// or https://");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw ConfigError("built without TLS; https endpoint rejected");
#endif
  const std::size_t path_start = config_.endpoint.find('/', scheme_end + 3);
  origin_ = config_.endpoint.substr(0, path_start);
  std::string base =
      path_start == std::string::npos ? "" : config_.endpoint.substr(path_start);
  while (!base.empty() && base.back() == '/') base.pop_back();
  path_ = base + "/chat/completions";
}

std::string RemoteChatBackend::api_key() const {
  const char* key = std::getenv(config_.key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw ConfigError("environment variable " + config_.key_env + " is not set");
  }
  return key;
}

RawResponse RemoteChatBackend::post_once(const std::string& body,
                                         const std::string& key) const {
  httplib::Client cli(origin_);
  cli.set_connection_timeout(config_.timeout_seconds, 0);
  cli.set_read_timeout(config_.timeout_seconds, 0);
  cli.set_write_timeout(config_.timeout_seconds, 0);
  httplib::Headers headers{{"Authorization", "Bearer " + key}};
  auto res = cli.Post(path_, headers, body, "application/json");
  if (!res) {
    throw TransportError("request to upstream failed: " +
                         httplib::to_string(res.error()));
  }
  return RawResponse{res->status, res->body, res->get_header_value("Content-Type")};
}

RawResponse RemoteChatBackend::post_raw(const std::string& body) const {
  const std::string key = api_key();
  int backoff = config_.retry.initial_backoff_ms;
  const int attempts = std::max(1, config_.retry.max_attempts);
  for (int attempt = 1;; ++attempt) {
    try {
      RawResponse r = post_once(body, key);
      const bool retryable = r.status == 429 || r.status >= 500;
      if (!retryable || attempt >= attempts) return r;
    } catch (const TransportError&) {
      if (attempt >= attempts) throw;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    backoff *= 2;
  }
}

std::string RemoteChatBackend::complete(const LlmRequest& req) const {
  req.check();
  LlmRequest sent = req;
  if (sent.model.empty()) sent.model = config_.model;
  RawResponse r = post_raw(sent.to_json().dump());
  if (r.status < 200 || r.status >= 300) throw HttpStatusError(r.status);
  try {
    auto j = nlohmann::json::parse(r.body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw MalformedResponseError(
        "upstream response lacks choices[0].message.content");
  }
}

bool RemoteChatBackend::reachable() const {
  httplib::Client cli(origin_);
  cli.set_connection_timeout(2, 0);
  cli.set_read_timeout(2, 0);
  auto res = cli.Get("/");
  return static_cast<bool>(res);
}

// --- factory ----------------------------------------------------------------

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::kEcho:
      return "echo";
    case BackendKind::kDict:
      return "dict";
    case BackendKind::kClassify:
      return "classify";
    case BackendKind::kRemote:
      return "remote";
  }
  return "echo";
}

BackendKind parse_backend_kind(std::string_view s) {
  if (s == "echo") return BackendKind::kEcho;
  if (s == "dict") return BackendKind::kDict;
  if (s == "classify") return BackendKind::kClassify;
  if (s == "remote") return BackendKind::kRemote;
  throw ConfigError("unknown backend '" + std::string(s) + "'");
}

BackendConfig BackendConfig::from_json(const nlohmann::json& j,
                                       const std::filesystem::path& base) {
  BackendConfig c;
  auto path_of = [&](const nlohmann::json& v) {
    std::filesystem::path p(v.get<std::string>());
    return p.is_relative() && !base.empty() ? base / p : p;
  };
  try {
    if (j.contains("kind")) c.kind = parse_backend_kind(j.at("kind").get<std::string>());
    if (j.contains("lexicon")) c.lexicon = path_of(j.at("lexicon"));
    if (j.contains("target")) c.target = j.at("target").get<std::string>();
    if (j.contains("keywords")) c.keywords = path_of(j.at("keywords"));
    if (j.contains("endpoint")) c.remote.endpoint = j.at("endpoint").get<std::string>();
    if (j.contains("model")) c.remote.model = j.at("model").get<std::string>();
    if (j.contains("key_env")) c.remote.key_env = j.at("key_env").get<std::string>();
    if (j.contains("api_key")) {
      throw ConfigError("api keys are not accepted in config files; use key_env");
    }
    if (j.contains("timeout_seconds")) {
      c.remote.timeout_seconds = j.at("timeout_seconds").get<int>();
    }
    if (j.contains("max_attempts")) {
      c.remote.retry.max_attempts = j.at("max_attempts").get<int>();
    }
    if (j.contains("initial_backoff_ms")) {
      c.remote.retry.initial_backoff_ms = j.at("initial_backoff_ms").get<int>();
    }
    if (j.contains("parallelism")) c.parallelism = j.at("parallelism").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("backend config: ") + e.what());
  }
  return c;
}

std::shared_ptr<Backend> make_backend(const BackendConfig& config) {
  switch (config.kind) {
    case BackendKind::kEcho:
      return std::make_shared<EchoBackend>();
    case BackendKind::kDict:
      return std::make_shared<DictTranslateBackend>(
          DictTranslateBackend::load(config.lexicon, config.target));
    case BackendKind::kClassify:
      return std::make_shared<ClassifyBackend>(ClassifyBackend::load(config.keywords));
    case BackendKind::kRemote:
      return std::make_shared<RemoteChatBackend>(config.remote);
  }
  throw ConfigError("unknown backend kind");
}

std::string complete(const Backend& backend, const LlmRequest& req) {
  req.check();
  return backend.complete(req);
}

BatchResult complete_batch(const Backend& backend,
                           const std::vector<LlmRequest>& requests,
                           int parallelism) {
  BatchResult out;
  out.outputs.resize(requests.size());
  out.errors.resize(requests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        out.outputs[i] = complete(backend, requests[i]);
      } catch (const std::exception& e) {
        out.errors[i] = e.what();
        if (out.errors[i].empty()) out.errors[i] = "backend failure";
      }
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(1, parallelism)), requests.size());
  if (n_threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return out;
}

}  // namespace has::llm
