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

// Prompt templates, a chat-completions client and offline mock backends.

#ifndef HAS_LLM_HPP_
#define HAS_LLM_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "has/types.hpp"
#include "json.hpp"

namespace has::llm {

// --- prompt templates -------------------------------------------------------

// Python repr of a list of strings: ['FBI', 'August 10, 2023'].
std::string python_list(const std::vector<std::string>& items);
// Inverse of python_list for the quoting it produces. Throws Error.
std::vector<std::string> parse_python_list(std::string_view s);

std::string build_prompt_s(std::string_view c,
                           const std::vector<std::string>& entities);
// Throws ConfigError when a translation has no target language.
std::string build_prompt_l(std::string_view e, TaskType task,
                           const std::optional<std::string>& target_language = {});
std::string build_prompt_r(std::string_view e, std::string_view l,
                           std::string_view c, TaskType task);

// Training-file renderings of the hide and seek examples.
std::string render_hide_training(std::string_view c,
                                 const std::vector<std::string>& entities,
                                 std::string_view s);
std::string render_seek_training(std::string_view e, std::string_view l,
                                 std::string_view c, std::string_view r,
                                 TaskType task);

// The text a mock should act on: the Text slot of a substitution or task
// prompt, the last Input slot of a restoration prompt, else everything.
std::string_view payload_of(std::string_view content);

// --- requests and errors ----------------------------------------------------

struct Message {
  std::string role;  // system, user or assistant
  std::string content;

  bool operator==(const Message&) const = default;
};

struct LlmParams {
  double temperature = 0.0;
  int max_tokens = 1024;
};

struct LlmRequest {
  std::vector<Message> messages;
  LlmParams params;
  std::string model;

  // Throws Error unless there is a user message and temperature >= 0.
  void check() const;
  const Message& last_user() const;
  nlohmann::json to_json() const;
  static LlmRequest from_json(const nlohmann::json& j);
  static LlmRequest user(std::string content);
};

class BackendError : public Error {
 public:
  using Error::Error;
};

class TransportError : public BackendError {
 public:
  using BackendError::BackendError;
};

class HttpStatusError : public BackendError {
 public:
  explicit HttpStatusError(int status);
  int status() const { return status_; }

 private:
  int status_;
};

class MalformedResponseError : public BackendError {
 public:
  using BackendError::BackendError;
};

// --- backends ---------------------------------------------------------------

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string complete(const LlmRequest& req) const = 0;
  virtual std::string name() const = 0;
  virtual bool reachable() const { return true; }
};

class EchoBackend : public Backend {
 public:
  std::string complete(const LlmRequest& req) const override;
  std::string name() const override { return "echo"; }
};

// Word-for-word translation through a lexicon. Placeholders and unknown
// words pass through unchanged.
class DictTranslateBackend : public Backend {
 public:
  DictTranslateBackend(std::map<std::string, std::string> lexicon,
                       std::string target);
  // UTF-8 "source<TAB>target" lines; '#' comments and blank lines skipped.
  static DictTranslateBackend load(const std::filesystem::path& path,
                                   std::string target);

  std::string translate(std::string_view text) const;
  std::string complete(const LlmRequest& req) const override;
  std::string name() const override { return "dict"; }
  const std::string& target() const { return target_; }

 private:
  std::map<std::string, std::string> lexicon_;
  std::string target_;
};

// Label with the most keyword hits; ties go to the smallest label.
class ClassifyBackend : public Backend {
 public:
  explicit ClassifyBackend(std::map<std::string, std::vector<std::string>> table);
  // {"label": ["keyword", ...], ...}
  static ClassifyBackend load(const std::filesystem::path& path);

  std::string classify(std::string_view text) const;
  std::string complete(const LlmRequest& req) const override;
  std::string name() const override { return "classify"; }
  std::vector<std::string> labels() const;

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

class FunctionBackend : public Backend {
 public:
  using Fn = std::function<std::string(const LlmRequest&)>;
  FunctionBackend(std::string name, Fn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string complete(const LlmRequest& req) const override { return fn_(req); }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Fn fn_;
};

struct RetryPolicy {
  int max_attempts = 1;  // 1 = no retry
  int initial_backoff_ms = 200;
};

struct RemoteConfig {
  std::string endpoint;  // e.g. https://api.example.com/v1
  std::string model;
  std::string key_env;   // name of the environment variable holding the key
  int timeout_seconds = 60;
  RetryPolicy retry;
};

struct RawResponse {
  int status = 0;
  std::string body;
  std::string content_type;
};

class RemoteChatBackend : public Backend {
 public:
  // Throws ConfigError on an empty endpoint or key_env, or an endpoint that
  // is not http(s).
  explicit RemoteChatBackend(RemoteConfig config);

  std::string complete(const LlmRequest& req) const override;
  std::string name() const override { return "remote"; }
  bool reachable() const override;

  // Sends `body` unchanged to {endpoint}/chat/completions.
  RawResponse post_raw(const std::string& body) const;
  const RemoteConfig& config() const { return config_; }

 private:
  std::string api_key() const;
  RawResponse post_once(const std::string& body, const std::string& key) const;

  RemoteConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // base path + /chat/completions
};

enum class BackendKind { kEcho, kDict, kClassify, kRemote };

std::string_view to_string(BackendKind kind);
BackendKind parse_backend_kind(std::string_view s);

struct BackendConfig {
  BackendKind kind = BackendKind::kEcho;
  std::filesystem::path lexicon;   // dict
  std::string target = "French";   // dict
  std::filesystem::path keywords;  // classify
  RemoteConfig remote;
  int parallelism = 4;

  // Keys: kind, lexicon, target, keywords, endpoint, model, key_env,
  // timeout_seconds, max_attempts, initial_backoff_ms, parallelism.
  static BackendConfig from_json(const nlohmann::json& j,
                                 const std::filesystem::path& base_dir = {});
};

std::shared_ptr<Backend> make_backend(const BackendConfig& config);

std::string complete(const Backend& backend, const LlmRequest& req);

struct BatchResult {
  std::vector<std::string> outputs;
  std::vector<std::string> errors;  // empty string = success
};

// Runs up to `parallelism` requests at a time; results keep input order.
BatchResult complete_batch(const Backend& backend,
                           const std::vector<LlmRequest>& requests,
                           int parallelism);

}  // namespace has::llm

#endif  // HAS_LLM_HPP_
