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

// Chat-completions proxy that hides outbound messages and seeks the
// upstream answer. Mappings live only for the duration of one request.

#ifndef HAS_GATEWAY_HPP_
#define HAS_GATEWAY_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "has/hide.hpp"
#include "has/llm.hpp"
#include "has/recognizer.hpp"
#include "has/seek.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace has {

inline constexpr std::string_view kVersion = "0.1.0";

struct GatewayConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  bool hide_enabled = true;
  bool hide_system_messages = true;
  std::string entity_header = "X-HAS-Entities";
  RecognizerConfig recognizer;
  HideConfig hide;
  SeekConfig seek;

  // Keys: host, port, hide_enabled, hide_system_messages, entity_header.
  // The other members come from their own config sections.
  void apply_json(const nlohmann::json& j);
};

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class Gateway {
 public:
  Gateway(GatewayConfig config, std::shared_ptr<const llm::Backend> upstream);
  ~Gateway();

  Gateway(const Gateway&) = delete;
  Gateway& operator=(const Gateway&) = delete;

  // `entities` is the raw value of the entity header, empty when absent:
  // a JSON array of {"surface": ..., "type": ...}.
  HttpReply handle_chat(const std::string& body, const std::string& entities) const;
  HttpReply handle_health() const;

  // Binds (port 0 picks a free one) and returns the bound port.
  int bind();
  // Blocks until stop().
  void listen();
  void stop();

  const GatewayConfig& config() const { return config_; }

 private:
  HttpReply forward_raw(const std::string& body) const;

  GatewayConfig config_;
  Recognizer recognizer_;
  std::shared_ptr<const llm::Backend> upstream_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace has

#endif  // HAS_GATEWAY_HPP_
