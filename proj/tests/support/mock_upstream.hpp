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

// A local chat-completions server that records every request it receives.

#ifndef HAS_TESTS_MOCK_UPSTREAM_HPP_
#define HAS_TESTS_MOCK_UPSTREAM_HPP_

#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

namespace has::testing {

struct Captured {
  std::string body;
  std::string authorization;
};

class MockUpstream {
 public:
  // Returns {status, body}. The default echoes the last user message.
  using Responder = std::function<std::pair<int, std::string>(const std::string& body)>;

  explicit MockUpstream(Responder responder = echo) : responder_(std::move(responder)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        captured_.push_back({req.body, req.get_header_value("Authorization")});
      }
      auto [status, body] = responder_(req.body);
      res.status = status;
      res.set_content(body, "application/json");
    });
    server_.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("ok", "text/plain");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockUpstream() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

  std::vector<Captured> captured() const {
    std::lock_guard<std::mutex> lock(mu_);
    return captured_;
  }

  static std::string completion(const std::string& content) {
    return nlohmann::json{{"object", "chat.completion"},
                          {"choices",
                           {{{"index", 0},
                             {"message", {{"role", "assistant"}, {"content", content}}},
                             {"finish_reason", "stop"}}}}}
        .dump();
  }

  static std::pair<int, std::string> echo(const std::string& body) {
    const auto j = nlohmann::json::parse(body);
    std::string last;
    for (const auto& m : j.at("messages")) {
      if (m.at("role") == "user") last = m.at("content").get<std::string>();
    }
    return {200, completion(last)};
  }

 private:
  Responder responder_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  mutable std::mutex mu_;
  std::vector<Captured> captured_;
};

}  // namespace has::testing

#endif  // HAS_TESTS_MOCK_UPSTREAM_HPP_
