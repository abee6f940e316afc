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

#include "has/gateway.hpp"

#include "has/hide.hpp"
#include "httplib.h"

namespace has {
namespace {

// Joins the hidden messages into one document. The record separator never
// occurs in a surrogate, so the anonymized text splits back cleanly.
constexpr std::string_view kSeparator = "\n\x1e\n";

HttpReply error_reply(int status, std::string_view type, std::string_view message) {
  nlohmann::json j = {{"error", {{"type", type}, {"message", message}}}};
  return HttpReply{status, j.dump()};
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> parts;
  std::size_t cursor = 0;
  for (;;) {
    const std::size_t at = s.find(sep, cursor);
    if (at == std::string_view::npos) {
      parts.emplace_back(s.substr(cursor));
      return parts;
    }
    parts.emplace_back(s.substr(cursor, at - cursor));
    cursor = at + sep.size();
  }
}

std::vector<EntitySpan> header_spans(std::string_view combined, const std::string& raw) {
  std::vector<EntitySpan> manual;
  const nlohmann::json j = nlohmann::json::parse(raw);
  if (!j.is_array()) throw ConfigError("entity header must be a JSON array");
  for (const nlohmann::json& item : j) {
    const std::string surface = item.at("surface").get<std::string>();
    if (surface.empty()) throw ConfigError("entity header: empty surface");
    const EntityType etype = entity_type_from_string(item.at("type").get<std::string>());
    for (EntitySpan& s : spans_for_surface(combined, surface, etype)) {
      manual.push_back(std::move(s));
    }
  }
  return resolve_overlaps(std::move(manual));
}

nlohmann::json completion_json(const std::string& model, const std::string& content) {
  return nlohmann::json{
      {"object", "chat.completion"},
      {"model", model},
      {"choices",
       nlohmann::json::array({{{"index", 0},
                               {"message", {{"role", "assistant"}, {"content", content}}},
                               {"finish_reason", "stop"}}})}};
}

}  // namespace

void GatewayConfig::apply_json(const nlohmann::json& j) {
  try {
    if (j.contains("host")) host = j.at("host").get<std::string>();
    if (j.contains("port")) port = j.at("port").get<int>();
    if (j.contains("hide_enabled")) hide_enabled = j.at("hide_enabled").get<bool>();
    if (j.contains("hide_system_messages")) {
      hide_system_messages = j.at("hide_system_messages").get<bool>();
    }
    if (j.contains("entity_header")) entity_header = j.at("entity_header").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("gateway config: ") + e.what());
  }
  if (port < 0 || port > 65535) throw ConfigError("gateway port out of range");
}

Gateway::Gateway(GatewayConfig config, std::shared_ptr<const llm::Backend> upstream)
    : config_(std::move(config)),
      recognizer_(config_.recognizer),
      upstream_(std::move(upstream)) {
  if (!upstream_) throw ConfigError("gateway needs an upstream backend");
  config_.hide.policy.check();
  config_.seek.check();
}

Gateway::~Gateway() {
  if (server_) server_->stop();
}

HttpReply Gateway::forward_raw(const std::string& body) const {
  if (const auto* remote = dynamic_cast<const llm::RemoteChatBackend*>(upstream_.get())) {
    llm::RawResponse r = remote->post_raw(body);
    if (r.status < 200 || r.status >= 300) {
      return error_reply(502, "upstream_error",
                         "upstream returned HTTP " + std::to_string(r.status));
    }
    return HttpReply{r.status, r.body,
                     r.content_type.empty() ? "application/json" : r.content_type};
  }
  const llm::LlmRequest req = llm::LlmRequest::from_json(nlohmann::json::parse(body));
  return HttpReply{200, completion_json(req.model, upstream_->complete(req)).dump()};
}

HttpReply Gateway::handle_chat(const std::string& body, const std::string& entities) const {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
    (void)llm::LlmRequest::from_json(j);
  } catch (const std::exception&) {
    return error_reply(400, "invalid_request", "malformed chat completion request");
  }

  try {
    if (!config_.hide_enabled) return forward_raw(body);

    std::vector<std::size_t> hidden;
    std::string combined;
    nlohmann::json& messages = j["messages"];
    for (std::size_t i = 0; i < messages.size(); ++i) {
      const std::string role = messages[i].at("role").get<std::string>();
      if (role == "system" && !config_.hide_system_messages) continue;
      const std::string& content = messages[i].at("content").get_ref<const std::string&>();
      if (content.find('\x1e') != std::string::npos) {
        return error_reply(400, "invalid_request", "message contains a control character");
      }
      if (!hidden.empty()) combined += kSeparator;
      combined += content;
      hidden.push_back(i);
    }

    std::vector<EntitySpan> spans = recognizer_.recognize(combined);
    if (!entities.empty()) {
      try {
        spans = merge_spans(spans, header_spans(combined, entities));
      } catch (const std::exception&) {
        return error_reply(400, "invalid_request",
                           "malformed " + config_.entity_header + " header");
      }
    }

    AnonymizedDocument doc;
    try {
      doc = hide(combined, spans, config_.hide);
    } catch (const HideError&) {
      return error_reply(500, "anonymization_error", "request could not be anonymized");
    }
    const std::vector<std::string> parts = split(doc.anonymized, kSeparator);
    if (parts.size() != hidden.size()) {
      return error_reply(500, "anonymization_error", "request could not be anonymized");
    }
    for (std::size_t k = 0; k < hidden.size(); ++k) {
      messages[hidden[k]]["content"] = parts[k];
    }
    if (const auto* remote = dynamic_cast<const llm::RemoteChatBackend*>(upstream_.get())) {
      if (!j.contains("model") || j["model"].get<std::string>().empty()) {
        j["model"] = remote->config().model;
      }
    }
    const std::string outbound = j.dump();

    std::vector<std::string> originals;
    for (const MappingEntry& e : doc.mapping.entries) originals.push_back(e.original);
    if (!find_leaks(outbound, originals).ok()) {
      return error_reply(500, "anonymization_error", "request could not be anonymized");
    }

    if (const auto* remote = dynamic_cast<const llm::RemoteChatBackend*>(upstream_.get())) {
      llm::RawResponse r = remote->post_raw(outbound);
      if (r.status < 200 || r.status >= 300) {
        return error_reply(502, "upstream_error",
                           "upstream returned HTTP " + std::to_string(r.status));
      }
      nlohmann::json resp;
      try {
        resp = nlohmann::json::parse(r.body);
        for (nlohmann::json& choice : resp.at("choices")) {
          nlohmann::json& content = choice.at("message").at("content");
          content = seek(doc, content.get<std::string>(), config_.seek).text;
        }
      } catch (const nlohmann::json::exception&) {
        return error_reply(502, "upstream_error", "upstream response is malformed");
      }
      return HttpReply{200, resp.dump()};
    }
    const llm::LlmRequest req = llm::LlmRequest::from_json(j);
    const std::string l = upstream_->complete(req);
    return HttpReply{200,
                     completion_json(req.model, seek(doc, l, config_.seek).text).dump()};
  } catch (const llm::HttpStatusError& e) {
    return error_reply(502, "upstream_error",
                       "upstream returned HTTP " + std::to_string(e.status()));
  } catch (const std::exception&) {
    return error_reply(502, "upstream_error", "upstream request failed");
  }
}

HttpReply Gateway::handle_health() const {
  nlohmann::json j = {
      {"status", "ok"},
      {"version", kVersion},
      {"strategy", config_.hide_enabled ? config_.hide.strategy.name() : "disabled"},
      {"upstream", upstream_->name()},
      {"upstream_reachable", upstream_->reachable()},
  };
  return HttpReply{200, j.dump()};
}

int Gateway::bind() {
  server_ = std::make_unique<httplib::Server>();
  server_->Post("/v1/chat/completions",
                [this](const httplib::Request& req, httplib::Response& res) {
                  HttpReply r = handle_chat(req.body,
                                            req.get_header_value(config_.entity_header.c_str()));
                  res.status = r.status;
                  res.set_content(r.body, r.content_type.c_str());
                });
  server_->Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
    HttpReply r = handle_health();
    res.status = r.status;
    res.set_content(r.body, r.content_type.c_str());
  });
  if (config_.port == 0) {
    const int port = server_->bind_to_any_port(config_.host.c_str());
    if (port < 0) throw Error("cannot bind " + config_.host);
    return port;
  }
  if (!server_->bind_to_port(config_.host.c_str(), config_.port)) {
    throw Error("cannot bind " + config_.host + ":" + std::to_string(config_.port));
  }
  return config_.port;
}

void Gateway::listen() {
  if (!server_) bind();
  server_->listen_after_bind();
}

void Gateway::stop() {
  if (server_) server_->stop();
}

}  // namespace has
