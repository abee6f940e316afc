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

#include "has/config.hpp"

#include <fstream>

namespace has {
namespace {

void refuse_literal_keys(const nlohmann::json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "api_key" || key == "apiKey" || key == "authorization") {
        throw ConfigError("literal credentials are not accepted; set key_env");
      }
      refuse_literal_keys(value);
    }
  } else if (j.is_array()) {
    for (const auto& v : j) refuse_literal_keys(v);
  }
}

const nlohmann::json& section(const nlohmann::json& j, const char* name) {
  static const nlohmann::json kEmpty = nlohmann::json::object();
  if (!j.contains(name)) return kEmpty;
  const nlohmann::json& s = j.at(name);
  if (!s.is_object()) throw ConfigError(std::string("section \"") + name + "\" must be an object");
  return s;
}

}  // namespace

AppConfig AppConfig::from_json(const nlohmann::json& j,
                               const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  refuse_literal_keys(j);
  for (const auto& [key, value] : j.items()) {
    if (key != "recognizer" && key != "hide" && key != "seek" && key != "backend" &&
        key != "gateway") {
      throw ConfigError("unknown config section \"" + key + "\"");
    }
  }
  AppConfig c;
  c.recognizer = RecognizerConfig::from_json(section(j, "recognizer"), base_dir);
  const nlohmann::json& hide = section(j, "hide");
  c.hide.policy = SurrogatePolicy::from_json(hide, base_dir);
  if (hide.contains("strategy")) {
    try {
      c.hide.strategy = HideStrategy::parse(hide.at("strategy").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("hide.strategy: ") + e.what());
    }
  }
  c.seek = SeekConfig::from_json(section(j, "seek"));
  c.backend = llm::BackendConfig::from_json(section(j, "backend"), base_dir);
  c.gateway.apply_json(section(j, "gateway"));
  c.gateway.recognizer = c.recognizer;
  c.gateway.hide = c.hide;
  c.gateway.seek = c.seek;
  return c;
}

AppConfig AppConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return from_json(j, path.parent_path());
}

}  // namespace has
