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

// One JSON file configuring every stage:
//
//   {
//     "recognizer": {...},   RecognizerConfig::from_json
//     "hide": {"strategy": "generative" | "label" | "label-indexed",
//              "seed": 0, "numeric_jitter": 0.5, "date_shift_days": 400,
//              "surrogates": {"ORG": "orgs.txt"}},
//     "seek": {...},         SeekConfig::from_json
//     "backend": {...},      llm::BackendConfig::from_json
//     "gateway": {...}       GatewayConfig::apply_json
//   }
//
// Relative paths resolve against the file's directory. A literal API key
// is refused anywhere in the file; name an environment variable instead.

#ifndef HAS_CONFIG_HPP_
#define HAS_CONFIG_HPP_

#include <filesystem>

#include "has/gateway.hpp"
#include "has/hide.hpp"
#include "has/llm.hpp"
#include "has/recognizer.hpp"
#include "has/seek.hpp"
#include "json.hpp"

namespace has {

struct AppConfig {
  RecognizerConfig recognizer;
  HideConfig hide;
  SeekConfig seek;
  llm::BackendConfig backend;
  GatewayConfig gateway;  // recognizer, hide and seek mirror the above

  static AppConfig from_json(const nlohmann::json& j,
                             const std::filesystem::path& base_dir = {});
  // Throws ConfigError when unreadable or invalid.
  static AppConfig load(const std::filesystem::path& path);
};

}  // namespace has

#endif  // HAS_CONFIG_HPP_
