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

#include "has/types.hpp"

#include <string>

namespace has {
namespace {

constexpr std::array<std::string_view, 14> kTypeCodes = {
    "DATE", "MONEY", "PERCENT", "QUANTITY", "TIME", "GPE",  "LOC",
    "PERSON", "WORK_OF_ART", "ORG", "NORP", "LAW", "FAC", "LANGUAGE",
};

}  // namespace

std::string_view to_string(EntityType type) {
  return kTypeCodes[static_cast<std::size_t>(type)];
}

std::optional<EntityType> parse_entity_type(std::string_view code) {
  for (std::size_t i = 0; i < kTypeCodes.size(); ++i) {
    if (kTypeCodes[i] == code) return static_cast<EntityType>(i);
  }
  return std::nullopt;
}

EntityType entity_type_from_string(std::string_view code) {
  if (auto t = parse_entity_type(code)) return *t;
  throw ConfigError("unknown entity type '" + std::string(code) + "'");
}

bool is_rule_type(EntityType type) {
  switch (type) {
    case EntityType::kDate:
    case EntityType::kMoney:
    case EntityType::kPercent:
    case EntityType::kQuantity:
    case EntityType::kTime:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(SpanSource source) {
  return source == SpanSource::kAuto ? "auto" : "manual";
}

std::optional<SpanSource> parse_span_source(std::string_view s) {
  if (s == "auto") return SpanSource::kAuto;
  if (s == "manual") return SpanSource::kManual;
  return std::nullopt;
}

std::string HideStrategy::name() const {
  if (kind_ == HideKind::kGenerative) return "generative";
  return mode_ == PlaceholderMode::kIndexed ? "label-indexed" : "label";
}

HideStrategy HideStrategy::parse(std::string_view name) {
  if (name == "generative") return generative();
  if (name == "label" || name == "label-bare") {
    return label_based(PlaceholderMode::kBare);
  }
  if (name == "label-indexed") return label_based(PlaceholderMode::kIndexed);
  throw ConfigError("unknown hide strategy '" + std::string(name) + "'");
}

const MappingEntry* EntityMapping::find_original(
    std::string_view original) const {
  for (const MappingEntry& e : entries) {
    if (e.original == original) return &e;
  }
  return nullptr;
}

std::string_view to_string(TaskType task) {
  switch (task) {
    case TaskType::kTranslate:
      return "Translate";
    case TaskType::kAbstract:
      return "Abstract";
    case TaskType::kPolish:
      return "Polish";
    case TaskType::kClassify:
      return "Classify";
  }
  return "Translate";
}

std::optional<TaskType> parse_task_type(std::string_view s) {
  if (s == "Translate" || s == "translate") return TaskType::kTranslate;
  if (s == "Abstract" || s == "abstract") return TaskType::kAbstract;
  if (s == "Polish" || s == "polish") return TaskType::kPolish;
  if (s == "Classify" || s == "classify") return TaskType::kClassify;
  return std::nullopt;
}

}  // namespace has
