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

#include "has/json_io.hpp"

#include <string>

namespace has {

using nlohmann::json;

void to_json(json& j, EntityType t) { j = std::string(to_string(t)); }

void from_json(const json& j, EntityType& t) {
  t = entity_type_from_string(j.get<std::string>());
}

void to_json(json& j, TaskType t) { j = std::string(to_string(t)); }

void from_json(const json& j, TaskType& t) {
  const auto s = j.get<std::string>();
  auto parsed = parse_task_type(s);
  if (!parsed) throw ConfigError("unknown task '" + s + "'");
  t = *parsed;
}

void to_json(json& j, const HideStrategy& s) {
  j = json{{"kind", s.kind() == HideKind::kGenerative ? "generative"
                                                      : "label_based"}};
  if (s.placeholder_mode()) {
    j["placeholder_mode"] =
        *s.placeholder_mode() == PlaceholderMode::kBare ? "bare" : "indexed";
  }
}

void from_json(const json& j, HideStrategy& s) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "generative") {
    if (j.contains("placeholder_mode")) {
      throw ConfigError("placeholder_mode is only valid for label_based");
    }
    s = HideStrategy::generative();
  } else if (kind == "label_based") {
    const auto mode = j.at("placeholder_mode").get<std::string>();
    if (mode == "bare") {
      s = HideStrategy::label_based(PlaceholderMode::kBare);
    } else if (mode == "indexed") {
      s = HideStrategy::label_based(PlaceholderMode::kIndexed);
    } else {
      throw ConfigError("unknown placeholder_mode '" + mode + "'");
    }
  } else {
    throw ConfigError("unknown strategy kind '" + kind + "'");
  }
}

void to_json(json& j, const EntitySpan& s) {
  j = json{{"start", s.start},
           {"end", s.end},
           {"surface", s.surface},
           {"type", s.etype},
           {"source", std::string(to_string(s.source))}};
}

void from_json(const json& j, EntitySpan& s) {
  j.at("start").get_to(s.start);
  j.at("end").get_to(s.end);
  j.at("surface").get_to(s.surface);
  j.at("type").get_to(s.etype);
  s.source = SpanSource::kAuto;
  if (j.contains("source")) {
    auto src = parse_span_source(j.at("source").get<std::string>());
    if (!src) throw ConfigError("unknown span source");
    s.source = *src;
  }
}

void to_json(json& j, const MappingEntry& e) {
  j = json{{"original", e.original}, {"surrogate", e.surrogate}, {"type", e.etype}};
}

void from_json(const json& j, MappingEntry& e) {
  j.at("original").get_to(e.original);
  j.at("surrogate").get_to(e.surrogate);
  j.at("type").get_to(e.etype);
}

void to_json(json& j, const EntityMapping& m) {
  j = json{{"entries", m.entries}, {"strategy", m.strategy}, {"seed", m.seed}};
}

void from_json(const json& j, EntityMapping& m) {
  j.at("entries").get_to(m.entries);
  j.at("strategy").get_to(m.strategy);
  j.at("seed").get_to(m.seed);
}

void to_json(json& j, const AnonymizedDocument& d) {
  j = json{{"c", d.original},
           {"e", d.anonymized},
           {"mapping", d.mapping},
           {"p", d.spans}};
}

void from_json(const json& j, AnonymizedDocument& d) {
  j.at("c").get_to(d.original);
  j.at("e").get_to(d.anonymized);
  j.at("mapping").get_to(d.mapping);
  j.at("p").get_to(d.spans);
}

void to_json(json& j, const SeekMatch& m) {
  j = json{{"surrogate", m.surrogate},
           {"matched_segment", m.matched_segment},
           {"confidence", m.confidence}};
}

void from_json(const json& j, SeekMatch& m) {
  j.at("surrogate").get_to(m.surrogate);
  j.at("matched_segment").get_to(m.matched_segment);
  j.at("confidence").get_to(m.confidence);
}

void to_json(json& j, const SeekResult& r) {
  j = json{{"d", r.text},
           {"restored", r.restored},
           {"unresolved", r.unresolved},
           {"extraneous", r.extraneous},
           {"matches", r.matches}};
}

void from_json(const json& j, SeekResult& r) {
  j.at("d").get_to(r.text);
  j.at("restored").get_to(r.restored);
  j.at("unresolved").get_to(r.unresolved);
  r.extraneous.clear();
  if (j.contains("extraneous")) j.at("extraneous").get_to(r.extraneous);
  j.at("matches").get_to(r.matches);
}

void to_json(json& j, const PipelineRecord& r) {
  j = json{{"c", r.c}, {"p", r.p}};
  if (r.s) j["s"] = *r.s;
  if (r.e) j["e"] = *r.e;
  if (r.l) j["l"] = *r.l;
  if (r.r) j["r"] = *r.r;
  if (r.d) j["d"] = *r.d;
  j["task"] = r.task;
}

void from_json(const json& j, PipelineRecord& r) {
  j.at("c").get_to(r.c);
  j.at("p").get_to(r.p);
  auto opt = [&](const char* key, std::optional<std::string>& field) {
    if (j.contains(key)) {
      field = j.at(key).get<std::string>();
    } else {
      field.reset();
    }
  };
  opt("s", r.s);
  opt("e", r.e);
  opt("l", r.l);
  opt("r", r.r);
  opt("d", r.d);
  j.at("task").get_to(r.task);
}

}  // namespace has
