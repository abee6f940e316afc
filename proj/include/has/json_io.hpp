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

// JSON shapes of the core types. Record field names are fixed:
// c, p, s, e, l, r, d, task.

#ifndef HAS_JSON_IO_HPP_
#define HAS_JSON_IO_HPP_

#include "has/types.hpp"
#include "json.hpp"

namespace has {

void to_json(nlohmann::json& j, EntityType t);
void from_json(const nlohmann::json& j, EntityType& t);
void to_json(nlohmann::json& j, TaskType t);
void from_json(const nlohmann::json& j, TaskType& t);
void to_json(nlohmann::json& j, const HideStrategy& s);
void from_json(const nlohmann::json& j, HideStrategy& s);
void to_json(nlohmann::json& j, const EntitySpan& s);
void from_json(const nlohmann::json& j, EntitySpan& s);
void to_json(nlohmann::json& j, const MappingEntry& e);
void from_json(const nlohmann::json& j, MappingEntry& e);
void to_json(nlohmann::json& j, const EntityMapping& m);
void from_json(const nlohmann::json& j, EntityMapping& m);
void to_json(nlohmann::json& j, const AnonymizedDocument& d);
void from_json(const nlohmann::json& j, AnonymizedDocument& d);
void to_json(nlohmann::json& j, const SeekMatch& m);
void from_json(const nlohmann::json& j, SeekMatch& m);
void to_json(nlohmann::json& j, const SeekResult& r);
void from_json(const nlohmann::json& j, SeekResult& r);
void to_json(nlohmann::json& j, const PipelineRecord& r);
void from_json(const nlohmann::json& j, PipelineRecord& r);

}  // namespace has

#endif  // HAS_JSON_IO_HPP_
