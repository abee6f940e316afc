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

#ifndef HAS_TYPES_HPP_
#define HAS_TYPES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace has {

// Base for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// The fourteen privacy entity categories.
enum class EntityType : std::uint8_t {
  kDate,
  kMoney,
  kPercent,
  kQuantity,
  kTime,
  kGpe,
  kLoc,
  kPerson,
  kWorkOfArt,
  kOrg,
  kNorp,
  kLaw,
  kFac,
  kLanguage,
};

inline constexpr std::array<EntityType, 14> kAllEntityTypes = {
    EntityType::kDate,   EntityType::kMoney,     EntityType::kPercent,
    EntityType::kQuantity, EntityType::kTime,    EntityType::kGpe,
    EntityType::kLoc,    EntityType::kPerson,    EntityType::kWorkOfArt,
    EntityType::kOrg,    EntityType::kNorp,      EntityType::kLaw,
    EntityType::kFac,    EntityType::kLanguage,
};

std::string_view to_string(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view code);
// Throws ConfigError on an unknown code.
EntityType entity_type_from_string(std::string_view code);

// Numeric, date and time entities get format-preserving surrogates.
bool is_rule_type(EntityType type);

enum class SpanSource : std::uint8_t { kAuto, kManual };

std::string_view to_string(SpanSource source);
std::optional<SpanSource> parse_span_source(std::string_view s);

// A located entity. Offsets count Unicode scalar values, end is exclusive.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
  EntityType etype = EntityType::kOrg;
  SpanSource source = SpanSource::kAuto;

  std::size_t length() const { return end - start; }
  bool overlaps(const EntitySpan& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const EntitySpan&) const = default;
};

enum class HideKind : std::uint8_t { kLabelBased, kGenerative };
enum class PlaceholderMode : std::uint8_t { kBare, kIndexed };

// Placeholder mode exists exactly when the kind is label based; the
// factories are the only way to build one.
class HideStrategy {
 public:
  HideStrategy() = default;

  static HideStrategy label_based(PlaceholderMode mode) {
    return HideStrategy(HideKind::kLabelBased, mode);
  }
  static HideStrategy generative() {
    return HideStrategy(HideKind::kGenerative, std::nullopt);
  }

  HideKind kind() const { return kind_; }
  std::optional<PlaceholderMode> placeholder_mode() const { return mode_; }
  bool is_label_based() const { return kind_ == HideKind::kLabelBased; }

  // "generative", "label" (bare) or "label-indexed".
  std::string name() const;
  static HideStrategy parse(std::string_view name);

  bool operator==(const HideStrategy&) const = default;

 private:
  HideStrategy(HideKind kind, std::optional<PlaceholderMode> mode)
      : kind_(kind), mode_(mode) {}

  HideKind kind_ = HideKind::kGenerative;
  std::optional<PlaceholderMode> mode_;
};

struct MappingEntry {
  std::string original;
  std::string surrogate;
  EntityType etype = EntityType::kOrg;

  bool operator==(const MappingEntry&) const = default;
};

// The original <-> surrogate table recorded at hide time. It never leaves
// the device.
struct EntityMapping {
  std::vector<MappingEntry> entries;
  HideStrategy strategy;
  std::uint64_t seed = 0;

  const MappingEntry* find_original(std::string_view original) const;
  bool operator==(const EntityMapping&) const = default;
};

struct AnonymizedDocument {
  std::string original;    // c
  std::string anonymized;  // e
  EntityMapping mapping;
  std::vector<EntitySpan> spans;  // located in `original`

  bool operator==(const AnonymizedDocument&) const = default;
};

enum class TaskType : std::uint8_t { kTranslate, kAbstract, kPolish, kClassify };

std::string_view to_string(TaskType task);
std::optional<TaskType> parse_task_type(std::string_view s);

struct SeekMatch {
  std::string surrogate;
  std::string matched_segment;
  double confidence = 1.0;

  bool operator==(const SeekMatch&) const = default;
};

struct SeekResult {
  std::string text;  // d
  std::size_t restored = 0;
  // Surrogates of mapping entries that were not found in the LLM output.
  std::vector<std::string> unresolved;
  // Placeholder-shaped tokens in the LLM output with no mapping entry.
  std::vector<std::string> extraneous;
  std::vector<SeekMatch> matches;

  bool operator==(const SeekResult&) const = default;
};

// One corpus row carrying c, P(c) and every derived text.
struct PipelineRecord {
  std::string c;
  std::vector<EntitySpan> p;
  std::optional<std::string> s;
  std::optional<std::string> e;
  std::optional<std::string> l;
  std::optional<std::string> r;
  std::optional<std::string> d;
  TaskType task = TaskType::kTranslate;

  bool operator==(const PipelineRecord&) const = default;
};

}  // namespace has

#endif  // HAS_TYPES_HPP_
