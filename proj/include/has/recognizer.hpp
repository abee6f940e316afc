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

// Privacy entity extraction: format rules for DATE, TIME, MONEY, PERCENT and
// QUANTITY, gazetteers for the named types, optional user regexes. Matches
// are anchored on token boundaries and overlaps resolve longest-first.

#ifndef HAS_RECOGNIZER_HPP_
#define HAS_RECOGNIZER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "has/types.hpp"
#include "json.hpp"

namespace has {

const std::vector<std::string>& starter_entries(EntityType type);
const std::vector<std::string>& starter_surrogates(EntityType type);

// A list of surface strings of one type. Entries are trimmed, deduplicated
// and sorted; an empty or whitespace-only entry is rejected.
class Gazetteer {
 public:
  Gazetteer(EntityType etype, std::vector<std::string> entries);

  // UTF-8, one entry per line, '#' starts a comment line.
  static Gazetteer load(const std::filesystem::path& path, EntityType etype);
  static Gazetteer starter(EntityType etype);

  EntityType etype() const { return etype_; }
  const std::vector<std::string>& entries() const { return entries_; }

 private:
  EntityType etype_;
  std::vector<std::string> entries_;
};

struct CustomPattern {
  EntityType etype = EntityType::kOrg;
  std::string pattern;  // ECMAScript regex
};

struct RecognizerConfig {
  std::set<EntityType> enabled_types{kAllEntityTypes.begin(),
                                     kAllEntityTypes.end()};
  std::map<EntityType, std::filesystem::path> gazetteer_paths;
  // Programmatic additions, same role as gazetteer files.
  std::map<EntityType, std::vector<std::string>> extra_entries;
  std::vector<CustomPattern> custom_patterns;
  bool use_starter_gazetteers = true;

  // Keys: enabled_types, gazetteers.<TYPE>, patterns[{type, pattern}],
  // starter_gazetteers. Relative paths resolve against `base_dir`.
  static RecognizerConfig from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir = {});
};

// Compiled recognizer. Immutable after construction and safe to share
// across threads. Configuration problems surface here, never in recognize.
class Recognizer {
 public:
  explicit Recognizer(RecognizerConfig config = {});

  std::vector<EntitySpan> recognize(std::string_view text) const;
  const RecognizerConfig& config() const { return config_; }

 private:
  struct GazEntry {
    std::string surface;
    EntityType etype;
  };
  struct CompiledPattern {
    EntityType etype;
    std::regex re;
  };

  RecognizerConfig config_;
  std::vector<GazEntry> gaz_;
  // First word of an entry -> entry indices, longest first.
  std::unordered_map<std::string, std::vector<std::size_t>> gaz_index_;
  std::vector<CompiledPattern> patterns_;
};

std::vector<EntitySpan> recognize(std::string_view text,
                                  const RecognizerConfig& config);

// Two manual spans overlap.
class SpanConflictError : public Error {
 public:
  SpanConflictError(EntitySpan first, EntitySpan second);
  const EntitySpan& first() const { return first_; }
  const EntitySpan& second() const { return second_; }

 private:
  EntitySpan first_;
  EntitySpan second_;
};

// Union of both lists. Manual spans always survive; auto spans overlapping a
// manual one are dropped; among auto overlaps the longest wins, ties going
// to the smaller start.
std::vector<EntitySpan> merge_spans(const std::vector<EntitySpan>& automatic,
                                    const std::vector<EntitySpan>& manual);

// Longest-first greedy selection of non-overlapping spans, sorted by start.
std::vector<EntitySpan> resolve_overlaps(std::vector<EntitySpan> candidates);

// Case-sensitive, first-occurrence order.
std::vector<std::string> dedup_surfaces(const std::vector<EntitySpan>& spans);

// Every occurrence of `surface` in `text` as a span (character offsets).
// Occurrences need not be token bounded.
std::vector<EntitySpan> spans_for_surface(std::string_view text,
                                          std::string_view surface,
                                          EntityType etype,
                                          SpanSource source = SpanSource::kManual);

}  // namespace has

#endif  // HAS_RECOGNIZER_HPP_
