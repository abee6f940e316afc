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

// Anonymization of a document given its entity spans, with placeholder
// labels or with seeded same-type surrogates.

#ifndef HAS_HIDE_HPP_
#define HAS_HIDE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "has/recognizer.hpp"
#include "has/types.hpp"
#include "json.hpp"

namespace has {

class HideError : public Error {
 public:
  using Error::Error;
};

// No acceptable surrogate left in the pool of `etype`.
class PoolExhaustedError : public HideError {
 public:
  explicit PoolExhaustedError(EntityType etype);
  EntityType etype() const { return etype_; }

 private:
  EntityType etype_;
};

class ForcedMappingError : public HideError {
 public:
  using HideError::HideError;
};

struct SurrogatePolicy {
  std::uint64_t seed = 0;
  // Overrides the shipped pool of a type.
  std::map<EntityType, Gazetteer> surrogate_gazetteers;
  double numeric_jitter = 0.5;
  int date_shift_days = 400;

  // Throws ConfigError on a degenerate range.
  void check() const;
  const std::vector<std::string>& pool(EntityType etype) const;

  // Keys: seed, numeric_jitter, date_shift_days, surrogates.<TYPE> (path).
  static SurrogatePolicy from_json(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir = {});
};

struct HideConfig {
  HideStrategy strategy = HideStrategy::generative();
  SurrogatePolicy policy;
};

// Every token-bounded occurrence of a span's surface becomes a span too, so
// repeated mentions are hidden even when only one was marked. Given spans
// always win over added ones.
std::vector<EntitySpan> expand_spans(std::string_view c,
                                     const std::vector<EntitySpan>& spans);

// `prior` carries entries of an earlier document sharing the numbering;
// an original already present there keeps its placeholder.
AnonymizedDocument hide_label(std::string_view c,
                              const std::vector<EntitySpan>& spans,
                              PlaceholderMode mode,
                              const std::vector<MappingEntry>& prior = {});

// `forced` entries are used verbatim for originals present in the spans;
// the rest only reserve their surfaces.
AnonymizedDocument hide_generative(std::string_view c,
                                   const std::vector<EntitySpan>& spans,
                                   const SurrogatePolicy& policy,
                                   const std::vector<MappingEntry>& forced = {});

AnonymizedDocument hide(std::string_view c, const std::vector<EntitySpan>& spans,
                        const HideConfig& config,
                        const std::vector<MappingEntry>& forced = {});

// The surrogate a generative hide assigns to `original` when nothing in
// the document collides with it. Exposed for the informed attacker.
std::string codebook_surrogate(std::string_view original, EntityType etype,
                               const SurrogatePolicy& policy);

struct LeakageReport {
  std::vector<std::string> leaked;
  bool ok() const { return leaked.empty(); }
};

// Originals occurring token-bounded in `text`, in the given order.
LeakageReport find_leaks(std::string_view text,
                         const std::vector<std::string>& originals);
LeakageReport assert_leakage_free(const AnonymizedDocument& doc);

}  // namespace has

#endif  // HAS_HIDE_HPP_
