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

#ifndef HAS_VALIDATE_HPP_
#define HAS_VALIDATE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "has/types.hpp"

namespace has {

// Names of the machine-checkable invariants, as they appear in reports.
namespace invariant {
inline constexpr std::string_view kSpanOffsets = "EntitySpan.offsets";
inline constexpr std::string_view kSpanSurface = "EntitySpan.surface";
inline constexpr std::string_view kSpanOrder = "EntitySpan.sorted_non_overlapping";
inline constexpr std::string_view kDistinctOriginals = "EntityMapping.distinct_originals";
inline constexpr std::string_view kDistinctSurrogates = "EntityMapping.distinct_surrogates";
inline constexpr std::string_view kCollisionFree = "EntityMapping.collision_free";
inline constexpr std::string_view kPlaceholderForm = "EntityMapping.placeholder_form";
inline constexpr std::string_view kRoundTrip = "AnonymizedDocument.round_trip";
inline constexpr std::string_view kLeakageFree = "AnonymizedDocument.leakage_free";
inline constexpr std::string_view kStageOrder = "PipelineRecord.stage_order";
}  // namespace invariant

struct Violation {
  std::string invariant;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

bool mentions(const ValidationReport& report, std::string_view invariant);

ValidationReport validate_spans(std::string_view text,
                                const std::vector<EntitySpan>& spans);
ValidationReport validate(const EntityMapping& mapping);
ValidationReport validate(const AnonymizedDocument& doc);
ValidationReport validate_record(const PipelineRecord& rec);

// "<CODE>" or "<CODE_k>" with k a positive decimal index.
struct Placeholder {
  EntityType etype = EntityType::kOrg;
  std::size_t index = 0;  // 0 for the bare form
};
std::string render_placeholder(EntityType etype, std::size_t index = 0);
// Parses a whole token including the angle brackets.
std::optional<Placeholder> parse_placeholder(std::string_view token);
// Length of a placeholder-shaped token "<" [A-Z][A-Z0-9_]* ">" starting at
// `pos`, or 0. The code inside need not be a known type.
std::size_t placeholder_shape_at(std::string_view s, std::size_t pos);

// Inverse substitution used by the round-trip invariant: surrogates are
// replaced by their originals in a single pass, longest surrogate first.
std::string invert_mapping(std::string_view anonymized,
                           const EntityMapping& mapping);

}  // namespace has

#endif  // HAS_VALIDATE_HPP_
