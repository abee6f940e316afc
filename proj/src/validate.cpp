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

#include "has/validate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "has/hide.hpp"
#include "has/text.hpp"

namespace has {
namespace {

void add(ValidationReport& report, std::string_view inv, std::string detail) {
  report.push_back(Violation{std::string(inv), std::move(detail)});
}

}  // namespace

bool mentions(const ValidationReport& report, std::string_view inv) {
  return std::any_of(report.begin(), report.end(),
                     [&](const Violation& v) { return v.invariant == inv; });
}

ValidationReport validate_spans(std::string_view text,
                                const std::vector<EntitySpan>& spans) {
  ValidationReport report;
  text::Utf8Index index(text);
  const std::size_t n = index.size_chars();
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const EntitySpan& s = spans[i];
    if (!(s.start < s.end && s.end <= n)) {
      add(report, invariant::kSpanOffsets,
          "span " + std::to_string(i) + " [" + std::to_string(s.start) + ", " +
              std::to_string(s.end) + ") outside text of length " +
              std::to_string(n));
      continue;
    }
    const std::size_t b = index.byte_offset(s.start);
    const std::size_t e = index.byte_offset(s.end);
    if (text.substr(b, e - b) != s.surface) {
      add(report, invariant::kSpanSurface,
          "span " + std::to_string(i) + " surface does not match text");
    }
    if (i > 0) {
      const EntitySpan& prev = spans[i - 1];
      if (prev.start > s.start || prev.end > s.start) {
        add(report, invariant::kSpanOrder,
            "spans " + std::to_string(i - 1) + " and " + std::to_string(i) +
                " are unsorted or overlap");
      }
    }
  }
  return report;
}

ValidationReport validate(const EntityMapping& mapping) {
  ValidationReport report;
  const bool bare = mapping.strategy.is_label_based() &&
                    mapping.strategy.placeholder_mode() == PlaceholderMode::kBare;

  std::unordered_set<std::string> originals;
  std::unordered_set<std::string> folded_originals;
  for (const MappingEntry& e : mapping.entries) {
    if (!originals.insert(e.original).second) {
      add(report, invariant::kDistinctOriginals,
          "original '" + e.original + "' appears twice");
    }
    folded_originals.insert(text::fold_case(e.original));
  }

  std::unordered_set<std::string> surrogates;
  for (const MappingEntry& e : mapping.entries) {
    // Bare placeholders repeat by construction.
    if (!bare && !surrogates.insert(e.surrogate).second) {
      add(report, invariant::kDistinctSurrogates,
          "surrogate '" + e.surrogate + "' appears twice");
    }
    if (folded_originals.count(text::fold_case(e.surrogate)) > 0) {
      add(report, invariant::kCollisionFree,
          "surrogate '" + e.surrogate + "' equals an original");
    }
    if (mapping.strategy.is_label_based()) {
      auto ph = parse_placeholder(e.surrogate);
      const bool indexed =
          mapping.strategy.placeholder_mode() == PlaceholderMode::kIndexed;
      if (!ph || ph->etype != e.etype || (ph->index != 0) != indexed) {
        add(report, invariant::kPlaceholderForm,
            "surrogate '" + e.surrogate + "' is not a " +
                std::string(indexed ? "<CODE_k>" : "<CODE>") +
                " placeholder of type " + std::string(to_string(e.etype)));
      }
    }
  }
  return report;
}

ValidationReport validate(const AnonymizedDocument& doc) {
  ValidationReport report = validate_spans(doc.original, doc.spans);
  ValidationReport m = validate(doc.mapping);
  report.insert(report.end(), m.begin(), m.end());
  if (doc.mapping.strategy.kind() == HideKind::kGenerative &&
      invert_mapping(doc.anonymized, doc.mapping) != doc.original) {
    add(report, invariant::kRoundTrip,
        "inverse substitution does not reproduce the original");
  }
  LeakageReport leak = assert_leakage_free(doc);
  for (const std::string& s : leak.leaked) {
    add(report, invariant::kLeakageFree, "original '" + s + "' leaked");
  }
  return report;
}

ValidationReport validate_record(const PipelineRecord& rec) {
  ValidationReport report = validate_spans(rec.c, rec.p);
  auto need = [&](bool has_field, bool has_dep, std::string_view field,
                  std::string_view dep) {
    if (has_field && !has_dep) {
      add(report, invariant::kStageOrder,
          std::string(field) + " is set but " + std::string(dep) + " is not");
    }
  };
  need(rec.l.has_value(), rec.e.has_value(), "l", "e");
  need(rec.r.has_value(), rec.l.has_value(), "r", "l");
  need(rec.d.has_value(), rec.l.has_value(), "d", "l");
  return report;
}

std::string render_placeholder(EntityType etype, std::size_t index) {
  std::string out = "<";
  out.append(to_string(etype));
  if (index > 0) {
    out.push_back('_');
    out.append(std::to_string(index));
  }
  out.push_back('>');
  return out;
}

std::optional<Placeholder> parse_placeholder(std::string_view token) {
  if (token.size() < 3 || token.front() != '<' || token.back() != '>') {
    return std::nullopt;
  }
  std::string_view body = token.substr(1, token.size() - 2);
  if (auto t = parse_entity_type(body)) return Placeholder{*t, 0};
  const std::size_t us = body.rfind('_');
  if (us == std::string_view::npos || us + 1 >= body.size()) {
    return std::nullopt;
  }
  std::string_view digits = body.substr(us + 1);
  if (!std::all_of(digits.begin(), digits.end(), text::is_digit) ||
      digits.front() == '0' || digits.size() > 9) {
    return std::nullopt;
  }
  auto t = parse_entity_type(body.substr(0, us));
  if (!t) return std::nullopt;
  return Placeholder{*t, static_cast<std::size_t>(std::stoul(std::string(digits)))};
}

std::size_t placeholder_shape_at(std::string_view s, std::size_t pos) {
  if (pos + 2 >= s.size() || s[pos] != '<') return 0;
  std::size_t i = pos + 1;
  if (!(s[i] >= 'A' && s[i] <= 'Z')) return 0;
  while (i < s.size() && i - pos < 48 &&
         ((s[i] >= 'A' && s[i] <= 'Z') || s[i] == '_' || text::is_digit(s[i]))) {
    ++i;
  }
  if (i >= s.size() || s[i] != '>') return 0;
  return i + 1 - pos;
}

std::string invert_mapping(std::string_view anonymized,
                           const EntityMapping& mapping) {
  std::vector<std::string> surrogates;
  surrogates.reserve(mapping.entries.size());
  for (const MappingEntry& e : mapping.entries) surrogates.push_back(e.surrogate);
  text::PatternSet set(surrogates, {});
  auto hits = set.scan(anonymized);
  return text::splice(anonymized, hits, [&](const text::PatternHit& h) {
    return mapping.entries[h.pattern].original;
  });
}

}  // namespace has
