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

#include "has/hide.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "has/text.hpp"
#include "has/validate.hpp"
#include "rng.hpp"
#include "surrogate_formats.hpp"

namespace has {
namespace {

constexpr int kMaxRounds = 8;
constexpr int kFormatTries = 48;

struct ByteSpan {
  std::size_t begin;
  std::size_t end;
  std::size_t original;  // index into the distinct originals
};

struct Original {
  std::string surface;
  EntityType etype;
};

// Distinct originals in first-occurrence order plus the byte spans.
struct Layout {
  std::vector<Original> originals;
  std::vector<ByteSpan> spans;
  std::vector<EntitySpan> char_spans;
};

void check_spans(std::string_view c, const std::vector<EntitySpan>& spans) {
  ValidationReport report = validate_spans(c, spans);
  if (!report.empty()) {
    throw HideError("invalid spans: " + report.front().invariant + ": " +
                    report.front().detail);
  }
}

Layout layout_for(std::string_view c, const std::vector<EntitySpan>& spans) {
  check_spans(c, spans);
  Layout out;
  out.char_spans = expand_spans(c, spans);
  text::Utf8Index index(c);
  std::unordered_map<std::string_view, std::size_t> seen;
  for (const EntitySpan& s : out.char_spans) {
    auto [it, inserted] = seen.emplace(s.surface, out.originals.size());
    if (inserted) out.originals.push_back(Original{s.surface, s.etype});
    out.spans.push_back(
        ByteSpan{index.byte_offset(s.start), index.byte_offset(s.end), it->second});
  }
  return out;
}

std::string splice_layout(std::string_view c, const Layout& layout,
                          const std::vector<std::string>& replacement) {
  std::string out;
  out.reserve(c.size() + c.size() / 4);
  std::size_t cursor = 0;
  for (const ByteSpan& s : layout.spans) {
    out.append(c.substr(cursor, s.begin - cursor));
    out.append(replacement[s.original]);
    cursor = s.end;
  }
  out.append(c.substr(cursor));
  return out;
}

// Text outside every span, with a separator no surrogate can contain.
std::string residual_text(std::string_view c, const Layout& layout) {
  std::string out;
  std::size_t cursor = 0;
  for (const ByteSpan& s : layout.spans) {
    out.append(c.substr(cursor, s.begin - cursor));
    out.push_back('\0');
    cursor = s.end;
  }
  out.append(c.substr(cursor));
  return out;
}

std::uint64_t type_salt(EntityType t) {
  return 0x5eed0000ULL + static_cast<std::uint64_t>(t);
}

// Candidate surrogates for one original, in a seeded order. Rule types try
// the format-preserving generator first and fall back to the pool.
class CandidateStream {
 public:
  CandidateStream(std::string_view original, EntityType etype,
                  const SurrogatePolicy& policy, int round)
      : original_(original), etype_(etype), policy_(policy), round_(round) {
    format_ok_ = is_rule_type(etype);
  }

  std::optional<std::string> next() {
    while (format_ok_ && format_tries_ < kFormatTries) {
      Rng rng(derive_seed(policy_.seed, type_salt(etype_), original_,
                          static_cast<std::uint64_t>(round_) * 1000 + format_tries_));
      ++format_tries_;
      std::optional<std::string> v = format_candidate(rng);
      if (!v) {
        format_ok_ = false;
        break;
      }
      return v;
    }
    if (!pool_ready_) init_pool();
    if (pool_pos_ >= order_.size()) return std::nullopt;
    return (*pool_)[order_[pool_pos_++]];
  }

 private:
  std::optional<std::string> format_candidate(Rng& rng) const {
    switch (etype_) {
      case EntityType::kMoney:
      case EntityType::kPercent:
      case EntityType::kQuantity:
        return formats::jitter_number(original_, rng, policy_.numeric_jitter);
      case EntityType::kDate:
        return formats::shift_date(original_, rng, policy_.date_shift_days);
      case EntityType::kTime:
        return formats::shift_time(original_, rng);
      default:
        return std::nullopt;
    }
  }

  void init_pool() {
    pool_ready_ = true;
    pool_ = &policy_.pool(etype_);
    order_.resize(pool_->size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    Rng rng(derive_seed(policy_.seed, type_salt(etype_) ^ 0xabcdULL, original_,
                        static_cast<std::uint64_t>(round_)));
    for (std::size_t i = order_.size(); i > 1; --i) {
      std::swap(order_[i - 1], order_[rng.below(i)]);
    }
  }

  std::string_view original_;
  EntityType etype_;
  const SurrogatePolicy& policy_;
  int round_;
  bool format_ok_ = false;
  int format_tries_ = 0;
  bool pool_ready_ = false;
  const std::vector<std::string>* pool_ = nullptr;
  std::vector<std::size_t> order_;
  std::size_t pool_pos_ = 0;
};

bool contains_bounded(std::string_view haystack, std::string_view needle) {
  return !text::find_bounded(haystack, needle).empty();
}

}  // namespace

PoolExhaustedError::PoolExhaustedError(EntityType etype)
    : HideError("surrogate pool exhausted for type " +
                std::string(to_string(etype))),
      etype_(etype) {}

void SurrogatePolicy::check() const {
  if (!(numeric_jitter > 0.05 && numeric_jitter <= 1.0)) {
    throw ConfigError("numeric_jitter must lie in (0.05, 1]");
  }
  if (date_shift_days < 1) {
    throw ConfigError("date_shift_days must be at least 1");
  }
}

const std::vector<std::string>& SurrogatePolicy::pool(EntityType etype) const {
  auto it = surrogate_gazetteers.find(etype);
  if (it != surrogate_gazetteers.end()) return it->second.entries();
  return starter_surrogates(etype);
}

SurrogatePolicy SurrogatePolicy::from_json(const nlohmann::json& j,
                                           const std::filesystem::path& base) {
  SurrogatePolicy p;
  try {
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("numeric_jitter")) {
      p.numeric_jitter = j.at("numeric_jitter").get<double>();
    }
    if (j.contains("date_shift_days")) {
      p.date_shift_days = j.at("date_shift_days").get<int>();
    }
    if (j.contains("surrogates")) {
      for (const auto& [code, path] : j.at("surrogates").items()) {
        std::filesystem::path fp(path.get<std::string>());
        if (fp.is_relative() && !base.empty()) fp = base / fp;
        const EntityType t = entity_type_from_string(code);
        p.surrogate_gazetteers.emplace(t, Gazetteer::load(fp, t));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("hide policy: ") + e.what());
  }
  p.check();
  return p;
}

std::vector<EntitySpan> expand_spans(std::string_view c,
                                     const std::vector<EntitySpan>& spans) {
  if (spans.empty()) return {};
  text::Utf8Index index(c);
  std::vector<char> used(c.size(), 0);
  for (const EntitySpan& s : spans) {
    std::fill(used.begin() + static_cast<std::ptrdiff_t>(index.byte_offset(s.start)),
              used.begin() + static_cast<std::ptrdiff_t>(index.byte_offset(s.end)), 1);
  }
  std::vector<const EntitySpan*> firsts;
  std::unordered_set<std::string_view> seen;
  for (const EntitySpan& s : spans) {
    if (seen.insert(s.surface).second) firsts.push_back(&s);
  }
  std::stable_sort(firsts.begin(), firsts.end(),
                   [](const EntitySpan* a, const EntitySpan* b) {
                     return a->surface.size() > b->surface.size();
                   });
  std::vector<EntitySpan> out = spans;
  for (const EntitySpan* f : firsts) {
    for (std::size_t pos : text::find_bounded(c, f->surface)) {
      const std::size_t end = pos + f->surface.size();
      bool free = std::none_of(used.begin() + static_cast<std::ptrdiff_t>(pos),
                               used.begin() + static_cast<std::ptrdiff_t>(end),
                               [](char u) { return u != 0; });
      if (!free) continue;
      std::fill(used.begin() + static_cast<std::ptrdiff_t>(pos),
                used.begin() + static_cast<std::ptrdiff_t>(end), 1);
      out.push_back(EntitySpan{index.char_offset(pos), index.char_offset(end),
                               f->surface, f->etype, f->source});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  return out;
}

AnonymizedDocument hide_label(std::string_view c,
                              const std::vector<EntitySpan>& spans,
                              PlaceholderMode mode,
                              const std::vector<MappingEntry>& prior) {
  AnonymizedDocument doc;
  doc.original = std::string(c);
  doc.mapping.strategy = HideStrategy::label_based(mode);
  Layout layout = layout_for(c, spans);

  std::map<EntityType, std::size_t> next_index;
  std::unordered_map<std::string_view, const MappingEntry*> prior_by_original;
  for (const MappingEntry& e : prior) {
    prior_by_original.emplace(e.original, &e);
    if (auto ph = parse_placeholder(e.surrogate)) {
      next_index[ph->etype] = std::max(next_index[ph->etype], ph->index);
    }
  }

  std::vector<std::string> replacement;
  for (const Original& o : layout.originals) {
    std::string surrogate;
    EntityType etype = o.etype;
    auto it = prior_by_original.find(o.surface);
    if (it != prior_by_original.end()) {
      surrogate = it->second->surrogate;
      etype = it->second->etype;
    } else if (mode == PlaceholderMode::kBare) {
      surrogate = render_placeholder(o.etype);
    } else {
      surrogate = render_placeholder(o.etype, ++next_index[o.etype]);
    }
    replacement.push_back(surrogate);
    doc.mapping.entries.push_back(MappingEntry{o.surface, surrogate, etype});
  }
  doc.anonymized = splice_layout(c, layout, replacement);
  doc.spans = std::move(layout.char_spans);
  return doc;
}

AnonymizedDocument hide_generative(std::string_view c,
                                   const std::vector<EntitySpan>& spans,
                                   const SurrogatePolicy& policy,
                                   const std::vector<MappingEntry>& forced) {
  policy.check();
  AnonymizedDocument doc;
  doc.original = std::string(c);
  doc.mapping.strategy = HideStrategy::generative();
  doc.mapping.seed = policy.seed;
  Layout layout = layout_for(c, spans);
  const std::size_t n = layout.originals.size();

  std::unordered_map<std::string, std::size_t> folded_originals;
  for (std::size_t i = 0; i < n; ++i) {
    folded_originals.emplace(text::fold_case(layout.originals[i].surface), i);
  }

  // Validate the forced entries against each other and the document.
  std::unordered_map<std::string_view, const MappingEntry*> forced_by_original;
  std::unordered_set<std::string> reserved;  // folded
  std::set<std::string> forced_surrogates;
  for (const MappingEntry& f : forced) {
    if (!forced_by_original.emplace(f.original, &f).second) {
      throw ForcedMappingError("forced mapping lists '" + f.original + "' twice");
    }
    if (!forced_surrogates.insert(f.surrogate).second) {
      throw ForcedMappingError("forced surrogate '" + f.surrogate +
                               "' is used for two originals");
    }
    if (f.surrogate.empty()) {
      throw ForcedMappingError("forced surrogate for '" + f.original + "' is empty");
    }
  }
  for (const MappingEntry& f : forced) {
    const std::string folded = text::fold_case(f.surrogate);
    auto clash = folded_originals.find(folded);
    if (clash != folded_originals.end() ||
        std::any_of(forced.begin(), forced.end(), [&](const MappingEntry& g) {
          return text::fold_case(g.original) == folded;
        })) {
      throw ForcedMappingError("forced surrogate '" + f.surrogate +
                               "' collides with an original");
    }
    reserved.insert(folded);
    reserved.insert(text::fold_case(f.original));
  }
  for (const Original& o : layout.originals) {
    auto it = forced_by_original.find(o.surface);
    if (it != forced_by_original.end() && it->second->etype != o.etype) {
      throw ForcedMappingError("forced entry '" + o.surface + "' has type " +
                               std::string(to_string(it->second->etype)) +
                               " but the span has type " +
                               std::string(to_string(o.etype)));
    }
  }

  const std::string residual = residual_text(c, layout);
  std::vector<std::string> originals;
  originals.reserve(n);
  for (const Original& o : layout.originals) originals.push_back(o.surface);

  std::string last_failure;
  for (int round = 0; round < kMaxRounds; ++round) {
    std::vector<std::string> surrogate(n);
    std::unordered_set<std::string> used = reserved;
    for (std::size_t i = 0; i < n; ++i) {
      auto it = forced_by_original.find(layout.originals[i].surface);
      if (it != forced_by_original.end()) surrogate[i] = it->second->surrogate;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!surrogate[i].empty()) continue;
      const Original& o = layout.originals[i];
      CandidateStream stream(o.surface, o.etype, policy, round);
      for (;;) {
        std::optional<std::string> cand = stream.next();
        if (!cand) throw PoolExhaustedError(o.etype);
        if (cand->empty()) continue;
        std::string folded = text::fold_case(*cand);
        if (folded_originals.count(folded) || used.count(folded)) continue;
        if (residual.find(*cand) != std::string::npos) continue;
        bool leaks = std::any_of(originals.begin(), originals.end(),
                                 [&](const std::string& orig) {
                                   return contains_bounded(*cand, orig);
                                 });
        if (leaks) continue;
        used.insert(std::move(folded));
        surrogate[i] = std::move(*cand);
        break;
      }
    }

    doc.mapping.entries.clear();
    for (std::size_t i = 0; i < n; ++i) {
      doc.mapping.entries.push_back(
          MappingEntry{layout.originals[i].surface, surrogate[i],
                       layout.originals[i].etype});
    }
    doc.anonymized = splice_layout(c, layout, surrogate);
    if (invert_mapping(doc.anonymized, doc.mapping) != doc.original) {
      last_failure = "surrogates are ambiguous in the anonymized text";
      continue;
    }
    LeakageReport leak = find_leaks(doc.anonymized, originals);
    if (!leak.ok()) {
      last_failure = "original '" + leak.leaked.front() + "' survives hiding";
      continue;
    }
    doc.spans = std::move(layout.char_spans);
    return doc;
  }
  throw HideError("no collision-free surrogate assignment: " + last_failure);
}

AnonymizedDocument hide(std::string_view c, const std::vector<EntitySpan>& spans,
                        const HideConfig& config,
                        const std::vector<MappingEntry>& forced) {
  if (config.strategy.is_label_based()) {
    return hide_label(c, spans, *config.strategy.placeholder_mode(), forced);
  }
  return hide_generative(c, spans, config.policy, forced);
}

std::string codebook_surrogate(std::string_view original, EntityType etype,
                               const SurrogatePolicy& policy) {
  const std::string folded = text::fold_case(original);
  CandidateStream stream(original, etype, policy, 0);
  while (auto cand = stream.next()) {
    if (!cand->empty() && text::fold_case(*cand) != folded &&
        !contains_bounded(*cand, original)) {
      return *cand;
    }
  }
  throw PoolExhaustedError(etype);
}

LeakageReport find_leaks(std::string_view text,
                         const std::vector<std::string>& originals) {
  LeakageReport report;
  std::unordered_set<std::string_view> seen;
  for (const std::string& o : originals) {
    if (o.empty() || !seen.insert(o).second) continue;
    if (contains_bounded(text, o)) report.leaked.push_back(o);
  }
  return report;
}

LeakageReport assert_leakage_free(const AnonymizedDocument& doc) {
  std::vector<std::string> originals;
  originals.reserve(doc.mapping.entries.size());
  for (const MappingEntry& e : doc.mapping.entries) originals.push_back(e.original);
  return find_leaks(doc.anonymized, originals);
}

}  // namespace has
