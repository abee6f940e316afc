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

#include "has/seek.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "has/text.hpp"
#include "has/textsim.hpp"
#include "has/validate.hpp"

namespace has {
namespace {

struct Replacement {
  std::size_t pos;
  std::size_t len;
  std::size_t entry;
  double confidence;
};

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && u > 0x20 && !text::is_ascii_alnum(c) && c != 0x7f;
}

bool range_free(const std::vector<char>& covered, std::size_t pos, std::size_t len) {
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (covered[i]) return false;
  }
  return true;
}

void cover(std::vector<char>& covered, std::size_t pos, std::size_t len) {
  std::fill(covered.begin() + static_cast<std::ptrdiff_t>(pos),
            covered.begin() + static_cast<std::ptrdiff_t>(pos + len), 1);
}

SeekResult finish(const EntityMapping& mapping, std::string_view out,
                  std::vector<Replacement> reps) {
  std::sort(reps.begin(), reps.end(),
            [](const Replacement& a, const Replacement& b) { return a.pos < b.pos; });
  SeekResult r;
  std::vector<bool> hit(mapping.entries.size(), false);
  std::size_t cursor = 0;
  for (const Replacement& rep : reps) {
    r.text.append(out.substr(cursor, rep.pos - cursor));
    const MappingEntry& e = mapping.entries[rep.entry];
    r.text.append(e.original);
    r.matches.push_back(SeekMatch{e.surrogate, std::string(out.substr(rep.pos, rep.len)),
                                  std::clamp(rep.confidence, 0.0, 1.0)});
    hit[rep.entry] = true;
    cursor = rep.pos + rep.len;
  }
  r.text.append(out.substr(cursor));
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) {
      ++r.restored;
    } else {
      r.unresolved.push_back(mapping.entries[i].surrogate);
    }
  }
  return r;
}

struct Token {
  std::size_t begin;
  std::size_t end;
  std::size_t inner_begin;  // leading punctuation stripped
  std::size_t inner_end;    // trailing punctuation stripped
};

std::vector<Token> gap_tokens(std::string_view out, const std::vector<char>& covered) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < out.size()) {
    if (covered[i] || text::is_space_byte(out[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < out.size() && !covered[j] && !text::is_space_byte(out[j])) ++j;
    Token t{i, j, i, j};
    while (t.inner_begin < t.inner_end && is_ascii_punct(out[t.inner_begin])) {
      ++t.inner_begin;
    }
    while (t.inner_end > t.inner_begin && is_ascii_punct(out[t.inner_end - 1])) {
      --t.inner_end;
    }
    toks.push_back(t);
    i = j;
  }
  return toks;
}

void fuzzy_pass(std::string_view out, const EntityMapping& mapping,
                const std::vector<std::size_t>& pending, const SeekConfig& config,
                std::vector<char>& covered, std::vector<Replacement>& reps) {
  if (pending.empty()) return;
  std::vector<Token> toks = gap_tokens(out, covered);
  struct Cand {
    double score;
    std::size_t pos;
    std::size_t len;
    std::size_t entry;
  };
  std::vector<Cand> cands;
  for (std::size_t idx : pending) {
    const std::u32string target = text::decode_utf8(mapping.entries[idx].surrogate);
    const std::size_t lo = target.size() > config.window_slack
                               ? target.size() - config.window_slack
                               : 0;
    const std::size_t hi = target.size() + config.window_slack;
    for (std::size_t a = 0; a < toks.size(); ++a) {
      for (std::size_t b = a; b < toks.size(); ++b) {
        // Tokens must be contiguous in the output apart from spaces.
        if (b > a && !range_free(covered, toks[b - 1].end,
                                 toks[b].begin - toks[b - 1].end)) {
          break;
        }
        const std::size_t min_len =
            text::char_count(out.substr(toks[a].inner_begin,
                                        toks[b].inner_end - toks[a].inner_begin));
        if (min_len > hi) break;
        for (std::size_t start : {toks[a].begin, toks[a].inner_begin}) {
          for (std::size_t end : {toks[b].end, toks[b].inner_end}) {
            if (end <= start) continue;
            std::string_view window = out.substr(start, end - start);
            const std::u32string w = text::decode_utf8(window);
            if (w.size() < lo || w.size() > hi) continue;
            const double score = similarity(w, target);
            if (score >= config.fuzzy_threshold) {
              cands.push_back(Cand{score, start, end - start, idx});
            }
          }
        }
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.score != y.score) return x.score > y.score;
    return std::tie(x.pos, x.len, x.entry) < std::tie(y.pos, y.len, y.entry);
  });
  for (const Cand& c : cands) {
    if (!range_free(covered, c.pos, c.len)) continue;
    cover(covered, c.pos, c.len);
    reps.push_back(Replacement{c.pos, c.len, c.entry, c.score});
  }
}

}  // namespace

void SeekConfig::check() const {
  if (!(fuzzy_threshold > 0.0 && fuzzy_threshold <= 1.0)) {
    throw ConfigError("fuzzy_threshold must lie in (0, 1]");
  }
}

SeekConfig SeekConfig::from_json(const nlohmann::json& j) {
  SeekConfig c;
  try {
    if (j.contains("fuzzy_threshold")) {
      c.fuzzy_threshold = j.at("fuzzy_threshold").get<double>();
    }
    if (j.contains("case_insensitive_pass")) {
      c.case_insensitive_pass = j.at("case_insensitive_pass").get<bool>();
    }
    if (j.contains("window_slack")) {
      c.window_slack = j.at("window_slack").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("seek config: ") + e.what());
  }
  c.check();
  return c;
}

SeekResult seek(const AnonymizedDocument& doc, std::string_view out,
                const SeekConfig& config) {
  if (doc.mapping.strategy.is_label_based()) return seek_label(doc, out);
  config.check();
  const EntityMapping& mapping = doc.mapping;
  std::vector<std::string> surrogates;
  surrogates.reserve(mapping.entries.size());
  for (const MappingEntry& e : mapping.entries) surrogates.push_back(e.surrogate);

  std::vector<char> covered(out.size(), 0);
  std::vector<Replacement> reps;
  std::vector<bool> found(mapping.entries.size(), false);

  text::PatternSet exact(surrogates, {});
  for (const text::PatternHit& h : exact.scan(out)) {
    cover(covered, h.pos, h.len);
    reps.push_back(Replacement{h.pos, h.len, h.pattern, 1.0});
    found[h.pattern] = true;
  }

  if (config.case_insensitive_pass && !surrogates.empty()) {
    text::PatternSet loose(surrogates, {true, true});
    for (const text::PatternHit& h : loose.scan(out)) {
      if (!range_free(covered, h.pos, h.len)) continue;
      cover(covered, h.pos, h.len);
      reps.push_back(Replacement{h.pos, h.len, h.pattern, 1.0});
      found[h.pattern] = true;
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) pending.push_back(i);
  }
  // Longer surrogates claim their windows first.
  std::stable_sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
    return surrogates[a].size() > surrogates[b].size();
  });
  fuzzy_pass(out, mapping, pending, config, covered, reps);
  return finish(mapping, out, std::move(reps));
}

SeekResult seek_label(const AnonymizedDocument& doc, std::string_view out) {
  const EntityMapping& mapping = doc.mapping;
  const bool bare = mapping.strategy.placeholder_mode() == PlaceholderMode::kBare;

  std::unordered_map<std::string_view, std::size_t> by_surrogate;
  std::unordered_map<std::string_view, std::size_t> by_original;
  for (std::size_t i = 0; i < mapping.entries.size(); ++i) {
    by_surrogate.emplace(mapping.entries[i].surrogate, i);
    by_original.emplace(mapping.entries[i].original, i);
  }

  // Mentions per type in document order, and distinct originals per type.
  std::map<EntityType, std::vector<std::size_t>> mentions;
  std::map<EntityType, std::size_t> distinct;
  if (bare) {
    for (const EntitySpan& s : doc.spans) {
      auto it = by_original.find(s.surface);
      if (it == by_original.end()) continue;
      mentions[mapping.entries[it->second].etype].push_back(it->second);
    }
    for (const MappingEntry& e : mapping.entries) ++distinct[e.etype];
  }
  std::map<EntityType, std::size_t> seen;

  std::vector<Replacement> reps;
  std::vector<std::string> extraneous;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    if (out[pos] != '<') continue;
    const std::size_t len = placeholder_shape_at(out, pos);
    if (len == 0) continue;
    std::string_view token = out.substr(pos, len);
    auto ph = parse_placeholder(token);
    std::optional<std::size_t> entry;
    double confidence = 1.0;
    if (ph && bare && ph->index == 0) {
      std::size_t k = seen[ph->etype]++;
      const auto& list = mentions[ph->etype];
      if (k < list.size()) {
        entry = list[k];
        confidence = 1.0 / static_cast<double>(distinct[ph->etype]);
      }
    } else if (ph && !bare) {
      auto it = by_surrogate.find(token);
      if (it != by_surrogate.end()) entry = it->second;
    }
    if (entry) {
      reps.push_back(Replacement{pos, len, *entry, confidence});
    } else {
      extraneous.emplace_back(token);
    }
    pos += len - 1;
  }
  SeekResult r = finish(mapping, out, std::move(reps));
  r.extraneous = std::move(extraneous);
  return r;
}

}  // namespace has
