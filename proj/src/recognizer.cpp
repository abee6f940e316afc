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

#include "has/recognizer.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "has/text.hpp"
#include "lexical.hpp"

namespace has {
namespace {

using lexical::npos;

// A candidate match in byte offsets. Lower priority value wins ties.
struct Candidate {
  std::size_t begin;
  std::size_t end;
  EntityType etype;
  int priority;
};

constexpr std::array<std::string_view, 7> kScaleWords = {
    "thousand", "million", "billion", "trillion", "bn", "mn", "m",
};
constexpr std::array<std::string_view, 6> kAttachedScale = {
    "bn", "mn", "m", "k", "M", "B",
};
constexpr std::array<std::string_view, 5> kCurrencySymbols = {
    "US$", "$", "€", "£", "¥",
};
constexpr std::array<std::string_view, 18> kCurrencyWords = {
    "dollars", "dollar", "euros", "euro", "pounds sterling", "yen",
    "yuan",    "rupees", "francs", "cents", "USD", "EUR",
    "GBP",     "JPY",    "CNY",    "CHF",   "INR", "AUD",
};
constexpr std::array<std::string_view, 3> kPercentWords = {
    "%", " percent", " per cent",
};
constexpr std::array<std::string_view, 38> kUnits = {
    "kilograms", "kilogram", "kg",      "grams",     "gram",   "g",
    "milligrams", "mg",      "tonnes",  "tons",      "ton",    "pounds",
    "lbs",        "lb",      "ounces",  "kilometers", "kilometres", "km",
    "meters",     "metres",  "miles",   "mile",      "feet",   "foot",
    "ft",         "inches",  "cm",      "mm",        "liters", "litres",
    "gallons",    "barrels", "acres",   "hectares",  "mph",    "kWh",
    "megawatts",  "MW",
};
constexpr std::array<std::string_view, 8> kAttachedUnits = {
    "kg", "km", "mm", "cm", "mg", "lbs", "kWh", "MW",
};
constexpr std::array<std::string_view, 8> kAmPm = {
    "a.m.", "p.m.", "A.M.", "P.M.", "am", "pm", "AM", "PM",
};
constexpr std::array<std::string_view, 3> kTimeWords = {
    "noon", "midnight", "o'clock",
};
constexpr std::array<std::string_view, 3> kDayWords = {
    "yesterday", "today", "tomorrow",
};
constexpr std::array<std::string_view, 3> kRelativeLead = {
    "last", "next", "this",
};
constexpr std::array<std::string_view, 4> kRelativeUnit = {
    "week", "month", "year", "weekend",
};

// Rule priorities. Built-in rules run before gazetteers at equal extent.
constexpr int kPrioCustom = 0;
constexpr int kPrioMoney = 10;
constexpr int kPrioPercent = 11;
constexpr int kPrioQuantity = 12;
constexpr int kPrioTime = 13;
constexpr int kPrioDate = 14;
constexpr int kPrioGazetteer = 20;

class RuleScanner {
 public:
  RuleScanner(std::string_view text, const std::set<EntityType>& enabled,
              std::vector<Candidate>& out)
      : text_(text), enabled_(enabled), out_(out) {}

  void run() {
    const std::size_t n = text_.size();
    std::size_t pos = 0;
    while (pos < n) {
      const char c = text_[pos];
      const auto uc = static_cast<unsigned char>(c);
      if (uc >= 0x80 && (uc & 0xC0) == 0x80) {
        ++pos;
        continue;
      }
      if (c == '$' || uc >= 0x80 || c == 'U') {
        money_symbol(pos);
      }
      if (text::is_digit(c) && !text::word_before(text_, pos)) {
        numeric(pos);
      } else if (text::is_ascii_alnum(c) && !text::word_before(text_, pos)) {
        alpha(pos);
      }
      ++pos;
    }
  }

 private:
  void emit(std::size_t begin, std::size_t end, EntityType t, int prio) {
    if (end == npos || end <= begin || enabled_.count(t) == 0) return;
    if (!text::token_bounded(text_, begin, end - begin)) return;
    out_.push_back(Candidate{begin, end, t, prio});
  }

  std::size_t space(std::size_t pos) const {
    return (pos < text_.size() && text_[pos] == ' ') ? pos + 1 : npos;
  }

  // number [scale] at pos; returns end of the scale word if present.
  std::size_t scaled(std::size_t num_end) const {
    std::size_t sp = space(num_end);
    if (sp != npos) {
      std::size_t e = lexical::longest_word(text_, sp, kScaleWords);
      if (e != npos) return e;
    }
    return num_end;
  }

  void money_symbol(std::size_t pos) {
    for (std::string_view sym : kCurrencySymbols) {
      if (text_.compare(pos, sym.size(), sym) != 0) continue;
      if (sym == "US$" && text::word_before(text_, pos)) continue;
      const std::size_t num = pos + sym.size();
      const std::size_t num_end = lexical::match_number(text_, num);
      if (num_end == npos && !(num < text_.size() && text::is_digit(text_[num]))) {
        continue;
      }
      // match_number rejects a digit preceded by a word char; a symbol is fine.
      std::size_t end = num_end;
      if (end == npos) {
        end = num;
        while (end < text_.size() && (text::is_digit(text_[end]) ||
                                      text_[end] == ',' || text_[end] == '.')) {
          ++end;
        }
        while (end > num && !text::is_digit(text_[end - 1])) --end;
      }
      std::size_t attached = lexical::longest_word(text_, end, kAttachedScale);
      if (attached != npos) {
        emit(pos, attached, EntityType::kMoney, kPrioMoney);
      }
      emit(pos, scaled(end), EntityType::kMoney, kPrioMoney);
      return;
    }
  }

  void numeric(std::size_t pos) {
    const std::size_t num_end = lexical::match_number(text_, pos);
    if (num_end == npos) return;
    const std::size_t sc = scaled(num_end);

    // MONEY: number [scale] currency-word
    for (std::size_t base : {num_end, sc}) {
      std::size_t sp = space(base);
      if (sp == npos) continue;
      emit(pos, lexical::longest_word(text_, sp, kCurrencyWords),
           EntityType::kMoney, kPrioMoney);
    }
    // PERCENT
    for (std::string_view w : kPercentWords) {
      if (text_.compare(num_end, w.size(), w) == 0 &&
          (w == "%" || !text::word_at(text_, num_end + w.size()))) {
        emit(pos, num_end + w.size(), EntityType::kPercent, kPrioPercent);
      }
    }
    // QUANTITY: number [scale] unit, or number+unit attached
    for (std::size_t base : {num_end, sc}) {
      std::size_t sp = space(base);
      if (sp == npos) continue;
      emit(pos, lexical::longest_word(text_, sp, kUnits), EntityType::kQuantity,
           kPrioQuantity);
    }
    emit(pos, lexical::longest_word(text_, num_end, kAttachedUnits),
         EntityType::kQuantity, kPrioQuantity);

    time_numeric(pos);
    date_numeric(pos, num_end);
  }

  void time_numeric(std::size_t pos) {
    const std::size_t h_end = lexical::match_digits(text_, pos, 1, 2);
    if (h_end == npos) return;
    const int hour = lexical::to_int(text_.substr(pos, h_end - pos));
    std::size_t end = npos;
    if (h_end < text_.size() && text_[h_end] == ':') {
      const std::size_t m_end = lexical::match_digits(text_, h_end + 1, 2, 2);
      if (m_end != npos && hour <= 24 &&
          lexical::to_int(text_.substr(h_end + 1, 2)) < 60) {
        end = m_end;
        if (end < text_.size() && text_[end] == ':') {
          const std::size_t s_end = lexical::match_digits(text_, end + 1, 2, 2);
          if (s_end != npos) end = s_end;
        }
        std::size_t ampm = ampm_after(end);
        emit(pos, ampm != npos ? ampm : end, EntityType::kTime, kPrioTime);
        return;
      }
    }
    if (hour >= 1 && hour <= 12) {
      std::size_t ampm = ampm_after(h_end);
      if (ampm != npos) emit(pos, ampm, EntityType::kTime, kPrioTime);
      std::size_t sp = space(h_end);
      if (sp != npos && lexical::word_is(text_, sp, "o'clock")) {
        emit(pos, sp + 7, EntityType::kTime, kPrioTime);
      }
    }
  }

  std::size_t ampm_after(std::size_t end) const {
    for (std::size_t start : {end, space(end)}) {
      if (start == npos) continue;
      for (std::string_view w : kAmPm) {
        if (text_.compare(start, w.size(), w) == 0 &&
            !text::word_at(text_, start + w.size())) {
          return start + w.size();
        }
      }
    }
    return npos;
  }

  void date_numeric(std::size_t pos, std::size_t num_end) {
    // ISO yyyy-mm-dd
    std::size_t y_end = lexical::match_digits(text_, pos, 4, 4);
    if (y_end != npos && y_end + 6 <= text_.size() && text_[y_end] == '-') {
      std::size_t m_end = lexical::match_digits(text_, y_end + 1, 2, 2);
      if (m_end != npos && m_end < text_.size() && text_[m_end] == '-') {
        std::size_t d_end = lexical::match_digits(text_, m_end + 1, 2, 2);
        if (d_end != npos) {
          int m = lexical::to_int(text_.substr(y_end + 1, 2));
          int d = lexical::to_int(text_.substr(m_end + 1, 2));
          if (m >= 1 && m <= 12 && d >= 1 && d <= 31) {
            emit(pos, d_end, EntityType::kDate, kPrioDate);
          }
        }
      }
    }
    // m/d/yyyy
    std::size_t a_end = lexical::match_digits(text_, pos, 1, 2);
    if (a_end != npos && a_end < text_.size() && text_[a_end] == '/') {
      std::size_t b_end = lexical::match_digits(text_, a_end + 1, 1, 2);
      if (b_end != npos && b_end < text_.size() && text_[b_end] == '/') {
        std::size_t c_end = lexical::match_digits(text_, b_end + 1, 4, 4);
        if (c_end != npos) emit(pos, c_end, EntityType::kDate, kPrioDate);
      }
    }
    // day Month year
    if (a_end != npos) {
      const int day = lexical::to_int(text_.substr(pos, a_end - pos));
      std::size_t after = ordinal_suffix(a_end);
      std::size_t sp = space(after);
      if (day >= 1 && day <= 31 && sp != npos) {
        if (auto month = lexical::match_month(text_, sp)) {
          std::size_t sp2 = space(month->end);
          std::size_t yr = sp2 != npos ? lexical::match_digits(text_, sp2, 4, 4)
                                       : npos;
          if (yr != npos) emit(pos, yr, EntityType::kDate, kPrioDate);
          emit(pos, month->end, EntityType::kDate, kPrioDate);
        }
      }
    }
    // Bare year and decades.
    if (y_end != npos && num_end == y_end) {
      const int year = lexical::to_int(text_.substr(pos, 4));
      if (year >= 1900 && year <= 2099) {
        emit(pos, y_end, EntityType::kDate, kPrioDate);
      }
    }
    if (y_end != npos && y_end < text_.size() && text_[y_end] == 's') {
      emit(pos, y_end + 1, EntityType::kDate, kPrioDate);
    }
  }

  std::size_t ordinal_suffix(std::size_t pos) const {
    for (std::string_view s : {"st", "nd", "rd", "th"}) {
      if (text_.compare(pos, 2, s) == 0 && !text::word_at(text_, pos + 2)) {
        return pos + 2;
      }
    }
    return pos;
  }

  void alpha(std::size_t pos) {
    if (auto month = lexical::match_month(text_, pos)) {
      std::size_t sp = space(month->end);
      if (sp != npos) {
        std::size_t d_end = lexical::match_digits(text_, sp, 1, 2);
        if (d_end != npos && (!text::word_at(text_, d_end) ||
                              ordinal_suffix(d_end) != d_end)) {
          const int day = lexical::to_int(text_.substr(sp, d_end - sp));
          if (day >= 1 && day <= 31) {
            std::size_t after = ordinal_suffix(d_end);
            emit(pos, after, EntityType::kDate, kPrioDate);
            std::size_t y_start = after;
            if (y_start < text_.size() && text_[y_start] == ',') ++y_start;
            std::size_t sp2 = space(y_start);
            if (sp2 != npos) {
              std::size_t yr = lexical::match_digits(text_, sp2, 4, 4);
              if (yr != npos) emit(pos, yr, EntityType::kDate, kPrioDate);
            }
          }
        }
        std::size_t yr = lexical::match_digits(text_, sp, 4, 4);
        if (yr != npos) emit(pos, yr, EntityType::kDate, kPrioDate);
      }
      if (!month->abbreviated && month->month != 5) {
        emit(pos, month->end, EntityType::kDate, kPrioDate);
      }
    }
    for (std::string_view wd : lexical::kWeekdays) {
      if (lexical::word_is(text_, pos, wd)) {
        emit(pos, pos + wd.size(), EntityType::kDate, kPrioDate);
      }
    }
    emit(pos, lexical::longest_word(text_, pos, kDayWords), EntityType::kDate,
         kPrioDate);
    std::size_t lead = lexical::longest_word(text_, pos, kRelativeLead);
    if (lead != npos) {
      std::size_t sp = space(lead);
      if (sp != npos) {
        emit(pos, lexical::longest_word(text_, sp, kRelativeUnit),
             EntityType::kDate, kPrioDate);
        emit(pos, lexical::longest_word(text_, sp, lexical::kWeekdays),
             EntityType::kDate, kPrioDate);
      }
    }
    std::size_t tw = lexical::longest_word(text_, pos, kTimeWords);
    if (tw != npos && text_.substr(pos, 7) != "o'clock") {
      emit(pos, tw, EntityType::kTime, kPrioTime);
    }
  }

  std::string_view text_;
  const std::set<EntityType>& enabled_;
  std::vector<Candidate>& out_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && text::is_space_byte(s[b])) ++b;
  while (e > b && text::is_space_byte(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Key under which a surface is indexed: its leading word, or its first
// character when it does not start with a word character.
std::string index_key(std::string_view s) {
  if (s.empty()) return {};
  if (text::word_at(s, 0)) return std::string(s.substr(0, text::word_end(s, 0)));
  std::size_t len = 1;
  text::char_at(s, 0, &len);
  return std::string(s.substr(0, len));
}

std::vector<EntitySpan> to_spans(std::string_view text,
                                 const std::vector<Candidate>& chosen) {
  text::Utf8Index index(text);
  std::vector<EntitySpan> spans;
  spans.reserve(chosen.size());
  for (const Candidate& c : chosen) {
    spans.push_back(EntitySpan{index.char_offset(c.begin),
                               index.char_offset(c.end),
                               std::string(text.substr(c.begin, c.end - c.begin)),
                               c.etype, SpanSource::kAuto});
  }
  return spans;
}

std::vector<Candidate> resolve(std::vector<Candidate> cands, std::size_t n) {
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     const std::size_t la = a.end - a.begin;
                     const std::size_t lb = b.end - b.begin;
                     return std::tie(lb, a.begin, a.priority) <
                            std::tie(la, b.begin, b.priority);
                   });
  std::vector<char> used(n, 0);
  std::vector<Candidate> chosen;
  for (const Candidate& c : cands) {
    bool free = true;
    for (std::size_t i = c.begin; i < c.end; ++i) {
      if (used[i]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    std::fill(used.begin() + static_cast<std::ptrdiff_t>(c.begin),
              used.begin() + static_cast<std::ptrdiff_t>(c.end), 1);
    chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Candidate& a, const Candidate& b) { return a.begin < b.begin; });
  return chosen;
}

}  // namespace

Gazetteer::Gazetteer(EntityType etype, std::vector<std::string> entries)
    : etype_(etype) {
  for (std::string& e : entries) {
    std::string t = trim(e);
    if (t.empty()) {
      throw ConfigError("gazetteer for " + std::string(to_string(etype)) +
                        " has an empty or whitespace-only entry");
    }
    entries_.push_back(std::move(t));
  }
  if (entries_.empty()) {
    throw ConfigError("gazetteer for " + std::string(to_string(etype)) +
                      " is empty");
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

Gazetteer Gazetteer::load(const std::filesystem::path& path, EntityType etype) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read gazetteer " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    entries.push_back(std::move(t));
  }
  return Gazetteer(etype, std::move(entries));
}

Gazetteer Gazetteer::starter(EntityType etype) {
  return Gazetteer(etype, starter_surrogates(etype));
}

RecognizerConfig RecognizerConfig::from_json(const nlohmann::json& j,
                                             const std::filesystem::path& base) {
  RecognizerConfig cfg;
  auto resolve_path = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
  };
  try {
    if (j.contains("enabled_types")) {
      cfg.enabled_types.clear();
      for (const auto& t : j.at("enabled_types")) {
        cfg.enabled_types.insert(entity_type_from_string(t.get<std::string>()));
      }
    }
    if (j.contains("gazetteers")) {
      for (const auto& [code, path] : j.at("gazetteers").items()) {
        cfg.gazetteer_paths[entity_type_from_string(code)] =
            resolve_path(path.get<std::string>());
      }
    }
    if (j.contains("patterns")) {
      for (const auto& p : j.at("patterns")) {
        cfg.custom_patterns.push_back(
            CustomPattern{entity_type_from_string(p.at("type").get<std::string>()),
                          p.at("pattern").get<std::string>()});
      }
    }
    if (j.contains("starter_gazetteers")) {
      cfg.use_starter_gazetteers = j.at("starter_gazetteers").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("recognizer config: ") + e.what());
  }
  return cfg;
}

Recognizer::Recognizer(RecognizerConfig config) : config_(std::move(config)) {
  for (const auto& [etype, path] : config_.gazetteer_paths) {
    if (config_.enabled_types.count(etype) == 0) {
      throw ConfigError("gazetteer given for disabled type " +
                        std::string(to_string(etype)));
    }
  }
  auto add_entries = [&](EntityType etype, const std::vector<std::string>& list) {
    if (config_.enabled_types.count(etype) == 0) return;
    for (const std::string& s : list) gaz_.push_back(GazEntry{s, etype});
  };
  for (EntityType t : kAllEntityTypes) {
    if (config_.use_starter_gazetteers) add_entries(t, starter_entries(t));
  }
  for (const auto& [etype, path] : config_.gazetteer_paths) {
    add_entries(etype, Gazetteer::load(path, etype).entries());
  }
  for (const auto& [etype, list] : config_.extra_entries) {
    add_entries(etype, Gazetteer(etype, list).entries());
  }
  for (std::size_t i = 0; i < gaz_.size(); ++i) {
    gaz_index_[index_key(gaz_[i].surface)].push_back(i);
  }
  for (auto& [key, ids] : gaz_index_) {
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return gaz_[a].surface.size() > gaz_[b].surface.size();
    });
  }
  for (const CustomPattern& p : config_.custom_patterns) {
    if (config_.enabled_types.count(p.etype) == 0) continue;
    try {
      patterns_.push_back(CompiledPattern{
          p.etype, std::regex(p.pattern, std::regex::ECMAScript)});
    } catch (const std::regex_error& e) {
      throw ConfigError("pattern '" + p.pattern + "' does not compile: " +
                        e.what());
    }
  }
}

std::vector<EntitySpan> Recognizer::recognize(std::string_view text) const {
  std::vector<Candidate> cands;
  if (text.empty()) return {};

  RuleScanner(text, config_.enabled_types, cands).run();

  const std::size_t n = text.size();
  std::string key;
  for (std::size_t pos = 0; pos < n;) {
    std::size_t step = 1;
    const char c = text[pos];
    if (text::is_space_byte(c)) {
      ++pos;
      continue;
    }
    std::size_t key_end;
    if (text::word_at(text, pos)) {
      key_end = text::word_end(text, pos);
      step = key_end - pos;
      if (text::word_before(text, pos)) {
        pos += step;
        continue;
      }
    } else {
      text::char_at(text, pos, &step);
      key_end = pos + step;
    }
    key.assign(text.substr(pos, key_end - pos));
    auto it = gaz_index_.find(key);
    if (it != gaz_index_.end()) {
      for (std::size_t id : it->second) {
        const GazEntry& g = gaz_[id];
        if (text.compare(pos, g.surface.size(), g.surface) == 0 &&
            text::token_bounded(text, pos, g.surface.size())) {
          cands.push_back(Candidate{pos, pos + g.surface.size(), g.etype,
                                    kPrioGazetteer});
        }
      }
    }
    pos += step;
  }

  for (const CompiledPattern& p : patterns_) {
    auto begin = std::cregex_iterator(text.data(), text.data() + text.size(), p.re);
    for (auto it = begin; it != std::cregex_iterator(); ++it) {
      const auto pos = static_cast<std::size_t>(it->position(0));
      const auto len = static_cast<std::size_t>(it->length(0));
      if (len > 0 && text::token_bounded(text, pos, len)) {
        cands.push_back(Candidate{pos, pos + len, p.etype, kPrioCustom});
      }
    }
  }

  return to_spans(text, resolve(std::move(cands), n));
}

std::vector<EntitySpan> recognize(std::string_view text,
                                  const RecognizerConfig& config) {
  return Recognizer(config).recognize(text);
}

SpanConflictError::SpanConflictError(EntitySpan first, EntitySpan second)
    : Error("manual spans overlap: '" + first.surface + "' [" +
            std::to_string(first.start) + ", " + std::to_string(first.end) +
            ") and '" + second.surface + "' [" + std::to_string(second.start) +
            ", " + std::to_string(second.end) + ")"),
      first_(std::move(first)),
      second_(std::move(second)) {}

std::vector<EntitySpan> resolve_overlaps(std::vector<EntitySpan> candidates) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const EntitySpan& x = candidates[a];
    const EntitySpan& y = candidates[b];
    if (x.length() != y.length()) return x.length() > y.length();
    return x.start < y.start;
  });
  std::vector<EntitySpan> chosen;
  for (std::size_t i : order) {
    const EntitySpan& c = candidates[i];
    bool clash = std::any_of(chosen.begin(), chosen.end(),
                             [&](const EntitySpan& s) { return s.overlaps(c); });
    if (!clash) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  return chosen;
}

std::vector<EntitySpan> merge_spans(const std::vector<EntitySpan>& automatic,
                                    const std::vector<EntitySpan>& manual) {
  std::vector<EntitySpan> sorted_manual = manual;
  std::sort(sorted_manual.begin(), sorted_manual.end(),
            [](const EntitySpan& a, const EntitySpan& b) {
              return std::tie(a.start, a.end) < std::tie(b.start, b.end);
            });
  for (std::size_t i = 1; i < sorted_manual.size(); ++i) {
    if (sorted_manual[i - 1].overlaps(sorted_manual[i])) {
      throw SpanConflictError(sorted_manual[i - 1], sorted_manual[i]);
    }
  }
  std::vector<EntitySpan> kept_auto;
  for (const EntitySpan& a : automatic) {
    bool covered = std::any_of(sorted_manual.begin(), sorted_manual.end(),
                               [&](const EntitySpan& m) { return m.overlaps(a); });
    if (!covered) kept_auto.push_back(a);
  }
  std::vector<EntitySpan> out = resolve_overlaps(std::move(kept_auto));
  out.insert(out.end(), sorted_manual.begin(), sorted_manual.end());
  std::sort(out.begin(), out.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  return out;
}

std::vector<std::string> dedup_surfaces(const std::vector<EntitySpan>& spans) {
  std::vector<std::string> out;
  std::set<std::string_view> seen;
  for (const EntitySpan& s : spans) {
    if (seen.insert(s.surface).second) out.push_back(s.surface);
  }
  return out;
}

std::vector<EntitySpan> spans_for_surface(std::string_view text,
                                          std::string_view surface,
                                          EntityType etype, SpanSource source) {
  std::vector<EntitySpan> out;
  if (surface.empty()) return out;
  text::Utf8Index index(text);
  std::size_t pos = text.find(surface);
  while (pos != std::string_view::npos) {
    out.push_back(EntitySpan{index.char_offset(pos),
                             index.char_offset(pos + surface.size()),
                             std::string(surface), etype, source});
    pos = text.find(surface, pos + surface.size());
  }
  return out;
}

}  // namespace has
