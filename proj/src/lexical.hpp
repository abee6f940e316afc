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

// Word tables and small matchers shared by the recognition rules and the
// format-preserving surrogate generators.

#ifndef HAS_SRC_LEXICAL_HPP_
#define HAS_SRC_LEXICAL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "has/text.hpp"

namespace has::lexical {

inline constexpr std::size_t npos = std::string_view::npos;

inline constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December",
};
// Abbreviations by month index; "Sept" is an extra spelling of September.
inline constexpr std::array<std::string_view, 12> kMonthAbbrev = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
};
inline constexpr std::array<std::string_view, 7> kWeekdays = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday",
};

// `word` occurs at `pos` and does not continue into a longer word.
inline bool word_is(std::string_view text, std::size_t pos,
                    std::string_view word) {
  if (text.compare(pos, word.size(), word) != 0) return false;
  const std::size_t end = pos + word.size();
  if (text::is_word_char(static_cast<unsigned char>(word.back())) &&
      text::word_at(text, end)) {
    return false;
  }
  return true;
}

// End of the longest listed word at `pos`, or npos.
template <typename List>
std::size_t longest_word(std::string_view text, std::size_t pos,
                         const List& words) {
  std::size_t best = npos;
  for (std::string_view w : words) {
    if (word_is(text, pos, w)) {
      const std::size_t end = pos + w.size();
      if (best == npos || end > best) best = end;
    }
  }
  return best;
}

struct MonthMatch {
  int month = 0;       // 1..12
  std::size_t end = 0;
  bool abbreviated = false;
  bool dotted = false;  // "Aug."
  std::string_view spelling;
};

inline std::optional<MonthMatch> match_month(std::string_view text,
                                             std::size_t pos) {
  for (int m = 0; m < 12; ++m) {
    if (word_is(text, pos, kMonths[m])) {
      return MonthMatch{m + 1, pos + kMonths[m].size(), false, false,
                        kMonths[m]};
    }
  }
  auto try_abbrev = [&](std::string_view ab, int month) -> std::optional<MonthMatch> {
    if (text.compare(pos, ab.size(), ab) != 0) return std::nullopt;
    std::size_t end = pos + ab.size();
    if (text::word_at(text, end)) return std::nullopt;
    bool dotted = end < text.size() && text[end] == '.';
    if (dotted) ++end;
    return MonthMatch{month, end, true, dotted, ab};
  };
  if (auto m = try_abbrev("Sept", 9)) return m;
  for (int m = 0; m < 12; ++m) {
    if (m == 4) continue;  // "May" is only a full name
    if (auto r = try_abbrev(kMonthAbbrev[m], m + 1)) return r;
  }
  return std::nullopt;
}

// Run of ASCII digits starting at pos, bounded to [min_len, max_len].
inline std::size_t match_digits(std::string_view text, std::size_t pos,
                                std::size_t min_len, std::size_t max_len) {
  std::size_t end = pos;
  while (end < text.size() && text::is_digit(text[end])) ++end;
  const std::size_t len = end - pos;
  if (len < min_len || len > max_len) return npos;
  return end;
}

inline int to_int(std::string_view digits) {
  int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

// A decimal number with optional thousands groups: 12, 3.5, 1,250,000.75.
// Returns the end offset or npos. Requires a non-word, non-digit-dot
// left context.
inline std::size_t match_number(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || !text::is_digit(text[pos])) return npos;
  if (text::word_before(text, pos)) return npos;
  if (pos >= 2 && (text[pos - 1] == '.' || text[pos - 1] == ',') &&
      text::is_digit(text[pos - 2])) {
    return npos;
  }
  std::size_t end = pos;
  while (end < text.size() && text::is_digit(text[end])) ++end;
  const std::size_t lead = end - pos;
  if (lead <= 3) {
    while (end + 3 < text.size() && text[end] == ',' &&
           text::is_digit(text[end + 1]) && text::is_digit(text[end + 2]) &&
           text::is_digit(text[end + 3]) &&
           (end + 4 >= text.size() || !text::is_digit(text[end + 4]))) {
      end += 4;
    }
  }
  if (end + 1 < text.size() && text[end] == '.' &&
      text::is_digit(text[end + 1])) {
    ++end;
    while (end < text.size() && text::is_digit(text[end])) ++end;
  }
  return end;
}

}  // namespace has::lexical

#endif  // HAS_SRC_LEXICAL_HPP_
