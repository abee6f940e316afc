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

#include "surrogate_formats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "lexical.hpp"

namespace has::formats {
namespace {

using lexical::npos;

std::string group_thousands(std::string digits) {
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string render_number(double v, int decimals, bool grouped) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s(buf);
  if (!grouped) return s;
  const std::size_t dot = s.find('.');
  std::string int_part = s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot);
  return group_thousands(int_part) + frac;
}

// Signed non-zero offset in [-max, -1] u [1, max].
std::int64_t nonzero_offset(Rng& rng, std::int64_t max) {
  max = std::max<std::int64_t>(1, max);
  std::int64_t k = rng.between(1, max);
  return rng.below(2) == 0 ? -k : k;
}

std::string two_digits(unsigned v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02u", v);
  return buf;
}

std::string ordinal_for(unsigned day) {
  if (day % 100 >= 11 && day % 100 <= 13) return "th";
  switch (day % 10) {
    case 1:
      return "st";
    case 2:
      return "nd";
    case 3:
      return "rd";
    default:
      return "th";
  }
}

enum class DateForm {
  kMonthDayYear,
  kDayMonthYear,
  kMonthYear,
  kMonthDay,
  kDayMonth,
  kIso,
  kSlash,
  kYear,
  kDecade,
  kWeekday,
  kMonth,
};

struct ParsedDate {
  DateForm form = DateForm::kYear;
  int year = 0;
  int month = 0;
  int day = 0;
  int weekday = 0;
  bool abbreviated = false;
  bool dotted = false;
  bool sept = false;
  bool ordinal = false;
  bool comma = false;
  bool padded = false;
};

class DateParser {
 public:
  explicit DateParser(std::string_view s) : s_(s) {}

  std::optional<ParsedDate> parse() {
    if (auto d = iso()) return d;
    if (auto d = slash()) return d;
    if (auto d = month_first()) return d;
    if (auto d = day_first()) return d;
    if (auto d = year_like()) return d;
    for (int w = 0; w < 7; ++w) {
      if (s_ == lexical::kWeekdays[w]) {
        ParsedDate p;
        p.form = DateForm::kWeekday;
        p.weekday = w;
        return p;
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<ParsedDate> iso() const {
    if (s_.size() != 10 || s_[4] != '-' || s_[7] != '-') return std::nullopt;
    if (lexical::match_digits(s_, 0, 4, 4) != 4 ||
        lexical::match_digits(s_, 5, 2, 2) != 7 ||
        lexical::match_digits(s_, 8, 2, 2) != 10) {
      return std::nullopt;
    }
    ParsedDate p;
    p.form = DateForm::kIso;
    p.year = lexical::to_int(s_.substr(0, 4));
    p.month = lexical::to_int(s_.substr(5, 2));
    p.day = lexical::to_int(s_.substr(8, 2));
    return valid_ymd(p);
  }

  std::optional<ParsedDate> slash() const {
    std::size_t a = lexical::match_digits(s_, 0, 1, 2);
    if (a == npos || a >= s_.size() || s_[a] != '/') return std::nullopt;
    std::size_t b = lexical::match_digits(s_, a + 1, 1, 2);
    if (b == npos || b >= s_.size() || s_[b] != '/') return std::nullopt;
    std::size_t c = lexical::match_digits(s_, b + 1, 4, 4);
    if (c != s_.size()) return std::nullopt;
    ParsedDate p;
    p.form = DateForm::kSlash;
    p.month = lexical::to_int(s_.substr(0, a));
    p.day = lexical::to_int(s_.substr(a + 1, b - a - 1));
    p.year = lexical::to_int(s_.substr(b + 1, 4));
    p.padded = a == 2 && s_[0] == '0';
    return valid_ymd(p);
  }

  void take_month(ParsedDate& p, const lexical::MonthMatch& m) const {
    p.month = m.month;
    p.abbreviated = m.abbreviated;
    p.dotted = m.dotted;
    p.sept = m.spelling == "Sept";
  }

  // Day with optional ordinal suffix at pos. Returns end or npos.
  std::size_t take_day(std::size_t pos, ParsedDate& p) const {
    std::size_t e = lexical::match_digits(s_, pos, 1, 2);
    if (e == npos) return npos;
    p.day = lexical::to_int(s_.substr(pos, e - pos));
    for (std::string_view suf : {"st", "nd", "rd", "th"}) {
      if (s_.compare(e, 2, suf) == 0) {
        p.ordinal = true;
        return e + 2;
      }
    }
    return e;
  }

  std::optional<ParsedDate> month_first() const {
    auto m = lexical::match_month(s_, 0);
    if (!m) return std::nullopt;
    ParsedDate p;
    take_month(p, *m);
    std::size_t pos = m->end;
    if (pos == s_.size()) {
      if (p.abbreviated) return std::nullopt;
      p.form = DateForm::kMonth;
      return p;
    }
    if (s_[pos] != ' ') return std::nullopt;
    ++pos;
    if (lexical::match_digits(s_, pos, 4, 4) == s_.size()) {
      p.form = DateForm::kMonthYear;
      p.year = lexical::to_int(s_.substr(pos));
      p.day = 1;
      return valid_ymd(p);
    }
    std::size_t e = take_day(pos, p);
    if (e == npos) return std::nullopt;
    if (e == s_.size()) {
      p.form = DateForm::kMonthDay;
      p.year = p.month == 2 && p.day == 29 ? 2000 : 2001;
      return valid_ymd(p);
    }
    if (s_[e] == ',') {
      p.comma = true;
      ++e;
    }
    if (e >= s_.size() || s_[e] != ' ') return std::nullopt;
    ++e;
    if (lexical::match_digits(s_, e, 4, 4) != s_.size()) return std::nullopt;
    p.form = DateForm::kMonthDayYear;
    p.year = lexical::to_int(s_.substr(e));
    return valid_ymd(p);
  }

  std::optional<ParsedDate> day_first() const {
    ParsedDate p;
    std::size_t e = take_day(0, p);
    if (e == npos || e >= s_.size() || s_[e] != ' ') return std::nullopt;
    auto m = lexical::match_month(s_, e + 1);
    if (!m) return std::nullopt;
    take_month(p, *m);
    std::size_t pos = m->end;
    if (pos == s_.size()) {
      p.form = DateForm::kDayMonth;
      p.year = p.month == 2 && p.day == 29 ? 2000 : 2001;
      return valid_ymd(p);
    }
    if (s_[pos] != ' ' || lexical::match_digits(s_, pos + 1, 4, 4) != s_.size()) {
      return std::nullopt;
    }
    p.form = DateForm::kDayMonthYear;
    p.year = lexical::to_int(s_.substr(pos + 1));
    return valid_ymd(p);
  }

  std::optional<ParsedDate> year_like() const {
    std::size_t e = lexical::match_digits(s_, 0, 4, 4);
    if (e == npos) return std::nullopt;
    ParsedDate p;
    p.year = lexical::to_int(s_.substr(0, 4));
    if (e == s_.size()) {
      p.form = DateForm::kYear;
      return p;
    }
    if (e + 1 == s_.size() && s_[e] == 's' && p.year % 10 == 0) {
      p.form = DateForm::kDecade;
      return p;
    }
    return std::nullopt;
  }

  static std::optional<ParsedDate> valid_ymd(ParsedDate p) {
    using namespace std::chrono;
    if (p.month < 1 || p.month > 12 || p.day < 1 || p.day > 31) {
      return std::nullopt;
    }
    year_month_day ymd{year{p.year}, month{static_cast<unsigned>(p.month)},
                       day{static_cast<unsigned>(p.day)}};
    if (!ymd.ok()) return std::nullopt;
    return p;
  }

  std::string_view s_;
};

std::string render_month(const ParsedDate& p, int month) {
  if (!p.abbreviated || month == 5) {
    return std::string(lexical::kMonths[month - 1]);
  }
  std::string out = (p.sept && month == 9)
                        ? std::string("Sept")
                        : std::string(lexical::kMonthAbbrev[month - 1]);
  if (p.dotted) out.push_back('.');
  return out;
}

std::string render_day(const ParsedDate& p, unsigned day) {
  std::string out = std::to_string(day);
  if (p.ordinal) out += ordinal_for(day);
  return out;
}

std::string render_date(const ParsedDate& p, int y, int m, unsigned d) {
  switch (p.form) {
    case DateForm::kMonthDayYear:
      return render_month(p, m) + " " + render_day(p, d) + (p.comma ? ", " : " ") +
             std::to_string(y);
    case DateForm::kDayMonthYear:
      return render_day(p, d) + " " + render_month(p, m) + " " + std::to_string(y);
    case DateForm::kMonthYear:
      return render_month(p, m) + " " + std::to_string(y);
    case DateForm::kMonthDay:
      return render_month(p, m) + " " + render_day(p, d);
    case DateForm::kDayMonth:
      return render_day(p, d) + " " + render_month(p, m);
    case DateForm::kIso:
      return std::to_string(y) + "-" + two_digits(static_cast<unsigned>(m)) + "-" +
             two_digits(d);
    case DateForm::kSlash:
      return (p.padded ? two_digits(static_cast<unsigned>(m)) : std::to_string(m)) +
             "/" + (p.padded ? two_digits(d) : std::to_string(d)) + "/" +
             std::to_string(y);
    case DateForm::kMonth:
      return render_month(p, m);
    default:
      return {};
  }
}

struct ParsedTime {
  int hour = 0;
  int minute = 0;
  int second = -1;
  bool has_minutes = false;
  bool padded_hour = false;
  std::string ampm_sep;  // "" or " "
  std::string ampm;      // original marker, "" for 24h
  bool oclock = false;
};

std::optional<ParsedTime> parse_time(std::string_view s) {
  ParsedTime t;
  std::size_t h_end = lexical::match_digits(s, 0, 1, 2);
  if (h_end == npos) return std::nullopt;
  t.hour = lexical::to_int(s.substr(0, h_end));
  t.padded_hour = h_end == 2 && s[0] == '0';
  std::size_t pos = h_end;
  if (pos < s.size() && s[pos] == ':') {
    std::size_t m_end = lexical::match_digits(s, pos + 1, 2, 2);
    if (m_end == npos) return std::nullopt;
    t.minute = lexical::to_int(s.substr(pos + 1, 2));
    t.has_minutes = true;
    pos = m_end;
    if (pos < s.size() && s[pos] == ':') {
      std::size_t s_end = lexical::match_digits(s, pos + 1, 2, 2);
      if (s_end == npos) return std::nullopt;
      t.second = lexical::to_int(s.substr(pos + 1, 2));
      pos = s_end;
    }
  }
  if (pos == s.size()) {
    if (!t.has_minutes || t.hour > 23 || t.minute > 59) return std::nullopt;
    return t;
  }
  std::string_view rest = s.substr(pos);
  if (rest == " o'clock") {
    if (t.has_minutes || t.hour < 1 || t.hour > 12) return std::nullopt;
    t.oclock = true;
    return t;
  }
  if (rest.front() == ' ') {
    t.ampm_sep = " ";
    rest.remove_prefix(1);
  }
  static constexpr std::string_view kMarkers[] = {"a.m.", "p.m.", "A.M.", "P.M.",
                                                   "am",   "pm",   "AM",   "PM"};
  for (std::string_view m : kMarkers) {
    if (rest == m) {
      if (t.hour < 1 || t.hour > 12 || t.minute > 59) return std::nullopt;
      t.ampm = std::string(m);
      return t;
    }
  }
  return std::nullopt;
}

// Swaps the a/p letter of an am/pm marker keeping its case and dots.
std::string marker_for(const std::string& original, bool pm) {
  std::string out = original;
  const bool upper = out[0] == 'A' || out[0] == 'P';
  out[0] = pm ? (upper ? 'P' : 'p') : (upper ? 'A' : 'a');
  return out;
}

}  // namespace

std::optional<std::string> jitter_number(std::string_view surface, Rng& rng,
                                         double jitter) {
  std::size_t begin = 0;
  while (begin < surface.size() && !text::is_digit(surface[begin])) ++begin;
  if (begin == surface.size()) return std::nullopt;
  std::size_t end = begin;
  bool grouped = false;
  int decimals = 0;
  std::string digits;
  while (end < surface.size()) {
    const char c = surface[end];
    if (text::is_digit(c)) {
      digits.push_back(c);
      ++end;
    } else if (c == ',' && !digits.empty() &&
               lexical::match_digits(surface, end + 1, 3, 3) != npos) {
      grouped = true;
      ++end;
    } else if (c == '.' && digits.find('.') == std::string::npos &&
               end + 1 < surface.size() && text::is_digit(surface[end + 1])) {
      digits.push_back('.');
      ++end;
      while (end < surface.size() && text::is_digit(surface[end])) {
        digits.push_back(surface[end]);
        ++decimals;
        ++end;
      }
      break;
    } else {
      break;
    }
  }
  const std::string original(surface.substr(begin, end - begin));
  const double value = std::strtod(digits.c_str(), nullptr);

  std::string rendered;
  for (int tries = 0; tries < 16; ++tries) {
    double u = (rng.unit() * 2.0 - 1.0) * jitter;
    if (std::fabs(u) < 0.05) u = u < 0 ? -0.05 : 0.05;
    double v = value == 0.0 ? static_cast<double>(rng.between(1, 9)) : value * (1.0 + u);
    rendered = render_number(v, decimals, grouped);
    if (rendered != original) break;
  }
  if (rendered == original) {
    // Tiny integers can round back to themselves.
    rendered = render_number(value + 1.0, decimals, grouped);
  }
  std::string out(surface.substr(0, begin));
  out += rendered;
  out.append(surface.substr(end));
  return out;
}

std::optional<std::string> shift_date(std::string_view surface, Rng& rng,
                                      int max_days) {
  using namespace std::chrono;
  auto parsed = DateParser(surface).parse();
  if (!parsed) return std::nullopt;
  const ParsedDate& p = *parsed;
  switch (p.form) {
    case DateForm::kYear: {
      const auto k = nonzero_offset(rng, max_days / 365);
      return std::to_string(p.year + k);
    }
    case DateForm::kDecade: {
      const auto k = nonzero_offset(rng, std::max(1, max_days / 3650));
      return std::to_string(p.year + 10 * k) + "s";
    }
    case DateForm::kWeekday: {
      const auto k = rng.between(1, 6);
      return std::string(lexical::kWeekdays[(p.weekday + k) % 7]);
    }
    case DateForm::kMonth: {
      const auto k = rng.between(1, 11);
      return render_date(p, 0, static_cast<int>((p.month - 1 + k) % 12) + 1, 1);
    }
    case DateForm::kMonthYear: {
      const auto k = nonzero_offset(rng, std::max(1, max_days / 30));
      const std::int64_t total = static_cast<std::int64_t>(p.year) * 12 + (p.month - 1) + k;
      return render_date(p, static_cast<int>(total / 12),
                         static_cast<int>(total % 12) + 1, 1);
    }
    default:
      break;
  }
  const auto k = nonzero_offset(rng, max_days);
  sys_days base{year_month_day{year{p.year}, month{static_cast<unsigned>(p.month)},
                               day{static_cast<unsigned>(p.day)}}};
  year_month_day shifted{base + days{k}};
  return render_date(p, static_cast<int>(shifted.year()),
                     static_cast<int>(static_cast<unsigned>(shifted.month())),
                     static_cast<unsigned>(shifted.day()));
}

std::optional<std::string> shift_time(std::string_view surface, Rng& rng) {
  auto parsed = parse_time(surface);
  if (!parsed) return std::nullopt;
  const ParsedTime& t = *parsed;
  if (t.oclock) {
    const auto k = rng.between(1, 11);
    return std::to_string((t.hour - 1 + k) % 12 + 1) + " o'clock";
  }
  int minutes;
  if (!t.ampm.empty()) {
    const bool pm = t.ampm[0] == 'p' || t.ampm[0] == 'P';
    minutes = ((t.hour % 12) + (pm ? 12 : 0)) * 60 + t.minute;
  } else {
    minutes = t.hour * 60 + t.minute;
  }
  if (t.has_minutes) {
    minutes = static_cast<int>((minutes + rng.between(1, 1439)) % 1440);
  } else {
    minutes = static_cast<int>((minutes + 60 * rng.between(1, 23)) % 1440);
  }
  const int h24 = minutes / 60;
  const int m = minutes % 60;
  std::string out;
  if (!t.ampm.empty()) {
    const int h12 = h24 % 12 == 0 ? 12 : h24 % 12;
    out = std::to_string(h12);
    if (t.has_minutes) out += ":" + two_digits(static_cast<unsigned>(m));
    if (t.second >= 0) out += ":" + two_digits(static_cast<unsigned>(t.second));
    out += t.ampm_sep + marker_for(t.ampm, h24 >= 12);
  } else {
    out = t.padded_hour || h24 >= 10 ? two_digits(static_cast<unsigned>(h24))
                                     : std::to_string(h24);
    out += ":" + two_digits(static_cast<unsigned>(m));
    if (t.second >= 0) out += ":" + two_digits(static_cast<unsigned>(t.second));
  }
  return out;
}

}  // namespace has::formats
