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

#include "has/text.hpp"

#include <algorithm>
#include <map>

namespace has::text {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

inline bool is_cont(unsigned char b) { return (b & 0xC0) == 0x80; }

// Decodes one scalar at `pos`; `len` receives the consumed byte count.
char32_t decode_one(std::string_view s, std::size_t pos, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    len = 1;
    return b0;
  }
  std::size_t need = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    len = 1;
    return kReplacement;
  }
  if (pos + need >= s.size()) {
    len = 1;
    return kReplacement;
  }
  for (std::size_t k = 1; k <= need; ++k) {
    const auto b = static_cast<unsigned char>(s[pos + k]);
    if (!is_cont(b)) {
      len = 1;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    len = 1;
    return kReplacement;
  }
  len = need + 1;
  return cp;
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t len = 1;
    out.push_back(decode_one(s, pos, len));
    pos += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

std::size_t char_count(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t len = 1;
    decode_one(s, pos, len);
    pos += len;
    ++n;
  }
  return n;
}

Utf8Index::Utf8Index(std::string_view s) : bytes_(s.size()) {
  ascii_ = std::all_of(s.begin(), s.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii_) {
    chars_ = s.size();
    return;
  }
  starts_.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    starts_.push_back(static_cast<std::uint32_t>(pos));
    std::size_t len = 1;
    decode_one(s, pos, len);
    pos += len;
  }
  chars_ = starts_.size();
}

std::size_t Utf8Index::byte_offset(std::size_t char_offset) const {
  if (ascii_) return std::min(char_offset, bytes_);
  if (char_offset >= starts_.size()) return bytes_;
  return starts_[char_offset];
}

std::size_t Utf8Index::char_offset(std::size_t byte_offset) const {
  if (ascii_) return std::min(byte_offset, bytes_);
  if (byte_offset >= bytes_) return chars_;
  auto it = std::lower_bound(starts_.begin(), starts_.end(),
                             static_cast<std::uint32_t>(byte_offset));
  return static_cast<std::size_t>(it - starts_.begin());
}

char32_t fold_case(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  }
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x17F) {
    if ((cp <= 0x12F) || (cp >= 0x132 && cp <= 0x137) ||
        (cp >= 0x14A && cp <= 0x177)) {
      return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x178) return 0xFF;
    return cp;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 63;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto b = static_cast<unsigned char>(s[pos]);
    if (b < 0x80) {
      out.push_back(ascii_lower(static_cast<char>(b)));
      ++pos;
      continue;
    }
    std::size_t len = 1;
    char32_t cp = decode_one(s, pos, len);
    if (cp == kReplacement) {
      out.append(s.substr(pos, len));
    } else {
      append_utf8(out, fold_case(cp));
    }
    pos += len;
  }
  return out;
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60 && cp != '_') ||
           (cp >= 0x7B && cp <= 0x7E);
  }
  return (cp >= 0xA1 && cp <= 0xBF && cp != 0xAA && cp != 0xB5 &&
          cp != 0xBA) ||
         cp == 0xD7 || cp == 0xF7 || (cp >= 0x2010 && cp <= 0x2027) ||
         (cp >= 0x2030 && cp <= 0x205E) || (cp >= 0x20A0 && cp <= 0x20CF) ||
         (cp >= 0x3001 && cp <= 0x303F) || (cp >= 0xFF01 && cp <= 0xFF0F) ||
         (cp >= 0xFF1A && cp <= 0xFF20) || cp == kReplacement;
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= 'a' && cp <= 'z') || cp == '_';
  }
  return !is_unicode_space(cp) && !is_punctuation(cp);
}

char32_t char_at(std::string_view s, std::size_t pos, std::size_t* len) {
  std::size_t n = 1;
  char32_t cp = decode_one(s, pos, n);
  if (len != nullptr) *len = n;
  return cp;
}

char32_t char_before(std::string_view s, std::size_t pos, std::size_t* len) {
  std::size_t start = pos - 1;
  while (start > 0 && pos - start < 4 &&
         is_cont(static_cast<unsigned char>(s[start]))) {
    --start;
  }
  std::size_t n = 1;
  char32_t cp = decode_one(s, start, n);
  if (start + n != pos) {
    // Not a well-formed sequence ending at pos; treat the byte on its own.
    if (len != nullptr) *len = 1;
    return kReplacement;
  }
  if (len != nullptr) *len = n;
  return cp;
}

bool word_at(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return false;
  const auto b = static_cast<unsigned char>(s[pos]);
  if (b < 0x80) return is_ascii_alnum(static_cast<char>(b)) || b == '_';
  return is_word_char(char_at(s, pos));
}

bool word_before(std::string_view s, std::size_t pos) {
  if (pos == 0) return false;
  const auto b = static_cast<unsigned char>(s[pos - 1]);
  if (b < 0x80) return is_ascii_alnum(static_cast<char>(b)) || b == '_';
  return is_word_char(char_before(s, pos));
}

std::size_t word_end(std::string_view s, std::size_t pos) {
  while (pos < s.size()) {
    const auto b = static_cast<unsigned char>(s[pos]);
    if (b < 0x80) {
      if (!(is_ascii_alnum(static_cast<char>(b)) || b == '_')) break;
      ++pos;
      continue;
    }
    std::size_t len = 1;
    if (!is_word_char(char_at(s, pos, &len))) break;
    pos += len;
  }
  return pos;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

bool token_bounded(std::string_view text, std::size_t pos, std::size_t len) {
  if (len == 0 || pos + len > text.size()) return false;
  if (word_at(text, pos) && word_before(text, pos)) return false;
  const std::size_t end = pos + len;
  if (word_before(text, end) && word_at(text, end)) return false;
  return true;
}

std::vector<std::size_t> find_bounded(std::string_view text,
                                      std::string_view needle) {
  std::vector<std::size_t> out;
  if (needle.empty()) return out;
  std::size_t pos = text.find(needle);
  while (pos != std::string_view::npos) {
    if (token_bounded(text, pos, needle.size())) out.push_back(pos);
    pos = text.find(needle, pos + 1);
  }
  return out;
}

PatternSet::PatternSet(const std::vector<std::string>& patterns,
                       Options options)
    : options_(options), patterns_(patterns) {
  keys_.reserve(patterns_.size());
  for (const std::string& p : patterns_) {
    keys_.push_back(options_.ascii_case_insensitive ? ascii_lower(p) : p);
  }
  std::map<std::size_t, std::size_t, std::greater<>> by_len;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i].empty()) continue;
    auto [it, inserted] = by_len.try_emplace(keys_[i].size(), buckets_.size());
    if (inserted) {
      buckets_.push_back(Bucket{keys_[i].size(), {}});
    }
    // First pattern wins on duplicates.
    buckets_[it->second].index.try_emplace(keys_[i], i);
  }
  std::sort(buckets_.begin(), buckets_.end(),
            [](const Bucket& a, const Bucket& b) { return a.len > b.len; });
}

std::vector<PatternHit> PatternSet::scan(std::string_view text) const {
  std::vector<PatternHit> hits;
  if (buckets_.empty()) return hits;
  std::string lowered;
  std::string_view hay = text;
  if (options_.ascii_case_insensitive) {
    lowered = ascii_lower(text);
    hay = lowered;
  }
  const std::size_t n = text.size();
  std::size_t pos = 0;
  while (pos < n) {
    // Never start inside a UTF-8 sequence.
    if (is_cont(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (options_.bounded && word_at(text, pos) && word_before(text, pos)) {
      ++pos;
      continue;
    }
    bool matched = false;
    for (const Bucket& bucket : buckets_) {
      if (pos + bucket.len > n) continue;
      auto it = bucket.index.find(hay.substr(pos, bucket.len));
      if (it == bucket.index.end()) continue;
      if (options_.bounded && !token_bounded(text, pos, bucket.len)) continue;
      hits.push_back(PatternHit{pos, bucket.len, it->second});
      pos += bucket.len;
      matched = true;
      break;
    }
    if (!matched) ++pos;
  }
  return hits;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace has::text
