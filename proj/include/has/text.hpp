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

// UTF-8 helpers and the token-boundary scanning primitives shared by the
// recognizer, hide, seek and the adversary.

#ifndef HAS_TEXT_HPP_
#define HAS_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace has::text {

// Decodes UTF-8 into scalar values. A malformed byte decodes to U+FFFD and
// counts as one character.
std::u32string decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view s);
std::size_t char_count(std::string_view s);

// Maps between character offsets and byte offsets of one string.
class Utf8Index {
 public:
  explicit Utf8Index(std::string_view s);

  std::size_t size_chars() const { return chars_; }
  std::size_t byte_offset(std::size_t char_offset) const;
  // `byte_offset` must be at a character boundary or the end.
  std::size_t char_offset(std::size_t byte_offset) const;

 private:
  std::size_t chars_ = 0;
  std::size_t bytes_ = 0;
  bool ascii_ = true;
  std::vector<std::uint32_t> starts_;  // empty when ascii_
};

// Simple one-to-one case folding over ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Locale independent.
char32_t fold_case(char32_t cp);
std::string fold_case(std::string_view s);

// Letters, digits and underscore; non-ASCII scalars count as letters unless
// they are Unicode spaces or punctuation.
bool is_word_char(char32_t cp);
bool is_unicode_space(char32_t cp);
bool is_punctuation(char32_t cp);

// Scalar value starting at byte `pos`, and its encoded length.
char32_t char_at(std::string_view s, std::size_t pos, std::size_t* len = nullptr);
// Scalar value ending right before byte `pos`.
char32_t char_before(std::string_view s, std::size_t pos,
                     std::size_t* len = nullptr);
bool word_at(std::string_view s, std::size_t pos);
bool word_before(std::string_view s, std::size_t pos);
// End of the run of word characters starting at `pos`.
std::size_t word_end(std::string_view s, std::size_t pos);

inline bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
         (c >= 'a' && c <= 'z');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}
std::string ascii_lower(std::string_view s);

// True when [pos, pos+len) does not start or end inside a word. Only edges
// that are themselves word characters need a non-word neighbour.
bool token_bounded(std::string_view text, std::size_t pos, std::size_t len);

// Byte offsets of every token-bounded occurrence of `needle`.
std::vector<std::size_t> find_bounded(std::string_view text,
                                      std::string_view needle);

struct PatternHit {
  std::size_t pos = 0;
  std::size_t len = 0;
  std::size_t pattern = 0;  // index into the PatternSet
};

// A fixed set of literal patterns matched in a single left-to-right pass,
// longest pattern first at each position; matched text is never rescanned.
class PatternSet {
 public:
  struct Options {
    bool bounded = false;
    bool ascii_case_insensitive = false;
  };

  PatternSet() = default;
  PatternSet(const std::vector<std::string>& patterns, Options options);

  std::vector<PatternHit> scan(std::string_view text) const;
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  const std::string& pattern(std::size_t i) const { return patterns_[i]; }

 private:
  Options options_;
  std::vector<std::string> patterns_;
  std::vector<std::string> keys_;  // folded when case insensitive
  // One table per distinct length, longest first.
  struct Bucket {
    std::size_t len = 0;
    std::unordered_map<std::string_view, std::size_t> index;
  };
  std::vector<Bucket> buckets_;
};

// Splices replacement strings over non-overlapping hits sorted by position.
template <typename ReplacementFn>
std::string splice(std::string_view text, const std::vector<PatternHit>& hits,
                   ReplacementFn&& replacement) {
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const PatternHit& hit : hits) {
    out.append(text.substr(cursor, hit.pos - cursor));
    out.append(replacement(hit));
    cursor = hit.pos + hit.len;
  }
  out.append(text.substr(cursor));
  return out;
}

// 64-bit FNV-1a. Stable across platforms, used for seeding and splits.
std::uint64_t fnv1a(std::string_view s,
                    std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace has::text

#endif  // HAS_TEXT_HPP_
