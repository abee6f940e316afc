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

#include <gtest/gtest.h>

#include <random>

#include "has/text.hpp"
#include "has/validate.hpp"
#include "support/oracles.hpp"

namespace has {
namespace {

TEST(Utf8, DecodeEncodeRoundTrip) {
  const std::string s = "Zürich – 東京 🙂";
  const std::u32string u = text::decode_utf8(s);
  EXPECT_EQ(u.size(), 13u);
  EXPECT_EQ(text::encode_utf8(u), s);
  EXPECT_EQ(text::char_count(s), 13u);
}

TEST(Utf8, MalformedByteIsOneReplacementChar) {
  const std::string s = "a\xff" "b";
  const std::u32string u = text::decode_utf8(s);
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(u[1], U'�');
}

TEST(Utf8, IndexMapsBothWays) {
  const std::string s = "aé東🙂z";
  text::Utf8Index idx(s);
  EXPECT_EQ(idx.size_chars(), 5u);
  const std::size_t bytes[] = {0, 1, 3, 6, 10, 11};
  for (std::size_t c = 0; c <= 5; ++c) {
    EXPECT_EQ(idx.byte_offset(c), bytes[c]);
    EXPECT_EQ(idx.char_offset(bytes[c]), c);
  }
}

TEST(Utf8, RandomScalarsRoundTrip) {
  std::mt19937 g(7);
  std::uniform_int_distribution<std::uint32_t> d(1, 0x10FFFF);
  for (int trial = 0; trial < 200; ++trial) {
    std::u32string u;
    for (int i = 0; i < 20; ++i) {
      char32_t cp = d(g);
      if (cp >= 0xD800 && cp <= 0xDFFF) cp = U'x';
      u.push_back(cp);
    }
    EXPECT_EQ(text::decode_utf8(text::encode_utf8(u)), u);
  }
}

TEST(CaseFold, CoversLatinGreekCyrillic) {
  EXPECT_EQ(text::fold_case("ÀÉÎ ΣΑΣ Москва ABC"), "àéî σασ москва abc");
}

TEST(TokenBoundary, RejectsInsideWords) {
  EXPECT_FALSE(text::token_bounded("USUALLY", 0, 2));
  EXPECT_TRUE(text::token_bounded("the US said", 4, 2));
  EXPECT_EQ(text::find_bounded("US USUALLY US.", "US"), (std::vector<std::size_t>{0, 11}));
  // Punctuation edges need no boundary.
  EXPECT_TRUE(text::token_bounded("x(y", 1, 1));
}

// Brute-force reference: at each position try every pattern, keep the
// longest admissible one, then jump past it.
std::vector<text::PatternHit> brute_scan(const std::vector<std::string>& pats,
                                         std::string_view t, bool bounded) {
  std::vector<text::PatternHit> hits;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t best = pats.size();
    for (std::size_t i = 0; i < pats.size(); ++i) {
      const std::string& p = pats[i];
      if (p.empty() || t.compare(pos, p.size(), p) != 0) continue;
      if (bounded && !text::token_bounded(t, pos, p.size())) continue;
      if (best == pats.size() || p.size() > pats[best].size()) best = i;
    }
    if (best == pats.size()) {
      ++pos;
      continue;
    }
    hits.push_back({pos, pats[best].size(), best});
    pos += pats[best].size();
  }
  return hits;
}

TEST(PatternSet, AgreesWithBruteForce) {
  testing::Lcg g(99);
  const std::vector<std::string> alphabet = {"a", "b", "ab", " ", "ba", "c"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> pats;
    std::set<std::string> seen;
    const std::size_t np = 1 + g.below(5);
    while (pats.size() < np) {
      std::string p;
      const std::size_t len = 1 + g.below(4);
      for (std::size_t i = 0; i < len; ++i) p += "abc"[g.below(3)];
      if (seen.insert(p).second) pats.push_back(p);
    }
    std::string t;
    for (int i = 0; i < 30; ++i) t += alphabet[g.below(alphabet.size())];
    for (bool bounded : {false, true}) {
      text::PatternSet set(pats, {bounded, false});
      const auto got = set.scan(t);
      const auto want = brute_scan(pats, t, bounded);
      ASSERT_EQ(got.size(), want.size()) << t;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].pos, want[i].pos);
        EXPECT_EQ(got[i].len, want[i].len);
        EXPECT_EQ(set.pattern(got[i].pattern), pats[want[i].pattern]);
      }
    }
  }
}

TEST(PatternSet, CaseInsensitive) {
  text::PatternSet set({"CIA"}, {true, true});
  const auto hits = set.scan("the cia and Cia");
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].pos, 4u);
  EXPECT_EQ(hits[1].pos, 12u);
}

TEST(Splice, ReplacesHits) {
  text::PatternSet set({"cat"}, {true, false});
  const std::string t = "a cat, a cat";
  EXPECT_EQ(text::splice(t, set.scan(t), [](const text::PatternHit&) { return "dog"; }),
            "a dog, a dog");
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(text::fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(text::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Placeholder, GrammarRoundTrips) {
  EXPECT_EQ(render_placeholder(EntityType::kOrg), "<ORG>");
  EXPECT_EQ(render_placeholder(EntityType::kWorkOfArt, 3), "<WORK_OF_ART_3>");
  for (EntityType t : kAllEntityTypes) {
    for (std::size_t k : {0u, 1u, 12u}) {
      auto p = parse_placeholder(render_placeholder(t, k));
      ASSERT_TRUE(p);
      EXPECT_EQ(p->etype, t);
      EXPECT_EQ(p->index, k);
    }
  }
  EXPECT_FALSE(parse_placeholder("<ORG_0>"));
  EXPECT_FALSE(parse_placeholder("<FOO>"));
  EXPECT_FALSE(parse_placeholder("ORG"));
  EXPECT_EQ(placeholder_shape_at("x <FOO_2> y", 2), 7u);
}

}  // namespace
}  // namespace has
