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

#include "has/adversary.hpp"
#include "has/dataset.hpp"
#include "has/harness.hpp"
#include "has/textsim.hpp"

namespace has {
namespace {

TrainingPair pair_of(const std::string& original, const std::string& surrogate) {
  TrainingPair p;
  p.c = "Agents of " + original + " met.";
  p.spans = spans_for_surface(p.c, original, EntityType::kOrg, SpanSource::kAuto);
  p.e = "Agents of " + surrogate + " met.";
  return p;
}

TEST(TrainInversion, SingleCorrespondence) {
  std::vector<TrainingPair> pairs(100, pair_of("FBI", "CIA"));
  const InversionTable t = train_inversion(pairs);
  EXPECT_EQ(t.count(EntityType::kOrg, "CIA", "FBI"), 100u);
  EXPECT_EQ(t.observed_pairs(), 100u);
  EXPECT_DOUBLE_EQ(t.probability(EntityType::kOrg, "CIA", "FBI"), 1.0);
}

TEST(TrainInversion, EmptyInput) { EXPECT_TRUE(train_inversion({}).empty()); }

TEST(TrainInversion, MajorityWins) {
  std::vector<TrainingPair> pairs(70, pair_of("FBI", "CIA"));
  for (int i = 0; i < 30; ++i) pairs.push_back(pair_of("NSA", "CIA"));
  const InversionTable t = train_inversion(pairs);
  EXPECT_EQ(t.argmax("CIA"), std::optional<std::string>("FBI"));
  EXPECT_NEAR(t.probability(EntityType::kOrg, "CIA", "NSA"), 0.3, 1e-12);
  EXPECT_EQ(attack_inversion(t, "The CIA said."), "The FBI said.");
}

TEST(TrainInversion, TiesGoToSmallest) {
  InversionTable t;
  t.add(EntityType::kOrg, "X", "b", 2);
  t.add(EntityType::kOrg, "X", "a", 2);
  EXPECT_EQ(t.argmax("X"), std::optional<std::string>("a"));
}

TEST(TrainInversion, InconsistentPairSkipped) {
  TrainingPair p = pair_of("FBI", "CIA");
  p.e = "Totally different text.";
  std::vector<SkippedPair> skipped;
  const InversionTable t = train_inversion({p}, &skipped);
  EXPECT_TRUE(t.empty());
  ASSERT_EQ(skipped.size(), 1u);
  EXPECT_EQ(skipped[0].index, 0u);
}

TEST(AttackInversion, EmptyTableIsIdentity) {
  EXPECT_EQ(attack_inversion({}, "The CIA said."), "The CIA said.");
}

TEST(AttackInversion, PlaceholderTable) {
  // Three docs: Reuters twice, Apple once, all hidden as <ORG>.
  std::vector<TrainingPair> pairs;
  for (const char* o : {"Reuters", "Apple", "Reuters"}) {
    TrainingPair p;
    p.c = std::string("News from ") + o + " today.";
    p.spans = spans_for_surface(p.c, o, EntityType::kOrg, SpanSource::kAuto);
    p.e = hide_label(p.c, p.spans, PlaceholderMode::kBare).anonymized;
    pairs.push_back(p);
  }
  const InversionTable t = train_inversion(pairs);
  EXPECT_EQ(t.count(EntityType::kOrg, "<ORG>", "Reuters"), 2u);
  EXPECT_EQ(attack_inversion(t, "A <ORG> story."), "A Reuters story.");
}

class OracleAttacker : public Attacker {
 public:
  explicit OracleAttacker(std::map<std::string, std::string> inv) : inv_(std::move(inv)) {}
  std::string recover(std::string_view e) const override {
    auto it = inv_.find(std::string(e));
    return it == inv_.end() ? std::string(e) : it->second;
  }
  std::string name() const override { return "oracle"; }
  Knowledge knowledge() const override { return Knowledge::kWhiteBox; }

 private:
  std::map<std::string, std::string> inv_;
};

TEST(EvaluateProtection, IdentityAndOracleBounds) {
  const Recognizer rec;
  const auto corpus = dataset::texts(dataset::synth_news(30, 4));
  const HideConfig hc{HideStrategy::label_based(PlaceholderMode::kBare), {}};
  const ProtectionReport id = evaluate_protection(corpus, rec, hc, IdentityAttacker{}, false);
  double sum = 0;
  std::map<std::string, std::string> inv;
  for (const std::string& c : corpus) {
    const auto doc = hide(c, rec.recognize(c), hc);
    sum += 1.0 - similarity(c, doc.anonymized);
    inv[doc.anonymized] = c;
  }
  EXPECT_NEAR(id.mean, sum / static_cast<double>(corpus.size()), 1e-12);
  std::size_t hist = 0;
  for (std::size_t h : id.histogram) hist += h;
  EXPECT_EQ(hist, corpus.size());
  const ProtectionReport oracle = evaluate_protection(corpus, rec, hc, OracleAttacker(inv), false);
  EXPECT_DOUBLE_EQ(oracle.mean, 0.0);
}

TEST(Protection, DirectionAndBoundOnSmallCorpus) {
  const Recognizer rec;
  const auto docs = dataset::synth_news(300, 17);
  std::vector<std::string> train, test;
  for (const auto& d : docs) (dataset::in_train_split(d.text) ? train : test).push_back(d.text);
  std::map<std::string, double> black;
  for (const HideStrategy& s :
       {HideStrategy::generative(), HideStrategy::label_based(PlaceholderMode::kBare)}) {
    const HideConfig hc{s, {}};
    const InversionAttacker att(train_inversion(collect_pairs(train, rec, hc)));
    const auto id = evaluate_protection(test, rec, hc, IdentityAttacker{});
    const auto b = evaluate_protection(test, rec, hc, att);
    EXPECT_LE(b.mean, id.mean + 1e-12) << s.name();
    black[s.name()] = b.mean;
    if (!s.is_label_based()) {
      const auto w = make_informed_attacker(att.table(), hc.policy,
                                            enumerable_originals(rec.config()));
      EXPECT_EQ(w.knowledge(), Knowledge::kWhiteBox);
      const auto wr = evaluate_protection(test, rec, hc, w);
      EXPECT_LE(wr.mean, b.mean + 1e-12);
    }
  }
  EXPECT_GT(black["label"], black["generative"]);
}

TEST(Knowledge, Names) {
  EXPECT_EQ(to_string(Knowledge::kBlackBox), "black-box");
  EXPECT_EQ(to_string(Knowledge::kWhiteBox), "white-box");
}

}  // namespace
}  // namespace has
