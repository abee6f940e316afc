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

// Re-identification attacks on anonymized text and the protection harness
// scoring them with 1 - similarity(c, recovered).

#ifndef HAS_ADVERSARY_HPP_
#define HAS_ADVERSARY_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "has/hide.hpp"
#include "has/recognizer.hpp"
#include "has/text.hpp"
#include "has/types.hpp"
#include "json.hpp"

namespace has {

struct TrainingPair {
  std::string c;
  std::vector<EntitySpan> spans;  // P(c) as the attacker knows it
  std::string e;
};

// surrogate -> original -> count, per entity type.
class InversionTable {
 public:
  void add(EntityType etype, const std::string& surrogate,
           const std::string& original, std::size_t count = 1);

  // Most frequent original across all types; ties go to the smallest.
  std::optional<std::string> argmax(std::string_view surrogate) const;
  double probability(EntityType etype, const std::string& surrogate,
                     const std::string& original) const;
  std::size_t count(EntityType etype, const std::string& surrogate,
                    const std::string& original) const;

  bool empty() const { return counts_.empty(); }
  std::size_t observed_pairs() const { return observed_pairs_; }
  void note_pair() { ++observed_pairs_; }
  std::vector<std::string> surrogates() const;
  const std::map<EntityType,
                 std::map<std::string, std::map<std::string, std::size_t>>>&
  counts() const {
    return counts_;
  }

 private:
  std::map<EntityType, std::map<std::string, std::map<std::string, std::size_t>>>
      counts_;
  std::size_t observed_pairs_ = 0;
};

struct SkippedPair {
  std::size_t index;
  std::string reason;
};

// Aligns each e against c around the spans (expanded to every mention) and
// counts each distinct (surrogate, original) once per pair. Pairs that
// admit no consistent alignment are skipped.
InversionTable train_inversion(const std::vector<TrainingPair>& pairs,
                               std::vector<SkippedPair>* skipped = nullptr);

// Token-bounded longest-first replacement of known surrogates.
std::string attack_inversion(const InversionTable& table, std::string_view e);

enum class Knowledge { kBlackBox, kWhiteBox };

std::string_view to_string(Knowledge k);

class Attacker {
 public:
  virtual ~Attacker() = default;
  // Must be safe to call concurrently.
  virtual std::string recover(std::string_view e) const = 0;
  virtual std::string name() const = 0;
  virtual Knowledge knowledge() const = 0;
};

class IdentityAttacker : public Attacker {
 public:
  std::string recover(std::string_view e) const override { return std::string(e); }
  std::string name() const override { return "identity"; }
  Knowledge knowledge() const override { return Knowledge::kBlackBox; }
};

class InversionAttacker : public Attacker {
 public:
  explicit InversionAttacker(InversionTable table,
                             Knowledge knowledge = Knowledge::kBlackBox,
                             std::string name = "inversion");
  std::string recover(std::string_view e) const override;
  std::string name() const override { return name_; }
  Knowledge knowledge() const override { return knowledge_; }
  const InversionTable& table() const { return table_; }

 private:
  InversionTable table_;
  Knowledge knowledge_;
  std::string name_;
  std::vector<std::string> patterns_;
  std::vector<std::string> replacement_;
  text::PatternSet set_;
};

// The black-box table plus the hider's own surrogate choices, computed from
// its policy for every candidate original the attacker can enumerate.
InversionAttacker make_informed_attacker(
    const InversionTable& observed, const SurrogatePolicy& policy,
    const std::map<EntityType, std::vector<std::string>>& candidates);

struct ProtectionReport {
  std::string strategy;
  std::string attacker;
  std::vector<double> scores;  // per evaluated doc, corpus order
  std::vector<SkippedPair> excluded;
  double mean = 0.0;
  std::vector<std::size_t> histogram;  // ten buckets of width 0.1

  nlohmann::json to_json() const;
};

// recognize -> hide -> recover -> 1 - similarity, per document, in parallel
// when `parallel` is set. Hide failures exclude the document.
ProtectionReport evaluate_protection(const std::vector<std::string>& corpus,
                                     const Recognizer& recognizer,
                                     const HideConfig& hide_config,
                                     const Attacker& attacker,
                                     bool parallel = true);

// Queries the hider with every document and collects training pairs.
std::vector<TrainingPair> collect_pairs(const std::vector<std::string>& corpus,
                                        const Recognizer& recognizer,
                                        const HideConfig& hide_config);

}  // namespace has

#endif  // HAS_ADVERSARY_HPP_
