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

// Protection versus privacy budget, per hiding strategy: privacy scores
// under the reference attackers next to the translation and classification
// cost of hiding.

#ifndef HAS_HARNESS_HPP_
#define HAS_HARNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "has/adversary.hpp"
#include "has/dataset.hpp"
#include "has/hide.hpp"
#include "has/llm.hpp"
#include "has/metrics.hpp"
#include "has/recognizer.hpp"
#include "has/seek.hpp"
#include "json.hpp"

namespace has {

struct HarnessOptions {
  std::vector<HideStrategy> strategies = {HideStrategy::generative(),
                                          HideStrategy::label_based(PlaceholderMode::kBare)};
  SurrogatePolicy policy;
  SeekConfig seek;
  const Recognizer* recognizer = nullptr;     // required
  const llm::DictTranslateBackend* translator = nullptr;  // optional
  const llm::ClassifyBackend* classifier = nullptr;       // optional
  bool parallel = true;
};

struct StrategyRow {
  std::string strategy;
  double identity = 0.0;  // upper bound for every attacker
  double black = 0.0;
  std::optional<double> white_hider;  // no informed variant for labels
  std::size_t attack_train_pairs = 0;
  std::size_t excluded = 0;

  // Translation against dict(c): obscured = dict(e), restored = seek(dict(e)).
  std::optional<metrics::TranslationReport> obscured;
  std::optional<metrics::TranslationReport> restored;
  // Classification of e against the gold labels.
  std::optional<metrics::PrfReport> hidden;
  double delta_micro_f1 = 0.0;
  double delta_macro_f1 = 0.0;
};

struct HarnessReport {
  std::size_t n_docs = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::optional<metrics::PrfReport> plain;  // classification of c
  std::vector<StrategyRow> rows;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

// The attacker trains on the 80% split and is scored on the held-out 20%;
// the budget side uses every document. Labels missing from the corpus are
// replaced by the classifier's answer on the plain text.
HarnessReport run_harness(const std::vector<dataset::NewsDoc>& corpus,
                          const HarnessOptions& options);

// Candidate originals an informed attacker can enumerate: the recognizer's
// gazetteer entries.
std::map<EntityType, std::vector<std::string>> enumerable_originals(
    const RecognizerConfig& config);

}  // namespace has

#endif  // HAS_HARNESS_HPP_
