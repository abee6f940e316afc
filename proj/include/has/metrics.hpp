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

// Classification and translation metrics: precision/recall/F1, BLEU,
// ROUGE-1/2/L and an exact-match-only METEOR.

#ifndef HAS_METRICS_HPP_
#define HAS_METRICS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "has/types.hpp"
#include "json.hpp"

namespace has::metrics {

using Tokens = std::vector<std::string>;

// Lowercases, splits on Unicode whitespace, strips leading and trailing
// punctuation from each token and drops tokens left empty.
Tokens tokenize(std::string_view text);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct PrfReport {
  std::map<std::string, Prf> per_class;
  std::map<std::string, std::size_t> support;  // gold count per class
  Prf macro;
  Prf micro;
};

// Throws Error on a length mismatch or empty input.
PrfReport prf(const std::vector<std::string>& gold,
              const std::vector<std::string>& pred);

// Clipped n-gram counts for one sentence pair, orders 1..max_n.
struct BleuStats {
  std::vector<std::size_t> matches;
  std::vector<std::size_t> candidate_totals;
  std::vector<std::size_t> reference_totals;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;

  void add(const BleuStats& other);
};

BleuStats bleu_stats(const Tokens& candidate, const Tokens& reference, int max_n);
// Unsmoothed geometric mean of clipped precisions times the brevity
// penalty. An order with no n-grams on either side is left out of the mean.
double bleu_from_stats(const BleuStats& stats);
double bleu(const Tokens& candidate, const Tokens& reference, int max_n);
double corpus_bleu(const std::vector<Tokens>& candidates,
                   const std::vector<Tokens>& references, int max_n);

enum class RougeVariant { k1, k2, kL };

// F1. Both sequences empty gives 1, exactly one empty gives 0.
double rouge(const Tokens& candidate, const Tokens& reference,
             RougeVariant variant);

double meteor_exact(const Tokens& candidate, const Tokens& reference);

struct TranslationReport {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
  double bleu2 = 0.0;
  double bleu4 = 0.0;
  double meteor_exact = 0.0;
};

// Corpus BLEU; ROUGE and METEOR are sentence means.
TranslationReport translation_report(const std::vector<std::string>& candidates,
                                     const std::vector<std::string>& references);

void to_json(nlohmann::json& j, const Prf& p);
void to_json(nlohmann::json& j, const PrfReport& r);
void to_json(nlohmann::json& j, const TranslationReport& r);

}  // namespace has::metrics

#endif  // HAS_METRICS_HPP_
