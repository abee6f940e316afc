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

#include "has/harness.hpp"

#include <cstdio>
#include <set>

#include "has/json_io.hpp"

namespace has {
namespace {

struct BudgetDoc {
  bool ok = false;
  std::string reference;
  std::string obscured;
  std::string restored;
  std::string hidden_label;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

BudgetDoc budget_one(const std::string& c, const HideConfig& hc,
                     const HarnessOptions& o) {
  BudgetDoc b;
  AnonymizedDocument doc;
  try {
    doc = hide(c, o.recognizer->recognize(c), hc);
  } catch (const HideError&) {
    return b;
  }
  if (o.translator) {
    b.reference = o.translator->translate(c);
    b.obscured = o.translator->complete(llm::LlmRequest::user(
        llm::build_prompt_l(doc.anonymized, TaskType::kTranslate, o.translator->target())));
    b.restored = seek(doc, b.obscured, o.seek).text;
  }
  if (o.classifier) {
    b.hidden_label = o.classifier->complete(
        llm::LlmRequest::user(llm::build_prompt_l(doc.anonymized, TaskType::kClassify)));
  }
  b.ok = true;
  return b;
}

}  // namespace

std::map<EntityType, std::vector<std::string>> enumerable_originals(
    const RecognizerConfig& config) {
  std::map<EntityType, std::vector<std::string>> out;
  for (EntityType t : config.enabled_types) {
    if (is_rule_type(t)) continue;
    std::set<std::string> all;
    if (config.use_starter_gazetteers) {
      const auto& s = starter_entries(t);
      all.insert(s.begin(), s.end());
    }
    if (auto it = config.gazetteer_paths.find(t); it != config.gazetteer_paths.end()) {
      const Gazetteer g = Gazetteer::load(it->second, t);
      all.insert(g.entries().begin(), g.entries().end());
    }
    if (auto it = config.extra_entries.find(t); it != config.extra_entries.end()) {
      all.insert(it->second.begin(), it->second.end());
    }
    if (!all.empty()) out[t] = {all.begin(), all.end()};
  }
  return out;
}

HarnessReport run_harness(const std::vector<dataset::NewsDoc>& corpus,
                          const HarnessOptions& o) {
  if (!o.recognizer) throw ConfigError("harness needs a recognizer");
  if (corpus.empty()) throw Error("empty corpus");
  HarnessReport report;
  report.n_docs = corpus.size();
  std::vector<std::string> train;
  std::vector<std::string> test;
  for (const dataset::NewsDoc& d : corpus) {
    (dataset::in_train_split(d.text) ? train : test).push_back(d.text);
  }
  report.n_train = train.size();
  report.n_test = test.size();

  std::vector<std::string> gold;
  std::vector<std::string> plain_pred;
  if (o.classifier) {
    for (const dataset::NewsDoc& d : corpus) {
      plain_pred.push_back(o.classifier->complete(
          llm::LlmRequest::user(llm::build_prompt_l(d.text, TaskType::kClassify))));
      gold.push_back(d.label.empty() ? plain_pred.back() : d.label);
    }
    report.plain = metrics::prf(gold, plain_pred);
  }

  const auto candidates = enumerable_originals(o.recognizer->config());
  for (const HideStrategy& strategy : o.strategies) {
    StrategyRow row;
    row.strategy = strategy.name();
    const HideConfig hc{strategy, o.policy};

    if (!test.empty()) {
      row.identity =
          evaluate_protection(test, *o.recognizer, hc, IdentityAttacker{}, o.parallel).mean;
      const std::vector<TrainingPair> pairs = collect_pairs(train, *o.recognizer, hc);
      row.attack_train_pairs = pairs.size();
      const InversionAttacker black(train_inversion(pairs));
      const ProtectionReport b = evaluate_protection(test, *o.recognizer, hc, black, o.parallel);
      row.black = b.mean;
      row.excluded = b.excluded.size();
      if (!strategy.is_label_based()) {
        const InversionAttacker white = make_informed_attacker(black.table(), o.policy, candidates);
        row.white_hider =
            evaluate_protection(test, *o.recognizer, hc, white, o.parallel).mean;
      }
    }

    if (o.translator || o.classifier) {
      std::vector<BudgetDoc> docs(corpus.size());
      const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 8) if (o.parallel)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        docs[static_cast<std::size_t>(i)] =
            budget_one(corpus[static_cast<std::size_t>(i)].text, hc, o);
      }
      std::vector<std::string> refs, obscured, restored, g, plain, hidden;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!docs[i].ok) continue;
        if (o.translator) {
          refs.push_back(docs[i].reference);
          obscured.push_back(docs[i].obscured);
          restored.push_back(docs[i].restored);
        }
        if (o.classifier) {
          g.push_back(gold[i]);
          plain.push_back(plain_pred[i]);
          hidden.push_back(docs[i].hidden_label);
        }
      }
      if (o.translator && !refs.empty()) {
        row.obscured = metrics::translation_report(obscured, refs);
        row.restored = metrics::translation_report(restored, refs);
      }
      if (o.classifier && !g.empty()) {
        row.hidden = metrics::prf(g, hidden);
        const metrics::PrfReport base = metrics::prf(g, plain);
        row.delta_micro_f1 = row.hidden->micro.f1 - base.micro.f1;
        row.delta_macro_f1 = row.hidden->macro.f1 - base.macro.f1;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json HarnessReport::to_json() const {
  nlohmann::json j;
  j["n_docs"] = n_docs;
  j["n_train"] = n_train;
  j["n_test"] = n_test;
  if (plain) j["classification_plain"] = *plain;
  j["rows"] = nlohmann::json::array();
  for (const StrategyRow& r : rows) {
    nlohmann::json row = {
        {"strategy", r.strategy},
        {"identity", r.identity},
        {"black", r.black},
        {"white_hider", r.white_hider ? nlohmann::json(*r.white_hider) : nlohmann::json()},
        {"attack_train_pairs", r.attack_train_pairs},
        {"excluded", r.excluded},
        {"delta_micro_f1", r.delta_micro_f1},
        {"delta_macro_f1", r.delta_macro_f1},
    };
    if (r.obscured) row["translation_obscured"] = *r.obscured;
    if (r.restored) row["translation_restored"] = *r.restored;
    if (r.hidden) row["classification_hidden"] = *r.hidden;
    j["rows"].push_back(std::move(row));
  }
  // Protection against budget, one point per strategy.
  j["pairing"] = nlohmann::json::array();
  for (const StrategyRow& r : rows) {
    j["pairing"].push_back({{"strategy", r.strategy},
                            {"privacy_score", r.black},
                            {"delta_micro_f1", r.delta_micro_f1},
                            {"meteor_loss", r.obscured && r.restored
                                                ? 1.0 - r.restored->meteor_exact
                                                : 0.0}});
  }
  return j;
}

std::string HarnessReport::to_table() const {
  std::string out;
  out += "docs " + std::to_string(n_docs) + " (attack train " + std::to_string(n_train) +
         ", test " + std::to_string(n_test) + ")\n";
  out += pad("strategy", 16) + pad("Identity", 10) + pad("Black", 10) +
         pad("White(hider)", 14) + pad("BLEU-2 e/d", 18) + pad("ROUGE-1 e/d", 18) +
         pad("METEOR e/d", 18) + pad("dF1 micro", 11) + "dF1 macro\n";
  for (const StrategyRow& r : rows) {
    out += pad(r.strategy, 16) + pad(fmt(r.identity), 10) + pad(fmt(r.black), 10) +
           pad(r.white_hider ? fmt(*r.white_hider) : "\\", 14);
    if (r.obscured && r.restored) {
      out += pad(fmt(r.obscured->bleu2) + "/" + fmt(r.restored->bleu2), 18) +
             pad(fmt(r.obscured->rouge1) + "/" + fmt(r.restored->rouge1), 18) +
             pad(fmt(r.obscured->meteor_exact) + "/" + fmt(r.restored->meteor_exact), 18);
    } else {
      out += pad("-", 18) + pad("-", 18) + pad("-", 18);
    }
    if (r.hidden) {
      out += pad(fmt(r.delta_micro_f1), 11) + fmt(r.delta_macro_f1);
    } else {
      out += pad("-", 11) + "-";
    }
    out += '\n';
  }
  const StrategyRow* label = nullptr;
  const StrategyRow* generative = nullptr;
  for (const StrategyRow& r : rows) {
    if (r.strategy == "generative") generative = &r;
    if (r.strategy.rfind("label", 0) == 0 && !label) label = &r;
  }
  if (label && generative) {
    out += std::string("direction label-based > generative (Black): ") +
           (label->black > generative->black ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace has
