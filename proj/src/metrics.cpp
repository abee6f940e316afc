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

#include "has/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "has/text.hpp"

namespace has::metrics {
namespace {

using NgramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NgramCounts ngrams(const Tokens& tokens, std::size_t n) {
  NgramCounts out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> key(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++out[key];
  }
  return out;
}

std::size_t total(const NgramCounts& c) {
  std::size_t t = 0;
  for (const auto& [k, v] : c) t += v;
  return t;
}

std::size_t clipped_overlap(const NgramCounts& cand, const NgramCounts& ref) {
  std::size_t m = 0;
  for (const auto& [k, v] : cand) {
    auto it = ref.find(k);
    if (it != ref.end()) m += std::min(v, it->second);
  }
  return m;
}

double f1_of(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

Tokens tokenize(std::string_view text) {
  Tokens out;
  const std::u32string cps = text::decode_utf8(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && text::is_unicode_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !text::is_unicode_space(cps[j])) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && text::is_punctuation(cps[b])) ++b;
    while (e > b && text::is_punctuation(cps[e - 1])) --e;
    if (b < e) {
      std::string tok;
      for (std::size_t k = b; k < e; ++k) text::append_utf8(tok, text::fold_case(cps[k]));
      out.push_back(std::move(tok));
    }
    i = j;
  }
  return out;
}

PrfReport prf(const std::vector<std::string>& gold,
              const std::vector<std::string>& pred) {
  if (gold.size() != pred.size()) {
    throw Error("prf: gold has " + std::to_string(gold.size()) +
                " labels but pred has " + std::to_string(pred.size()));
  }
  if (gold.empty()) throw Error("prf: no labels");
  std::set<std::string> labels(gold.begin(), gold.end());
  labels.insert(pred.begin(), pred.end());
  std::map<std::string, std::size_t> tp, fp, fn;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) {
      ++tp[gold[i]];
    } else {
      ++fp[pred[i]];
      ++fn[gold[i]];
    }
  }
  PrfReport r;
  std::size_t all_tp = 0, all_fp = 0, all_fn = 0;
  for (const std::string& label : labels) {
    Prf p;
    p.precision = ratio(tp[label], tp[label] + fp[label]);
    p.recall = ratio(tp[label], tp[label] + fn[label]);
    p.f1 = f1_of(p.precision, p.recall);
    r.per_class[label] = p;
    r.support[label] = tp[label] + fn[label];
    r.macro.precision += p.precision;
    r.macro.recall += p.recall;
    r.macro.f1 += p.f1;
    all_tp += tp[label];
    all_fp += fp[label];
    all_fn += fn[label];
  }
  const double k = static_cast<double>(labels.size());
  r.macro.precision /= k;
  r.macro.recall /= k;
  r.macro.f1 /= k;
  r.micro.precision = ratio(all_tp, all_tp + all_fp);
  r.micro.recall = ratio(all_tp, all_tp + all_fn);
  r.micro.f1 = f1_of(r.micro.precision, r.micro.recall);
  return r;
}

void BleuStats::add(const BleuStats& other) {
  if (matches.empty()) {
    *this = other;
    return;
  }
  for (std::size_t n = 0; n < matches.size(); ++n) {
    matches[n] += other.matches[n];
    candidate_totals[n] += other.candidate_totals[n];
    reference_totals[n] += other.reference_totals[n];
  }
  candidate_length += other.candidate_length;
  reference_length += other.reference_length;
}

BleuStats bleu_stats(const Tokens& candidate, const Tokens& reference, int max_n) {
  if (max_n < 1) throw Error("bleu: max_n must be positive");
  BleuStats s;
  s.candidate_length = candidate.size();
  s.reference_length = reference.size();
  for (int n = 1; n <= max_n; ++n) {
    NgramCounts c = ngrams(candidate, static_cast<std::size_t>(n));
    NgramCounts r = ngrams(reference, static_cast<std::size_t>(n));
    s.matches.push_back(clipped_overlap(c, r));
    s.candidate_totals.push_back(total(c));
    s.reference_totals.push_back(total(r));
  }
  return s;
}

double bleu_from_stats(const BleuStats& s) {
  if (s.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (std::size_t n = 0; n < s.matches.size(); ++n) {
    if (s.candidate_totals[n] == 0 && s.reference_totals[n] == 0) continue;
    if (s.matches[n] == 0) return 0.0;
    log_sum += std::log(ratio(s.matches[n], s.candidate_totals[n]));
    ++orders;
  }
  if (orders == 0) return 0.0;
  double bp = 1.0;
  if (s.candidate_length < s.reference_length) {
    bp = std::exp(1.0 - static_cast<double>(s.reference_length) /
                            static_cast<double>(s.candidate_length));
  }
  return bp * std::exp(log_sum / orders);
}

double bleu(const Tokens& candidate, const Tokens& reference, int max_n) {
  return bleu_from_stats(bleu_stats(candidate, reference, max_n));
}

double corpus_bleu(const std::vector<Tokens>& candidates,
                   const std::vector<Tokens>& references, int max_n) {
  if (candidates.size() != references.size()) {
    throw Error("corpus_bleu: candidate and reference counts differ");
  }
  BleuStats acc;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    acc.add(bleu_stats(candidates[i], references[i], max_n));
  }
  return bleu_from_stats(acc);
}

double rouge(const Tokens& candidate, const Tokens& reference,
             RougeVariant variant) {
  if (candidate.empty() && reference.empty()) return 1.0;
  if (candidate.empty() || reference.empty()) return 0.0;
  if (variant == RougeVariant::kL) {
    const std::size_t l = lcs_length(candidate, reference);
    return f1_of(ratio(l, candidate.size()), ratio(l, reference.size()));
  }
  const std::size_t n = variant == RougeVariant::k1 ? 1 : 2;
  NgramCounts c = ngrams(candidate, n);
  NgramCounts r = ngrams(reference, n);
  const std::size_t tc = total(c);
  const std::size_t tr = total(r);
  if (tc == 0 && tr == 0) return candidate == reference ? 1.0 : 0.0;
  const std::size_t overlap = clipped_overlap(c, r);
  return f1_of(ratio(overlap, tc), ratio(overlap, tr));
}

double meteor_exact(const Tokens& candidate, const Tokens& reference) {
  std::vector<bool> used(reference.size(), false);
  // (candidate index, reference index) in candidate order.
  std::vector<std::pair<std::size_t, std::size_t>> align;
  std::size_t prev_ref = reference.size();
  std::size_t prev_cand = candidate.size();
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    std::size_t pick = reference.size();
    if (prev_cand + 1 == i && prev_ref + 1 < reference.size() &&
        !used[prev_ref + 1] && reference[prev_ref + 1] == candidate[i]) {
      pick = prev_ref + 1;
    } else {
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (!used[j] && reference[j] == candidate[i]) {
          pick = j;
          break;
        }
      }
    }
    if (pick == reference.size()) continue;
    used[pick] = true;
    align.emplace_back(i, pick);
    prev_cand = i;
    prev_ref = pick;
  }
  const std::size_t m = align.size();
  if (m == 0) return 0.0;
  std::size_t chunks = 1;
  for (std::size_t k = 1; k < m; ++k) {
    if (align[k].first != align[k - 1].first + 1 ||
        align[k].second != align[k - 1].second + 1) {
      ++chunks;
    }
  }
  const double p = ratio(m, candidate.size());
  const double r = ratio(m, reference.size());
  const double fmean = 10.0 * p * r / (r + 9.0 * p);
  const double frag = static_cast<double>(chunks) / static_cast<double>(m);
  const double penalty = 0.5 * frag * frag * frag;
  return fmean * (1.0 - penalty);
}

TranslationReport translation_report(const std::vector<std::string>& candidates,
                                     const std::vector<std::string>& references) {
  if (candidates.size() != references.size()) {
    throw Error("translation_report: candidate and reference counts differ");
  }
  TranslationReport r;
  if (candidates.empty()) return r;
  std::vector<Tokens> cand;
  std::vector<Tokens> ref;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    cand.push_back(tokenize(candidates[i]));
    ref.push_back(tokenize(references[i]));
    r.rouge1 += rouge(cand.back(), ref.back(), RougeVariant::k1);
    r.rouge2 += rouge(cand.back(), ref.back(), RougeVariant::k2);
    r.rougeL += rouge(cand.back(), ref.back(), RougeVariant::kL);
    r.meteor_exact += meteor_exact(cand.back(), ref.back());
  }
  const double n = static_cast<double>(candidates.size());
  r.rouge1 /= n;
  r.rouge2 /= n;
  r.rougeL /= n;
  r.meteor_exact /= n;
  r.bleu2 = corpus_bleu(cand, ref, 2);
  r.bleu4 = corpus_bleu(cand, ref, 4);
  return r;
}

void to_json(nlohmann::json& j, const Prf& p) {
  j = nlohmann::json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
}

void to_json(nlohmann::json& j, const PrfReport& r) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [label, p] : r.per_class) {
    nlohmann::json pj = p;
    pj["support"] = r.support.at(label);
    per[label] = pj;
  }
  j = nlohmann::json{{"per_class", per}, {"macro", r.macro}, {"micro", r.micro}};
}

void to_json(nlohmann::json& j, const TranslationReport& r) {
  j = nlohmann::json{{"rouge1", r.rouge1}, {"rouge2", r.rouge2},
                     {"rougeL", r.rougeL}, {"bleu2", r.bleu2},
                     {"bleu4", r.bleu4},   {"meteor_exact", r.meteor_exact}};
}

}  // namespace has::metrics
