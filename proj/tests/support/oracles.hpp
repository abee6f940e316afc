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

// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// Nothing here calls into the metric implementations.

#ifndef HAS_TESTS_ORACLES_HPP_
#define HAS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace has::testing {

inline const std::string kFbiText =
    "The FBI (Federal Bureau of Investigation) is currently investigating a cyber "
    "attack on a major corporation that occurred on August 10, 2023. The breach "
    "took place in the company's headquarters located in Washington DC. The FBI "
    "suspects that the attack was carried out by a foreign government.";

inline const std::string kFbiSubstituted =
    "The CIA (Central Intelligence Agency) is currently investigating a cyber "
    "attack on a major corporation that occurred on September 15, 2025. The breach "
    "occurred in the company's headquarters located in New York City. The CIA "
    "suspects that the attack was carried out by a foreign government.";

// Label example with the comma form of the capital.
inline const std::string kFbiLabelText =
    "The FBI (Federal Bureau of Investigation) is currently investigating a cyber "
    "attack on a major corporation that occurred on August 10, 2023. The breach "
    "took place in the company's headquarters located in Washington, D.C. The FBI "
    "suspects that the attack was carried out by a foreign government.";

inline const std::string kFbiLabelAnonymized =
    "The <ORG> (<ORG>) is currently investigating a cyber attack on a major "
    "corporation that occurred on <DATE>. The breach took place in the company's "
    "headquarters located in <GPE>, <GPE> The <ORG> suspects that the attack was "
    "carried out by a foreign government.";

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Minimal LCG so fixture generation does not depend on library RNG code.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed * 2 + 1) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

namespace oracle {

struct Prf {
  double p = 0, r = 0, f = 0;
};

inline double safe_div(double a, double b) { return b == 0 ? 0.0 : a / b; }
inline double harmonic(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

struct PrfResult {
  std::map<std::string, Prf> per_class;
  Prf macro, micro;
};

// Confusion matrix first, then the one-vs-rest reading of it.
inline PrfResult prf(const std::vector<std::string>& gold,
                     const std::vector<std::string>& pred) {
  std::set<std::string> labels(gold.begin(), gold.end());
  labels.insert(pred.begin(), pred.end());
  std::map<std::string, std::map<std::string, int>> cm;
  for (std::size_t i = 0; i < gold.size(); ++i) cm[gold[i]][pred[i]]++;
  PrfResult out;
  double tp_all = 0, fp_all = 0, fn_all = 0;
  for (const std::string& k : labels) {
    double tp = cm[k][k], fp = 0, fn = 0;
    for (const std::string& o : labels) {
      if (o == k) continue;
      fp += cm[o][k];
      fn += cm[k][o];
    }
    Prf c;
    c.p = safe_div(tp, tp + fp);
    c.r = safe_div(tp, tp + fn);
    c.f = harmonic(c.p, c.r);
    out.per_class[k] = c;
    out.macro.p += c.p;
    out.macro.r += c.r;
    out.macro.f += c.f;
    tp_all += tp;
    fp_all += fp;
    fn_all += fn;
  }
  const double n = static_cast<double>(labels.size());
  out.macro.p /= n;
  out.macro.r /= n;
  out.macro.f /= n;
  out.micro.p = safe_div(tp_all, tp_all + fp_all);
  out.micro.r = safe_div(tp_all, tp_all + fn_all);
  out.micro.f = harmonic(out.micro.p, out.micro.r);
  return out;
}

using Seq = std::vector<std::string>;

inline std::vector<Seq> all_ngrams(const Seq& s, std::size_t n) {
  std::vector<Seq> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    out.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(i),
                     s.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

inline std::size_t count_of(const std::vector<Seq>& grams, const Seq& g) {
  return static_cast<std::size_t>(std::count(grams.begin(), grams.end(), g));
}

// Clipped matches by scanning every distinct candidate n-gram.
inline std::size_t clipped(const std::vector<Seq>& cand, const std::vector<Seq>& ref) {
  std::set<Seq> seen(cand.begin(), cand.end());
  std::size_t m = 0;
  for (const Seq& g : seen) m += std::min(count_of(cand, g), count_of(ref, g));
  return m;
}

// Pooled over sentence pairs, unsmoothed, orders with no n-grams on
// either side skipped.
inline double bleu(const std::vector<Seq>& cands, const std::vector<Seq>& refs, int max_n) {
  double clen = 0, rlen = 0;
  std::vector<double> num(static_cast<std::size_t>(max_n), 0), den(num), rden(num);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    clen += static_cast<double>(cands[i].size());
    rlen += static_cast<double>(refs[i].size());
    for (int n = 1; n <= max_n; ++n) {
      auto cg = all_ngrams(cands[i], static_cast<std::size_t>(n));
      auto rg = all_ngrams(refs[i], static_cast<std::size_t>(n));
      num[static_cast<std::size_t>(n - 1)] += static_cast<double>(clipped(cg, rg));
      den[static_cast<std::size_t>(n - 1)] += static_cast<double>(cg.size());
      rden[static_cast<std::size_t>(n - 1)] += static_cast<double>(rg.size());
    }
  }
  if (clen == 0) return 0.0;
  double prod = 1.0;
  int used = 0;
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (den[k] == 0 && rden[k] == 0) continue;
    if (num[k] == 0) return 0.0;
    prod *= num[k] / den[k];
    ++used;
  }
  if (used == 0) return 0.0;
  const double bp = clen < rlen ? std::exp(1.0 - rlen / clen) : 1.0;
  return bp * std::pow(prod, 1.0 / used);
}

inline double rouge_n(const Seq& c, const Seq& r, std::size_t n) {
  if (c.empty() && r.empty()) return 1.0;
  if (c.empty() || r.empty()) return 0.0;
  auto cg = all_ngrams(c, n);
  auto rg = all_ngrams(r, n);
  if (cg.empty() && rg.empty()) return c == r ? 1.0 : 0.0;
  const double m = static_cast<double>(clipped(cg, rg));
  return harmonic(safe_div(m, static_cast<double>(cg.size())),
                  safe_div(m, static_cast<double>(rg.size())));
}

// Memoised recursion rather than the bottom-up table.
inline std::size_t lcs(const Seq& a, const Seq& b, std::size_t i, std::size_t j,
                       std::map<std::pair<std::size_t, std::size_t>, std::size_t>& memo) {
  if (i == a.size() || j == b.size()) return 0;
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::size_t v = a[i] == b[j] ? 1 + lcs(a, b, i + 1, j + 1, memo)
                               : std::max(lcs(a, b, i + 1, j, memo), lcs(a, b, i, j + 1, memo));
  memo[key] = v;
  return v;
}

inline double rouge_l(const Seq& c, const Seq& r) {
  if (c.empty() && r.empty()) return 1.0;
  if (c.empty() || r.empty()) return 0.0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  const double l = static_cast<double>(lcs(c, r, 0, 0, memo));
  return harmonic(l / static_cast<double>(c.size()), l / static_cast<double>(r.size()));
}

// Exact-match METEOR for sequences whose tokens are pairwise distinct on
// each side, where the unigram alignment is unique.
inline double meteor_distinct(const Seq& c, const Seq& r) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t j = 0; j < r.size(); ++j) pos[r[j]] = j;
  std::vector<std::pair<std::size_t, std::size_t>> al;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (auto it = pos.find(c[i]); it != pos.end()) al.emplace_back(i, it->second);
  }
  if (al.empty()) return 0.0;
  double chunks = 1;
  for (std::size_t k = 1; k < al.size(); ++k) {
    if (!(al[k].first == al[k - 1].first + 1 && al[k].second == al[k - 1].second + 1)) ++chunks;
  }
  const double m = static_cast<double>(al.size());
  const double p = m / static_cast<double>(c.size());
  const double rr = m / static_cast<double>(r.size());
  const double fmean = 10 * p * rr / (rr + 9 * p);
  return fmean * (1 - 0.5 * std::pow(chunks / m, 3));
}

}  // namespace oracle

// Twenty generated fixtures: label sequences for prf and token sequences
// (repeats allowed) for BLEU/ROUGE, plus distinct-token pairs for METEOR.
struct MetricCase {
  std::vector<std::string> gold, pred;
  oracle::Seq cand, ref;
  oracle::Seq m_cand, m_ref;
};

inline std::vector<MetricCase> metric_cases() {
  const std::vector<std::string> labels = {"A", "B", "C", "D"};
  const std::vector<std::string> vocab = {"the", "cat", "sat", "on", "mat", "a", "dog"};
  const std::vector<std::string> distinct = {"w0", "w1", "w2", "w3", "w4", "w5",
                                             "w6", "w7", "w8", "w9"};
  std::vector<MetricCase> out;
  Lcg g(20260101);
  for (int k = 0; k < 20; ++k) {
    MetricCase mc;
    const std::size_t n = 3 + g.below(10);
    for (std::size_t i = 0; i < n; ++i) {
      mc.gold.push_back(labels[g.below(labels.size())]);
      mc.pred.push_back(g.below(3) == 0 ? labels[g.below(labels.size())] : mc.gold.back());
    }
    const std::size_t lc = 2 + g.below(9), lr = 2 + g.below(9);
    for (std::size_t i = 0; i < lc; ++i) mc.cand.push_back(vocab[g.below(vocab.size())]);
    for (std::size_t i = 0; i < lr; ++i) mc.ref.push_back(vocab[g.below(vocab.size())]);
    std::vector<std::string> pool = distinct;
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[g.below(i)]);
    mc.m_ref.assign(pool.begin(), pool.begin() + 6);
    std::vector<std::string> pool2 = distinct;
    for (std::size_t i = pool2.size(); i > 1; --i) std::swap(pool2[i - 1], pool2[g.below(i)]);
    mc.m_cand.assign(pool2.begin(), pool2.begin() + static_cast<std::ptrdiff_t>(3 + g.below(5)));
    out.push_back(std::move(mc));
  }
  return out;
}

}  // namespace has::testing

#endif  // HAS_TESTS_ORACLES_HPP_
