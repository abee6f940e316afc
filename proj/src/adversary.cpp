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

#include "has/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <unordered_map>

#include "has/kernels.hpp"

namespace has {
namespace {

constexpr std::size_t kAlignBudget = 20000;

struct ByteSpan {
  std::size_t begin;
  std::size_t end;
  EntityType etype;
  std::string original;
};

// Backtracking alignment of e = g0 x1 g1 ... xn gn where every x of the
// same original must be identical.
class Aligner {
 public:
  Aligner(std::string_view e, std::vector<std::string> gaps,
          const std::vector<ByteSpan>& spans)
      : e_(e), gaps_(std::move(gaps)), spans_(spans) {}

  enum class Outcome { kAligned, kNoAlignment, kBudget };

  Outcome run() {
    if (e_.compare(0, gaps_[0].size(), gaps_[0]) != 0) return Outcome::kNoAlignment;
    if (solve(0, gaps_[0].size())) return Outcome::kAligned;
    return steps_ > kAlignBudget ? Outcome::kBudget : Outcome::kNoAlignment;
  }

  const std::unordered_map<std::string, std::string>& assigned() const {
    return assigned_;
  }

 private:
  bool boundary(std::size_t q) const {
    return q >= e_.size() || (static_cast<unsigned char>(e_[q]) & 0xC0) != 0x80;
  }

  bool try_end(std::size_t i, std::size_t q) {
    const std::string& next = gaps_[i + 1];
    if (e_.compare(q, next.size(), next) != 0 || e_.size() - q < next.size()) {
      return false;
    }
    if (i + 1 == spans_.size()) return q + next.size() == e_.size();
    return solve(i + 1, q + next.size());
  }

  bool solve(std::size_t i, std::size_t p) {
    if (++steps_ > kAlignBudget) return false;
    const std::string& original = spans_[i].original;
    auto it = assigned_.find(original);
    if (it != assigned_.end()) {
      const std::string& x = it->second;
      if (e_.compare(p, x.size(), x) != 0 || e_.size() - p < x.size()) return false;
      return try_end(i, p + x.size());
    }
    const std::string& next = gaps_[i + 1];
    const bool last = i + 1 == spans_.size();
    if (last) {
      if (e_.size() < p + next.size() + 1) return false;
      const std::size_t q = e_.size() - next.size();
      assigned_[original] = std::string(e_.substr(p, q - p));
      if (try_end(i, q)) return true;
      assigned_.erase(original);
      return false;
    }
    for (std::size_t q = p + 1; q <= e_.size(); ++q) {
      if (!next.empty()) {
        q = e_.find(next, q);
        if (q == std::string_view::npos) break;
      } else if (!boundary(q)) {
        continue;
      }
      assigned_[original] = std::string(e_.substr(p, q - p));
      if (try_end(i, q)) return true;
      assigned_.erase(original);
      if (steps_ > kAlignBudget) return false;
    }
    return false;
  }

  std::string_view e_;
  std::vector<std::string> gaps_;
  const std::vector<ByteSpan>& spans_;
  std::unordered_map<std::string, std::string> assigned_;
  std::size_t steps_ = 0;
};

}  // namespace

void InversionTable::add(EntityType etype, const std::string& surrogate,
                         const std::string& original, std::size_t count) {
  counts_[etype][surrogate][original] += count;
}

std::optional<std::string> InversionTable::argmax(std::string_view surrogate) const {
  std::map<std::string, std::size_t> total;
  const std::string key(surrogate);
  for (const auto& [etype, by_surrogate] : counts_) {
    auto it = by_surrogate.find(key);
    if (it == by_surrogate.end()) continue;
    for (const auto& [original, n] : it->second) total[original] += n;
  }
  std::optional<std::string> best;
  std::size_t best_n = 0;
  for (const auto& [original, n] : total) {
    if (n > best_n) {
      best = original;
      best_n = n;
    }
  }
  return best;
}

std::size_t InversionTable::count(EntityType etype, const std::string& surrogate,
                                  const std::string& original) const {
  auto t = counts_.find(etype);
  if (t == counts_.end()) return 0;
  auto s = t->second.find(surrogate);
  if (s == t->second.end()) return 0;
  auto o = s->second.find(original);
  return o == s->second.end() ? 0 : o->second;
}

double InversionTable::probability(EntityType etype, const std::string& surrogate,
                                   const std::string& original) const {
  auto t = counts_.find(etype);
  if (t == counts_.end()) return 0.0;
  auto s = t->second.find(surrogate);
  if (s == t->second.end()) return 0.0;
  std::size_t total = 0;
  for (const auto& [o, n] : s->second) total += n;
  if (total == 0) return 0.0;
  return static_cast<double>(count(etype, surrogate, original)) /
         static_cast<double>(total);
}

std::vector<std::string> InversionTable::surrogates() const {
  std::set<std::string> all;
  for (const auto& [etype, by_surrogate] : counts_) {
    for (const auto& [s, originals] : by_surrogate) all.insert(s);
  }
  return {all.begin(), all.end()};
}

InversionTable train_inversion(const std::vector<TrainingPair>& pairs,
                               std::vector<SkippedPair>* skipped) {
  InversionTable table;
  auto skip = [&](std::size_t i, std::string reason) {
    if (skipped) skipped->push_back(SkippedPair{i, std::move(reason)});
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const TrainingPair& pair = pairs[i];
    std::vector<EntitySpan> spans = expand_spans(pair.c, pair.spans);
    if (spans.empty()) {
      skip(i, "no entities");
      continue;
    }
    std::sort(spans.begin(), spans.end(),
              [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
    text::Utf8Index index(pair.c);
    std::vector<ByteSpan> bytes;
    std::vector<std::string> gaps;
    std::size_t cursor = 0;
    for (const EntitySpan& s : spans) {
      const std::size_t b = index.byte_offset(s.start);
      const std::size_t end = index.byte_offset(s.end);
      gaps.emplace_back(pair.c.substr(cursor, b - cursor));
      bytes.push_back(ByteSpan{b, end, s.etype, pair.c.substr(b, end - b)});
      cursor = end;
    }
    gaps.emplace_back(pair.c.substr(cursor));

    Aligner aligner(pair.e, std::move(gaps), bytes);
    switch (aligner.run()) {
      case Aligner::Outcome::kNoAlignment:
        skip(i, "no consistent alignment");
        continue;
      case Aligner::Outcome::kBudget:
        skip(i, "alignment budget exhausted");
        continue;
      case Aligner::Outcome::kAligned:
        break;
    }
    std::set<std::tuple<EntityType, std::string, std::string>> seen;
    for (const ByteSpan& s : bytes) {
      const std::string& surrogate = aligner.assigned().at(s.original);
      if (seen.emplace(s.etype, surrogate, s.original).second) {
        table.add(s.etype, surrogate, s.original);
      }
    }
    table.note_pair();
  }
  return table;
}

std::string attack_inversion(const InversionTable& table, std::string_view e) {
  return InversionAttacker(table).recover(e);
}

std::string_view to_string(Knowledge k) {
  return k == Knowledge::kWhiteBox ? "white-box" : "black-box";
}

InversionAttacker::InversionAttacker(InversionTable table, Knowledge knowledge,
                                     std::string name)
    : table_(std::move(table)), knowledge_(knowledge), name_(std::move(name)) {
  for (const std::string& s : table_.surrogates()) {
    if (s.empty()) continue;
    auto best = table_.argmax(s);
    if (!best) continue;
    patterns_.push_back(s);
    replacement_.push_back(*best);
  }
  set_ = text::PatternSet(patterns_, {true, false});
}

std::string InversionAttacker::recover(std::string_view e) const {
  if (set_.empty()) return std::string(e);
  return text::splice(e, set_.scan(e), [&](const text::PatternHit& h) {
    return std::string_view(replacement_[h.pattern]);
  });
}

InversionAttacker make_informed_attacker(
    const InversionTable& observed, const SurrogatePolicy& policy,
    const std::map<EntityType, std::vector<std::string>>& candidates) {
  InversionTable table = observed;
  for (const auto& [etype, originals] : candidates) {
    for (const std::string& o : originals) {
      table.add(etype, codebook_surrogate(o, etype, policy), o);
    }
  }
  return InversionAttacker(std::move(table), Knowledge::kWhiteBox, "informed-inversion");
}

nlohmann::json ProtectionReport::to_json() const {
  return nlohmann::json{{"strategy", strategy},
                        {"attacker", attacker},
                        {"n_docs", scores.size()},
                        {"mean_privacy_score", mean},
                        {"histogram", histogram}};
}

ProtectionReport evaluate_protection(const std::vector<std::string>& corpus,
                                     const Recognizer& recognizer,
                                     const HideConfig& hide_config,
                                     const Attacker& attacker, bool parallel) {
  const std::vector<kernels::ProtectionOutcome> outcomes =
      parallel ? kernels::omp::protection(corpus, recognizer, hide_config, attacker)
               : kernels::serial::protection(corpus, recognizer, hide_config, attacker);
  ProtectionReport report;
  report.strategy = hide_config.strategy.name();
  report.attacker = attacker.name();
  report.histogram.assign(10, 0);
  double sum = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      report.excluded.push_back(SkippedPair{i, outcomes[i].error});
      continue;
    }
    const double s = outcomes[i].score;
    report.scores.push_back(s);
    sum += s;
    const auto bucket = static_cast<std::size_t>(std::floor(std::clamp(s, 0.0, 1.0) * 10.0));
    ++report.histogram[std::min<std::size_t>(bucket, 9)];
  }
  if (!report.scores.empty()) {
    report.mean = sum / static_cast<double>(report.scores.size());
  }
  return report;
}

std::vector<TrainingPair> collect_pairs(const std::vector<std::string>& corpus,
                                        const Recognizer& recognizer,
                                        const HideConfig& hide_config) {
  std::vector<TrainingPair> pairs;
  pairs.reserve(corpus.size());
  for (const std::string& c : corpus) {
    std::vector<EntitySpan> spans = recognizer.recognize(c);
    try {
      AnonymizedDocument doc = hide(c, spans, hide_config);
      pairs.push_back(TrainingPair{c, std::move(spans), std::move(doc.anonymized)});
    } catch (const HideError&) {
      // The hider refused this document; the attacker sees nothing.
    }
  }
  return pairs;
}

}  // namespace has
