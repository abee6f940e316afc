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

// Prints one PASS/FAIL line per acceptance criterion. `--only NAME` runs a
// single criterion. Exit status is non-zero when any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "has/dataset.hpp"
#include "has/gateway.hpp"
#include "has/harness.hpp"
#include "has/kernels.hpp"
#include "has/metrics.hpp"
#include "has/textsim.hpp"
#include "support/mock_upstream.hpp"
#include "support/oracles.hpp"

namespace {

using namespace has;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const std::vector<HideStrategy> kStrategies = {HideStrategy::generative(),
                                               HideStrategy::label_based(PlaceholderMode::kBare)};

// Shared by the protection, utility and classification criteria.
const HarnessReport& harness_1000() {
  static const HarnessReport report = [] {
    static const Recognizer rec;
    static const auto translator =
        llm::DictTranslateBackend::load(HAS_DATA_DIR "/lexicon_en_fr.tsv", "French");
    static const auto classifier = llm::ClassifyBackend::load(HAS_DATA_DIR "/classify_keywords.json");
    HarnessOptions o;
    o.recognizer = &rec;
    o.translator = &translator;
    o.classifier = &classifier;
    return run_harness(dataset::synth_news(1000, 2026), o);
  }();
  return report;
}

Outcome round_trip() {
  const auto t0 = Clock::now();
  const Recognizer rec;
  const llm::EchoBackend echo;
  const auto corpus = dataset::texts(dataset::synth_news(500, 1));
  std::size_t cases = 0, exact = 0, entries = 0;
  for (const HideStrategy& s : kStrategies) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      kernels::RoundTripJob job;
      job.recognizer = &rec;
      job.hide = HideConfig{s, {}};
      job.hide.policy.seed = seed;
      job.backend = &echo;
      for (const auto& r : kernels::omp::round_trip(corpus, job)) {
        ++cases;
        entries += r.entries;
        exact += r.exact && r.unresolved == 0 && r.error.empty();
      }
    }
  }
  const double secs = seconds_since(t0);
  return {exact == cases && cases == 5000 && secs < 30.0,
          std::to_string(exact) + "/" + std::to_string(cases) + " exact, " +
              std::to_string(entries) + " mapping entries, " + fmt("%.2fs", secs)};
}

Outcome leakage() {
  setenv("HAS_ACCEPTANCE_KEY", "sk-acceptance", 1);
  const Recognizer rec;
  const auto corpus = dataset::texts(dataset::synth_news(500, 1));
  std::size_t payloads = 0, leaks = 0, failures = 0;
  for (const HideStrategy& s : kStrategies) {
    testing::MockUpstream up;
    llm::RemoteConfig rc;
    rc.endpoint = up.endpoint();
    rc.model = "capture";
    rc.key_env = "HAS_ACCEPTANCE_KEY";
    GatewayConfig gc;
    gc.hide.strategy = s;
    Gateway gw(gc, std::make_shared<llm::RemoteChatBackend>(rc));
    for (const std::string& c : corpus) {
      nlohmann::json req = {{"model", "capture"},
                            {"messages", {{{"role", "user"}, {"content", c}}}}};
      if (gw.handle_chat(req.dump(), "").status != 200) ++failures;
    }
    const auto captured = up.captured();
    for (std::size_t i = 0; i < captured.size(); ++i) {
      ++payloads;
      std::string outbound;
      for (const auto& m : nlohmann::json::parse(captured[i].body).at("messages")) {
        outbound += m.at("content").get<std::string>() + "\n";
      }
      // Scan for every recognized surface of the corresponding document.
      const auto originals = dedup_surfaces(rec.recognize(corpus[i]));
      if (!find_leaks(outbound, originals).ok()) ++leaks;
      if (captured[i].body.find("sk-acceptance") != std::string::npos) ++leaks;
    }
  }
  return {payloads == 2 * corpus.size() && leaks == 0 && failures == 0,
          std::to_string(payloads) + " outbound payloads, " + std::to_string(leaks) +
              " with an original, " + std::to_string(failures) + " failed requests"};
}

Outcome fixture_fidelity() {
  const std::string& c = testing::kFbiText;
  auto spans = merge_spans(Recognizer().recognize(c),
                           spans_for_surface(c, "Federal Bureau of Investigation", EntityType::kOrg));
  const auto gen = hide_generative(
      c, spans, {},
      {{"FBI", "CIA", EntityType::kOrg},
       {"Federal Bureau of Investigation", "Central Intelligence Agency", EntityType::kOrg},
       {"August 10, 2023", "September 15, 2025", EntityType::kDate},
       {"Washington DC", "New York City", EntityType::kGpe}});
  const bool s_exact = gen.anonymized == testing::kFbiSubstituted;
  std::string s_note;
  if (!s_exact) {
    std::size_t i = 0;
    while (i < gen.anonymized.size() && gen.anonymized[i] == testing::kFbiSubstituted[i]) ++i;
    s_note = "s differs at byte " + std::to_string(i) + " (got \"" + gen.anonymized.substr(i, 16) +
             "\", want \"" + testing::kFbiSubstituted.substr(i, 16) + "\")";
  }

  const std::string& lc = testing::kFbiLabelText;
  auto lspans = merge_spans(Recognizer().recognize(lc),
                            spans_for_surface(lc, "Federal Bureau of Investigation", EntityType::kOrg));
  std::string want_label = testing::kFbiLabelAnonymized;
  want_label.replace(want_label.find("<GPE>, <GPE>"), 12, "<GPE>");
  const bool label_ok = hide_label(lc, lspans, PlaceholderMode::kBare).anonymized == want_label;

  const std::string golden = HAS_TEST_DIR "/golden/";
  const std::string e = hide_label(c, spans, PlaceholderMode::kBare).anonymized;
  const bool prompt_s_ok =
      llm::build_prompt_s(c, dedup_surfaces(Recognizer().recognize(c))) ==
      testing::read_file(golden + "prompt_s_fbi.txt");
  const bool prompt_r_ok =
      llm::build_prompt_r(e, "Le <ORG> (<ORG>) enquête sur une cyberattaque survenue le <DATE> à <GPE>.",
                          c, TaskType::kTranslate) == testing::read_file(golden + "prompt_r_translate.txt");

  std::string detail = std::string("s byte-exact: ") + (s_exact ? "yes" : "no") +
                       ", label pattern: " + (label_ok ? "yes" : "no") +
                       ", prompt_S golden: " + (prompt_s_ok ? "yes" : "no") +
                       ", prompt_R golden: " + (prompt_r_ok ? "yes" : "no");
  if (!s_note.empty()) detail += "; " + s_note;
  return {s_exact && label_ok && prompt_s_ok && prompt_r_ok, detail};
}

Outcome similarity_oracle() {
  std::ifstream in(HAS_TEST_DIR "/fixtures/simpairs.jsonl");
  std::size_t n = 0, bad = 0;
  double worst = 0.0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const double d = std::abs(similarity(j.at("a").get<std::string>(), j.at("b").get<std::string>()) -
                              j.at("expected_ratio").get<double>());
    worst = std::max(worst, d);
    bad += d > 1e-9;
    ++n;
  }
  const bool anchor = similarity("abcd", "bcde") == 0.75;
  return {n == 100 && bad == 0 && anchor,
          std::to_string(n) + " pairs, max |diff| " + fmt("%.2e", worst) +
              ", (abcd,bcde) = " + fmt("%.4f", similarity("abcd", "bcde"))};
}

Outcome metric_correctness() {
  std::size_t checks = 0, bad = 0;
  auto near = [&](double got, double want) {
    ++checks;
    if (!(std::abs(got - want) <= 1e-6)) ++bad;
  };
  const auto p = metrics::prf({"A", "A", "B"}, {"A", "B", "B"});
  near(p.macro.f1, 2.0 / 3.0);
  near(p.micro.f1, 2.0 / 3.0);
  const auto same = metrics::prf({"A", "B"}, {"A", "B"});
  near(same.macro.f1, 1.0);
  near(same.micro.f1, 1.0);
  near(metrics::bleu({"the", "the", "the"}, {"the", "cat"}, 1), 1.0 / 3.0);
  near(metrics::bleu({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, 4), 1.0);
  near(metrics::bleu({}, {"a"}, 2), 0.0);
  near(metrics::rouge({"the", "cat", "sat"}, {"the", "cat"}, metrics::RougeVariant::k1), 0.8);
  near(metrics::rouge({}, {}, metrics::RougeVariant::kL), 1.0);
  near(metrics::rouge({}, {"a"}, metrics::RougeVariant::k2), 0.0);
  near(metrics::meteor_exact({"a", "b", "c"}, {"a", "b", "c"}), 1.0 - 0.5 / 27.0);
  near(metrics::meteor_exact({"a"}, {"b"}), 0.0);
  for (const auto& mc : testing::metric_cases()) {
    const auto want = testing::oracle::prf(mc.gold, mc.pred);
    const auto got = metrics::prf(mc.gold, mc.pred);
    near(got.macro.f1, want.macro.f);
    near(got.macro.precision, want.macro.p);
    near(got.macro.recall, want.macro.r);
    near(got.micro.f1, want.micro.f);
    near(metrics::bleu(mc.cand, mc.ref, 2), testing::oracle::bleu({mc.cand}, {mc.ref}, 2));
    near(metrics::bleu(mc.cand, mc.ref, 4), testing::oracle::bleu({mc.cand}, {mc.ref}, 4));
    near(metrics::rouge(mc.cand, mc.ref, metrics::RougeVariant::k1), testing::oracle::rouge_n(mc.cand, mc.ref, 1));
    near(metrics::rouge(mc.cand, mc.ref, metrics::RougeVariant::k2), testing::oracle::rouge_n(mc.cand, mc.ref, 2));
    near(metrics::rouge(mc.cand, mc.ref, metrics::RougeVariant::kL), testing::oracle::rouge_l(mc.cand, mc.ref));
    near(metrics::meteor_exact(mc.m_cand, mc.m_ref), testing::oracle::meteor_distinct(mc.m_cand, mc.m_ref));
  }
  return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) +
                        " checks within 1e-6 (12 hand, 20 oracle fixtures)"};
}

Outcome protection_direction() {
  const auto t0 = Clock::now();
  const Recognizer rec;
  const auto docs = dataset::synth_news(1000, 2026);
  std::vector<std::string> train, test;
  for (const auto& d : docs) (dataset::in_train_split(d.text) ? train : test).push_back(d.text);
  double black_label = 0, black_gen = 0;
  bool bound = true;
  std::ostringstream detail;
  for (const HideStrategy& s : kStrategies) {
    const HideConfig hc{s, {}};
    const auto id = evaluate_protection(test, rec, hc, IdentityAttacker{});
    const InversionAttacker black(train_inversion(collect_pairs(train, rec, hc)));
    const auto b = evaluate_protection(test, rec, hc, black);
    bound = bound && b.mean <= id.mean + 1e-12;
    detail << s.name() << " identity " << fmt("%.4f", id.mean) << " black " << fmt("%.4f", b.mean);
    if (!s.is_label_based()) {
      const auto w = evaluate_protection(
          test, rec, hc, make_informed_attacker(black.table(), hc.policy, enumerable_originals(rec.config())));
      bound = bound && w.mean <= id.mean + 1e-12;
      detail << " white(hider) " << fmt("%.4f", w.mean);
      black_gen = b.mean;
    } else {
      black_label = b.mean;
    }
    detail << "; ";
  }
  const double secs = seconds_since(t0);
  detail << "test docs " << test.size() << ", " << fmt("%.2fs", secs);
  return {black_label > black_gen && bound && secs < 60.0, detail.str()};
}

Outcome utility_direction() {
  const HarnessReport& r = harness_1000();
  const Recognizer rec;
  std::size_t with_entity = 0;
  for (const auto& d : dataset::synth_news(1000, 2026)) with_entity += !rec.recognize(d.text).empty();
  const bool strict = with_entity == 1000;
  bool ok = true;
  std::ostringstream detail;
  for (const StrategyRow& row : r.rows) {
    if (!row.obscured || !row.restored) return {false, "no translation report"};
    const auto& o = *row.obscured;
    const auto& d = *row.restored;
    ok = ok && (strict ? d.bleu2 > o.bleu2 && d.rouge1 > o.rouge1
                       : d.bleu2 >= o.bleu2 && d.rouge1 >= o.rouge1);
    detail << row.strategy << " BLEU-2 " << fmt("%.4f", o.bleu2) << "->" << fmt("%.4f", d.bleu2)
           << " ROUGE-1 " << fmt("%.4f", o.rouge1) << "->" << fmt("%.4f", d.rouge1) << "; ";
  }
  detail << with_entity << "/1000 docs carry an entity";
  return {ok, detail.str()};
}

Outcome classification_budget() {
  const HarnessReport& r = harness_1000();
  const auto j = r.to_json();
  const std::string table = r.to_table();
  bool ok = r.plain.has_value() && j.at("pairing").size() == r.rows.size() && r.rows.size() == 2 &&
            table.find("dF1 micro") != std::string::npos;
  std::ostringstream detail;
  for (const StrategyRow& row : r.rows) {
    ok = ok && row.hidden.has_value() && std::isfinite(row.delta_micro_f1) &&
         std::isfinite(row.delta_macro_f1);
    detail << row.strategy << " dF1 micro " << fmt("%+.4f", row.delta_micro_f1) << " macro "
           << fmt("%+.4f", row.delta_macro_f1) << "; ";
  }
  detail << "pairing points " << j.at("pairing").size();
  return {ok, detail.str()};
}

Outcome throughput() {
  const Recognizer rec;
  const auto corpus = dataset::texts(dataset::synth_news(1000, 99));
  std::size_t bytes = 0;
  for (const auto& c : corpus) bytes += c.size();
  std::ostringstream detail;
  bool ok = true;
  for (const HideStrategy& s : kStrategies) {
    const HideConfig hc{s, {}};
    const auto t0 = Clock::now();
    std::size_t exact = 0;
    for (const std::string& c : corpus) {
      const auto doc = hide(c, rec.recognize(c), hc);
      exact += seek(doc, doc.anonymized).text == c;
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < 2.0 && exact == corpus.size();
    detail << s.name() << " " << fmt("%.3fs", secs) << "; ";
  }
  detail << "mean doc " << bytes / corpus.size() << " bytes, single thread";
  return {ok, detail.str()};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"round-trip", round_trip},
      {"leakage", leakage},
      {"fixture-fidelity", fixture_fidelity},
      {"similarity-oracle", similarity_oracle},
      {"metric-correctness", metric_correctness},
      {"protection-direction", protection_direction},
      {"utility-direction", utility_direction},
      {"classification-budget", classification_budget},
      {"throughput", throughput},
  };
  std::string only;
  if (argc == 3 && std::string(argv[1]) == "--only") only = argv[2];
  int failed = 0, ran = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && only != c.name) continue;
    ++ran;
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
