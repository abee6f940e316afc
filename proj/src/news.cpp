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

#include <array>
#include <map>
#include <string>

#include "has/dataset.hpp"
#include "lexical.hpp"
#include "rng.hpp"

namespace has::dataset {
namespace {

// Slots: {P1} {P2} people, {O1} {O2} organizations, {G1} {G2} places,
// {NORP} {LOC} {FAC} {LAW} {LANG} {WORK}, and fresh values for {DATE}
// {TIME} {MONEY} {PCT} {QTY}.
struct Topic {
  std::string_view label;
  std::vector<std::string_view> leads;
  std::vector<std::string_view> body;
};

const std::vector<Topic>& topics() {
  static const std::vector<Topic> kTopics = {
      {"business",
       {"{O1} reported a profit of {MONEY} for the quarter ending {DATE}, "
        "according to a statement released in {G1}.",
        "Shares of {O1} rose {PCT} on {DATE} after the company agreed to buy "
        "{O2} for {MONEY}."},
       {"Chief executive {P1} told investors that sales in {G1} had grown by "
        "{PCT} over the past year.",
        "The company said it expects revenue of {MONEY} next year, despite "
        "weak demand in {G2}.",
        "Analysts at {O2} said the market had expected a smaller increase in "
        "profit.",
        "{P1} said the deal would create a stronger business and help the "
        "company reach new customers.",
        "The firm employs about {QTY} workers in its factories near {LOC}.",
        "Investors will watch the next report, due on {DATE}, for signs of "
        "growth in {G1}.",
        "The bank cut its forecast by {PCT} and warned that prices could rise "
        "again.",
        "{P2}, an economist at {O2}, said the results were better than "
        "expected.",
        "The new plant will produce {QTY} of steel each year for the "
        "{NORP} market.",
        "Trading closed at {TIME} with the stock up {PCT} on the day.",
        "{O1} also plans to open an office in {G2} by {DATE}.",
        "The board approved a dividend of {MONEY} to be paid to shareholders.",
        "Workers at the site near {LOC} will receive a pay rise of {PCT}.",
        "Demand for the products of {O1} remained strong among {NORP} buyers."}},
      {"politics",
       {"The government of {G1} announced on {DATE} that it will change the "
        "{LAW} after a long debate in parliament.",
        "{P1} won the election in {G1} on {DATE} with {PCT} of the vote."},
       {"The minister said the new law would cost {MONEY} and protect "
        "families across the country.",
        "Opposition leader {P2} said the plan was unfair and promised to vote "
        "against it.",
        "{NORP} voters were divided, and a poll found that {PCT} supported "
        "the reform.",
        "The prime minister met officials from {O1} in {G2} to discuss trade "
        "and security.",
        "Protesters gathered near the {FAC} at {TIME} to demand new "
        "elections.",
        "{P1} said the government would publish the report in {LANG} by {DATE} "
        "and online.",
        "The committee will meet again on {DATE} to review the budget of "
        "{MONEY}.",
        "Officials in {G1} said the policy would reduce emissions by {QTY} "
        "each year.",
        "The president of {G2} called the decision a step toward peace.",
        "Members of parliament debated the bill until {TIME} on {DATE}.",
        "{P2} said the {LAW} had failed to protect workers in {G1}.",
        "The government will spend {MONEY} on new schools and hospitals.",
        "Support for the ruling party fell to {PCT} in the latest survey.",
        "Leaders from {G2} are expected to visit {G1} on {DATE}."}},
      {"sport",
       {"{O1} beat {O2} on {DATE} to reach the final, with {P1} scoring "
        "twice in the second half.",
        "{P1} won the race in {G1} on {DATE}, finishing the course of {QTY} "
        "in record time."},
       {"The coach said the team had played well and deserved the victory.",
        "More than {QTY} fans watched the match at the {FAC}.",
        "{P2} was injured in the first half and will miss the next game on "
        "{DATE}.",
        "The club paid {MONEY} to sign the player from {G2} last summer.",
        "The game started at {TIME} in front of a crowd of {NORP} supporters.",
        "{O1} have won {PCT} of their matches this season.",
        "{P1} said the team would train in {G1} before the final.",
        "The next match against {O2} will be played on {DATE}.",
        "The league fined the club {MONEY} for the behaviour of its fans.",
        "Players from {G2} have dominated the season so far.",
        "{P2} ran {QTY} during the match, more than any other player.",
        "Tickets for the final cost up to {MONEY} each.",
        "The team from {G1} will travel to {G2} on {DATE} for the next round.",
        "{O2} said the result was a fair reflection of the game."}},
      {"tech",
       {"{O1} unveiled a new phone in {G1} on {DATE}, priced at {MONEY}.",
        "Engineers at {O1} said on {DATE} that their new chip uses {PCT} "
        "less energy than the previous model."},
       {"{P1}, who leads the research team, said the software would reach "
        "users by {DATE}.",
        "The company plans to build a data centre near {LOC} that will use "
        "{QTY} of power.",
        "Regulators in {G2} are checking whether the product complies with "
        "the {LAW}.",
        "The app is available in {LANG} and will support more languages next "
        "year.",
        "{O2} said it would invest {MONEY} in artificial intelligence.",
        "Sales of the device rose {PCT} in the first week, according to "
        "{P2}.",
        "The launch event began at {TIME} and was streamed online.",
        "Researchers in {G1} said the system could help doctors find disease "
        "earlier.",
        "{NORP} developers have built many of the most popular apps.",
        "Security experts warned that the update could expose user data.",
        "{O1} said the new network would cover {PCT} of homes in {G1} by {DATE}.",
        "The battery lasts for about {QTY} on a single charge, according to {P1}.",
        "Shares of {O2} fell {PCT} after the announcement.",
        "The company will hold a conference in {G2} on {DATE} at {TIME}."}},
      {"entertainment",
       {"The film adaptation of {WORK} opened in {G1} on {DATE} and earned "
        "{MONEY} in its first weekend.",
        "{P1} will star in a new production of {WORK} at the {FAC} from "
        "{DATE}."},
       {"Critics praised the performance of {P2} and the music of the show.",
        "The director said the story was inspired by a trip to {LOC}.",
        "Tickets for the opening night sold out in {QTY} minutes.",
        "The show will tour {G2} and {G1} later in the year.",
        "{O1} bought the rights to the book for {MONEY}.",
        "The premiere started at {TIME} with a concert by a {NORP} orchestra.",
        "{P1} said the role was the most difficult of their career.",
        "A version in {LANG} will be released on {DATE}.",
        "Audiences gave the film a rating of {PCT} on the website.",
        "The festival in {G1} will honour the actors on {DATE}.",
        "{P2} wrote the music for the film in {G2}.",
        "The soundtrack has sold {QTY} copies, according to {O1}.",
        "The cast will perform {WORK} again at {TIME} on {DATE}.",
        "Box office sales rose {PCT} compared with last year."}},
  };
  return kTopics;
}

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[rng.below(pool.size())];
}

std::string with_commas(std::int64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string fresh_date(Rng& rng) {
  const int year = static_cast<int>(rng.between(2015, 2025));
  const auto month = static_cast<std::size_t>(rng.below(12));
  const int day = static_cast<int>(rng.between(1, 28));
  switch (rng.below(5)) {
    case 0:
      return std::string(lexical::kMonths[month]) + " " + std::to_string(day) + ", " +
             std::to_string(year);
    case 1:
      return std::to_string(day) + " " + std::string(lexical::kMonths[month]) + " " +
             std::to_string(year);
    case 2:
      return std::string(lexical::kMonths[month]) + " " + std::to_string(year);
    case 3:
      return std::string(lexical::kWeekdays[rng.below(7)]);
    default:
      return std::string(lexical::kMonths[month]) + " " + std::to_string(day);
  }
}

std::string fresh_time(Rng& rng) {
  const int hour = static_cast<int>(rng.between(1, 12));
  switch (rng.below(3)) {
    case 0:
      return std::to_string(hour) + (rng.below(2) ? " am" : " pm");
    case 1: {
      const int minute = static_cast<int>(rng.below(4)) * 15;
      return std::to_string(hour) + ":" + (minute < 10 ? "0" : "") +
             std::to_string(minute) + (rng.below(2) ? " a.m." : " p.m.");
    }
    default:
      return std::to_string(rng.between(8, 22)) + ":" +
             std::to_string(rng.between(10, 59));
  }
}

std::string fresh_money(Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return "$" + std::to_string(rng.between(1, 99)) + "." +
             std::to_string(rng.between(1, 9)) + " million";
    case 1:
      return "$" + with_commas(rng.between(10, 900) * 1000);
    case 2:
      return std::to_string(rng.between(2, 500)) + " dollars";
    default:
      return "€" + std::to_string(rng.between(1, 20)) + " billion";
  }
}

std::string fresh_percent(Rng& rng) {
  if (rng.below(3) == 0) {
    return std::to_string(rng.between(1, 60)) + " percent";
  }
  if (rng.below(2) == 0) {
    return std::to_string(rng.between(1, 40)) + "." + std::to_string(rng.between(1, 9)) +
           "%";
  }
  return std::to_string(rng.between(2, 90)) + "%";
}

std::string fresh_quantity(Rng& rng) {
  static const std::array<std::string_view, 5> kUnitsUsed = {"tonnes", "kg", "miles",
                                                             "km", "megawatts"};
  return with_commas(rng.between(2, 5000)) + " " +
         std::string(kUnitsUsed[rng.below(kUnitsUsed.size())]);
}

bool nested(const std::string& a, const std::string& b) {
  return a.find(b) != std::string::npos || b.find(a) != std::string::npos;
}

class DocWriter {
 public:
  explicit DocWriter(Rng& rng) : rng_(rng) {
    add("P1", EntityType::kPerson);
    add("P2", EntityType::kPerson);
    add("O1", EntityType::kOrg);
    add("O2", EntityType::kOrg);
    add("G1", EntityType::kGpe);
    add("G2", EntityType::kGpe);
    add("NORP", EntityType::kNorp);
    add("LOC", EntityType::kLoc);
    add("FAC", EntityType::kFac);
    add("LAW", EntityType::kLaw);
    add("LANG", EntityType::kLanguage);
    add("WORK", EntityType::kWorkOfArt);
  }

  std::string fill(std::string_view tmpl) {
    std::string out;
    std::size_t i = 0;
    while (i < tmpl.size()) {
      if (tmpl[i] != '{') {
        out.push_back(tmpl[i++]);
        continue;
      }
      const std::size_t close = tmpl.find('}', i);
      const std::string key(tmpl.substr(i + 1, close - i - 1));
      out += value(key);
      i = close + 1;
    }
    return out;
  }

 private:
  std::string value(const std::string& key) {
    if (key == "DATE") return fresh_date(rng_);
    if (key == "TIME") return fresh_time(rng_);
    if (key == "MONEY") return fresh_money(rng_);
    if (key == "PCT") return fresh_percent(rng_);
    if (key == "QTY") return fresh_quantity(rng_);
    return slots_.at(key);
  }

  // Entities of one document never contain one another.
  void add(const std::string& key, EntityType type) {
    const auto& pool = starter_entries(type);
    for (;;) {
      const std::string& v = pick(rng_, pool);
      bool clash = false;
      for (const auto& [k, other] : slots_) clash = clash || nested(v, other);
      if (!clash) {
        slots_[key] = v;
        return;
      }
    }
  }

  Rng& rng_;
  std::map<std::string, std::string> slots_;
};

}  // namespace

const std::vector<std::string>& news_labels() {
  static const std::vector<std::string> kLabels = [] {
    std::vector<std::string> v;
    for (const Topic& t : topics()) v.emplace_back(t.label);
    return v;
  }();
  return kLabels;
}

std::vector<NewsDoc> synth_news(std::size_t n, std::uint64_t seed,
                                std::size_t target_bytes) {
  std::vector<NewsDoc> docs;
  docs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rng rng(derive_seed(seed, 0x6e657773, "doc", k));
    const Topic& topic = topics()[rng.below(topics().size())];
    DocWriter writer(rng);
    std::string text;
    text = writer.fill(topic.leads[rng.below(topic.leads.size())]);
    std::vector<std::size_t> order(topic.body.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    for (std::size_t i = 0; i < order.size() && text.size() < target_bytes; ++i) {
      text += ' ';
      text += writer.fill(topic.body[order[i]]);
    }
    docs.push_back(NewsDoc{std::move(text), std::string(topic.label)});
  }
  return docs;
}

}  // namespace has::dataset
