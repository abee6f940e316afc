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

#include <atomic>
#include <cstdlib>
#include <regex>

#include "has/dataset.hpp"
#include "has/llm.hpp"
#include "support/mock_upstream.hpp"
#include "support/oracles.hpp"

namespace has::llm {
namespace {

const std::filesystem::path kGolden = HAS_TEST_DIR "/golden";
const std::string kE =
    "The <ORG> (<ORG>) is currently investigating a cyber attack on a major corporation that "
    "occurred on <DATE>. The breach took place in the company's headquarters located in <GPE>. "
    "The <ORG> suspects that the attack was carried out by a foreign government.";
const std::string kL = "Le <ORG> (<ORG>) enquête sur une cyberattaque survenue le <DATE> à <GPE>.";
const std::string kR =
    "Le FBI (Federal Bureau of Investigation) enquête sur une cyberattaque survenue le August 10, "
    "2023 à Washington DC.";

std::string golden(const char* name) { return testing::read_file(kGolden / name); }

TEST(Prompts, SubstituteGolden) {
  EXPECT_EQ(build_prompt_s(testing::kFbiText, {"FBI", "August 10, 2023", "Washington DC"}),
            golden("prompt_s_fbi.txt"));
  EXPECT_NE(build_prompt_s("x", {}).find("\nGiven words: []\n"), std::string::npos);
}

TEST(Prompts, TaskGoldens) {
  EXPECT_EQ(build_prompt_l(kE, TaskType::kTranslate, std::string("Chinese")),
            golden("prompt_l_translate_chinese.txt"));
  EXPECT_EQ(build_prompt_l(kE, TaskType::kAbstract), golden("prompt_l_abstract.txt"));
  EXPECT_EQ(build_prompt_l("", TaskType::kPolish), "Polish the following text:\nText: ");
  EXPECT_THROW(build_prompt_l(kE, TaskType::kTranslate), ConfigError);
}

TEST(Prompts, RestoreGolden) {
  EXPECT_EQ(build_prompt_r(kE, kL, testing::kFbiText, TaskType::kTranslate),
            golden("prompt_r_translate.txt"));
  EXPECT_EQ(build_prompt_r("", "", "", TaskType::kAbstract),
            "Input: \nAbstract: \nInput: \nAbstract:");
}

TEST(Prompts, TrainingTemplates) {
  EXPECT_EQ(render_hide_training(testing::kFbiText, {"FBI", "August 10, 2023", "Washington DC"},
                                 testing::kFbiSubstituted),
            golden("hide_train_fbi.txt"));
  EXPECT_EQ(render_seek_training(kE, kL, testing::kFbiText, kR, TaskType::kTranslate),
            golden("seek_train_fbi.txt"));
}

TEST(PythonList, RoundTripsQuotes) {
  const std::vector<std::string> items = {"FBI", "it's", "a\\b", "\"q\""};
  EXPECT_EQ(parse_python_list(python_list(items)), items);
  EXPECT_EQ(python_list({"FBI", "August 10, 2023"}), "['FBI', 'August 10, 2023']");
  EXPECT_THROW(parse_python_list("['x'"), Error);
}

TEST(PayloadOf, SelectsSlots) {
  EXPECT_EQ(payload_of(build_prompt_s("body", {"a"})), "body");
  EXPECT_EQ(payload_of(build_prompt_l("text\nmore", TaskType::kAbstract)), "text\nmore");
  EXPECT_EQ(payload_of("hello"), "hello");
}

TEST(Mocks, EchoReturnsContent) {
  EXPECT_EQ(EchoBackend().complete(LlmRequest::user("hello")), "hello");
}

TEST(Mocks, DictTranslateTokenWalk) {
  DictTranslateBackend d({{"cat", "chat"}, {"the", "le"}}, "French");
  EXPECT_EQ(d.translate("the cat <ORG>"), "le chat <ORG>");
  EXPECT_EQ(DictTranslateBackend({{"cat", "chat"}}, "French").translate("the cat <ORG>"),
            "the chat <ORG>");
  EXPECT_EQ(d.translate("The cat <ORG_2>, dog."), "Le chat <ORG_2>, dog.");
}

TEST(Mocks, DictPreservesPlaceholderMultiset) {
  const auto d = DictTranslateBackend::load(HAS_DATA_DIR "/lexicon_en_fr.tsv", "French");
  const std::regex ph("<[A-Z][A-Z0-9_]*>");
  auto bag = [&](const std::string& s) {
    std::multiset<std::string> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), ph); it != std::sregex_iterator(); ++it) {
      out.insert(it->str());
    }
    return out;
  };
  testing::Lcg g(12);
  const std::vector<std::string> parts = {"the ", "<ORG>", "<DATE_2>", " company", ", ", "<GPE>",
                                          "said", " and ", "<FOO_BAR>", "x<ORG>y"};
  for (int t = 0; t < 200; ++t) {
    std::string s;
    for (int i = 0; i < 12; ++i) s += parts[g.below(parts.size())];
    EXPECT_EQ(bag(d.translate(s)), bag(s)) << s;
  }
}

TEST(Mocks, ClassifyScoresByHand) {
  ClassifyBackend c({{"sport", {"match", "team"}}, {"tech", {"software"}}});
  // sport: match + team = 2, tech: software = 1.
  EXPECT_EQ(c.classify("The team won the match with new software."), "sport");
  // Tie at zero goes to the smallest label.
  EXPECT_EQ(c.classify("nothing"), "sport");
  EXPECT_EQ(ClassifyBackend({{"b", {"x"}}, {"a", {"y"}}}).classify("x y"), "a");
}

TEST(Request, Validation) {
  LlmRequest r;
  EXPECT_THROW(r.check(), Error);
  r = LlmRequest::user("hi");
  r.params.temperature = -1;
  EXPECT_THROW(r.check(), Error);
  const auto j = LlmRequest::user("hi").to_json();
  EXPECT_EQ(LlmRequest::from_json(j).last_user().content, "hi");
}

class RemoteTest : public ::testing::Test {
 protected:
  void SetUp() override { setenv("HAS_TEST_KEY", "sk-test-123", 1); }
  RemoteConfig cfg(const testing::MockUpstream& up) {
    RemoteConfig c;
    c.endpoint = up.endpoint();
    c.model = "m1";
    c.key_env = "HAS_TEST_KEY";
    c.timeout_seconds = 5;
    return c;
  }
};

TEST_F(RemoteTest, SendsBearerAndParsesChoice) {
  testing::MockUpstream up;
  RemoteChatBackend b(cfg(up));
  EXPECT_EQ(b.complete(LlmRequest::user("bonjour")), "bonjour");
  const auto cap = up.captured();
  ASSERT_EQ(cap.size(), 1u);
  EXPECT_EQ(cap[0].authorization, "Bearer sk-test-123");
  const auto body = nlohmann::json::parse(cap[0].body);
  EXPECT_EQ(body.at("model"), "m1");
  EXPECT_TRUE(body.contains("temperature"));
  EXPECT_TRUE(body.contains("max_tokens"));
  EXPECT_EQ(cap[0].body.find("sk-test-123"), std::string::npos);
  EXPECT_TRUE(b.reachable());
}

TEST_F(RemoteTest, MissingKeyFailsBeforeRequest) {
  testing::MockUpstream up;
  auto c = cfg(up);
  c.key_env = "HAS_TEST_KEY_UNSET_X";
  unsetenv("HAS_TEST_KEY_UNSET_X");
  RemoteChatBackend b(c);
  EXPECT_THROW(b.complete(LlmRequest::user("x")), ConfigError);
  EXPECT_TRUE(up.captured().empty());
}

TEST_F(RemoteTest, ConfigErrors) {
  RemoteConfig c;
  c.key_env = "K";
  EXPECT_THROW(RemoteChatBackend{c}, ConfigError);
  c.endpoint = "ftp://x";
  EXPECT_THROW(RemoteChatBackend{c}, ConfigError);
  c.endpoint = "http://x";
  c.key_env.clear();
  EXPECT_THROW(RemoteChatBackend{c}, ConfigError);
  EXPECT_THROW(BackendConfig::from_json({{"kind", "remote"}, {"api_key", "sk-1"}}), ConfigError);
}

TEST_F(RemoteTest, DistinctErrors) {
  {
    testing::MockUpstream up([](const std::string&) { return std::make_pair(404, std::string("{}")); });
    try {
      RemoteChatBackend(cfg(up)).complete(LlmRequest::user("x"));
      FAIL();
    } catch (const HttpStatusError& e) {
      EXPECT_EQ(e.status(), 404);
    }
  }
  {
    testing::MockUpstream up([](const std::string&) { return std::make_pair(200, std::string("{\"x\":1}")); });
    EXPECT_THROW(RemoteChatBackend(cfg(up)).complete(LlmRequest::user("x")), MalformedResponseError);
  }
  RemoteConfig dead;
  dead.endpoint = "http://127.0.0.1:1/v1";
  dead.key_env = "HAS_TEST_KEY";
  dead.timeout_seconds = 1;
  EXPECT_THROW(RemoteChatBackend(dead).complete(LlmRequest::user("x")), TransportError);
}

TEST_F(RemoteTest, OneRequestWithoutRetryConfig) {
  testing::MockUpstream up([](const std::string&) { return std::make_pair(503, std::string("{}")); });
  EXPECT_THROW(RemoteChatBackend(cfg(up)).complete(LlmRequest::user("x")), HttpStatusError);
  EXPECT_EQ(up.captured().size(), 1u);
}

TEST_F(RemoteTest, ExplicitRetryBacksOff) {
  std::atomic<int> calls{0};
  testing::MockUpstream up([&](const std::string& body) {
    if (++calls < 3) return std::make_pair(503, std::string("{}"));
    return testing::MockUpstream::echo(body);
  });
  auto c = cfg(up);
  c.retry.max_attempts = 3;
  c.retry.initial_backoff_ms = 1;
  EXPECT_EQ(RemoteChatBackend(c).complete(LlmRequest::user("ok")), "ok");
  EXPECT_EQ(up.captured().size(), 3u);
}

TEST(Batch, KeepsOrderAndErrors) {
  FunctionBackend b("f", [](const LlmRequest& r) {
    if (r.last_user().content == "bad") throw BackendError("boom");
    return r.last_user().content + "!";
  });
  std::vector<LlmRequest> reqs;
  for (const char* s : {"a", "bad", "c", "d", "e"}) reqs.push_back(LlmRequest::user(s));
  const auto out = complete_batch(b, reqs, 3);
  EXPECT_EQ(out.outputs[0], "a!");
  EXPECT_EQ(out.outputs[4], "e!");
  EXPECT_EQ(out.errors[1], "boom");
  EXPECT_TRUE(out.errors[2].empty());
}

TEST(Factory, BuildsMocks) {
  BackendConfig c;
  c.kind = BackendKind::kDict;
  c.lexicon = HAS_DATA_DIR "/lexicon_en_fr.tsv";
  EXPECT_EQ(make_backend(c)->name(), "dict");
  c.kind = BackendKind::kClassify;
  c.keywords = HAS_DATA_DIR "/classify_keywords.json";
  EXPECT_EQ(make_backend(c)->name(), "classify");
  EXPECT_EQ(parse_backend_kind("echo"), BackendKind::kEcho);
  EXPECT_THROW(parse_backend_kind("nope"), ConfigError);
}

}  // namespace
}  // namespace has::llm
