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

// has: command line front end. Exit codes: 0 ok, 1 usage, 2 runtime.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "has/adversary.hpp"
#include "has/config.hpp"
#include "has/dataset.hpp"
#include "has/gateway.hpp"
#include "has/harness.hpp"
#include "has/hide.hpp"
#include "has/json_io.hpp"
#include "has/llm.hpp"
#include "has/recognizer.hpp"
#include "has/seek.hpp"

#ifndef HAS_DATA_DIR
#define HAS_DATA_DIR "data"
#endif

namespace {

using has::AppConfig;

constexpr int kUsage = 1;
constexpr int kRuntime = 2;

struct Common {
  std::string config;
  std::string seed;
  std::string strategy;
  std::string task = "translate";
  std::string backend;
  std::string target;
  std::string out;
  bool json = false;
};

class Runtime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "integer seed, or 'random'");
  cmd->add_option("--out", c.out, "write the result to PATH instead of stdout");
}

void add_strategy(CLI::App* cmd, Common& c) {
  cmd->add_option("--strategy", c.strategy, "hiding strategy")
      ->check(CLI::IsMember({"label", "generative"}));
}

void add_backend(CLI::App* cmd, Common& c) {
  cmd->add_option("--backend", c.backend, "LLM backend")
      ->check(CLI::IsMember({"echo", "dict", "classify", "remote"}));
}

void add_task(CLI::App* cmd, Common& c) {
  cmd->add_option("--task", c.task, "downstream task")
      ->check(CLI::IsMember({"translate", "abstract", "polish", "classify"}));
  cmd->add_option("--target", c.target, "target language for translate");
}

std::uint64_t parse_seed(const std::string& s) {
  if (s == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--seed", "expected an integer or 'random'");
  }
}

// Config file first, then flags on top.
AppConfig resolve(const Common& c) {
  AppConfig cfg = c.config.empty() ? AppConfig{} : AppConfig::load(c.config);
  if (!c.seed.empty()) cfg.hide.policy.seed = parse_seed(c.seed);
  if (!c.strategy.empty()) cfg.hide.strategy = has::HideStrategy::parse(c.strategy);
  if (!c.backend.empty()) cfg.backend.kind = has::llm::parse_backend_kind(c.backend);
  if (cfg.backend.lexicon.empty()) {
    cfg.backend.lexicon = std::filesystem::path(HAS_DATA_DIR) / "lexicon_en_fr.tsv";
  }
  if (cfg.backend.keywords.empty()) {
    cfg.backend.keywords = std::filesystem::path(HAS_DATA_DIR) / "classify_keywords.json";
  }
  if (!c.target.empty()) cfg.backend.target = c.target;
  cfg.gateway.hide = cfg.hide;
  return cfg;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Runtime("cannot read " + path);
  return slurp(in);
}

std::string read_input(const std::string& text, const std::string& path) {
  if (!text.empty()) return text;
  return read_file(path.empty() ? "-" : path);
}

void emit(const Common& c, const std::string& payload) {
  if (c.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  has::dataset::write_text(
      c.out, !payload.empty() && payload.back() == '\n' ? payload : payload + "\n");
}

has::TaskType task_of(const Common& c) { return *has::parse_task_type(c.task); }

// --- review ----------------------------------------------------------------

std::vector<has::EntitySpan> review(const std::string& text,
                                    std::vector<has::EntitySpan> spans) {
  std::vector<std::string> surfaces = has::dedup_surfaces(spans);
  std::map<std::string, has::EntityType> types;
  for (const has::EntitySpan& s : spans) types.emplace(s.surface, s.etype);
  std::set<std::string> dropped;
  std::string line;
  for (const std::string& surface : surfaces) {
    std::cerr << "entity \"" << surface << "\" (" << has::to_string(types[surface])
              << ") [k]eep, [d]rop, [r TYPE] retype: " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "d" || line == "drop") {
      dropped.insert(surface);
    } else if (line.rfind("r ", 0) == 0) {
      types[surface] = has::entity_type_from_string(line.substr(2));
    }
  }
  std::vector<has::EntitySpan> kept;
  for (has::EntitySpan& s : spans) {
    if (dropped.count(s.surface)) continue;
    s.etype = types[s.surface];
    kept.push_back(std::move(s));
  }
  std::vector<has::EntitySpan> added;
  for (;;) {
    std::cerr << "add entity as 'TYPE surface' (blank to finish): " << std::flush;
    if (!std::getline(std::cin, line) || line.empty()) break;
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos) {
      std::cerr << "expected 'TYPE surface'\n";
      continue;
    }
    const has::EntityType t = has::entity_type_from_string(line.substr(0, sp));
    for (has::EntitySpan& s : has::spans_for_surface(text, line.substr(sp + 1), t)) {
      added.push_back(std::move(s));
    }
  }
  return has::merge_spans(kept, has::resolve_overlaps(std::move(added)));
}

// --- subcommands -----------------------------------------------------------

int cmd_hide(const Common& c, const std::string& text, const std::string& input) {
  const AppConfig cfg = resolve(c);
  const has::Recognizer recognizer(cfg.recognizer);
  const std::string doc_text = read_input(text, input);
  const has::AnonymizedDocument doc =
      has::hide(doc_text, recognizer.recognize(doc_text), cfg.hide);
  emit(c, c.json ? nlohmann::json(doc).dump(2) : doc.anonymized);
  return 0;
}

int cmd_seek(const Common& c, const std::string& doc_path, const std::string& text,
             const std::string& input) {
  const AppConfig cfg = resolve(c);
  has::AnonymizedDocument doc;
  try {
    doc = nlohmann::json::parse(read_file(doc_path)).get<has::AnonymizedDocument>();
  } catch (const nlohmann::json::exception& e) {
    throw Runtime(std::string("bad document file: ") + e.what());
  }
  const has::SeekResult r = has::seek(doc, read_input(text, input), cfg.seek);
  emit(c, c.json ? nlohmann::json(r).dump(2) : r.text);
  return 0;
}

int cmd_run(const Common& c, const std::string& text, const std::string& input,
            bool interactive) {
  const AppConfig cfg = resolve(c);
  const has::Recognizer recognizer(cfg.recognizer);
  const auto backend = has::llm::make_backend(cfg.backend);
  has::PipelineRecord rec;
  rec.c = read_input(text, input);
  rec.task = task_of(c);
  rec.p = recognizer.recognize(rec.c);
  if (interactive) rec.p = review(rec.c, rec.p);
  const has::AnonymizedDocument doc = has::hide(rec.c, rec.p, cfg.hide);
  rec.e = doc.anonymized;
  const std::optional<std::string> target =
      rec.task == has::TaskType::kTranslate ? std::optional<std::string>(cfg.backend.target)
                                            : std::nullopt;
  rec.l = has::llm::complete(
      *backend, has::llm::LlmRequest::user(has::llm::build_prompt_l(*rec.e, rec.task, target)));
  rec.d = has::seek(doc, *rec.l, cfg.seek).text;
  emit(c, c.json ? nlohmann::json(rec).dump(2) : *rec.d);
  return 0;
}

std::vector<has::dataset::NewsDoc> corpus_of(const std::string& path, std::size_t synthetic,
                                             std::uint64_t seed) {
  if (!path.empty()) {
    try {
      return has::dataset::load_corpus(path);
    } catch (const has::Error& e) {
      throw Runtime(e.what());
    }
  }
  return has::dataset::synth_news(synthetic, seed);
}

int cmd_attack(const Common& c, const std::string& corpus_path, std::size_t synthetic,
               const std::string& attacker_name) {
  const AppConfig cfg = resolve(c);
  const has::Recognizer recognizer(cfg.recognizer);
  const auto docs = corpus_of(corpus_path, synthetic, cfg.hide.policy.seed);
  std::vector<std::string> train;
  std::vector<std::string> test;
  for (const auto& d : docs) {
    (has::dataset::in_train_split(d.text) ? train : test).push_back(d.text);
  }
  if (test.empty()) throw Runtime("corpus has no held-out documents");
  std::unique_ptr<has::Attacker> attacker;
  if (attacker_name == "identity") {
    attacker = std::make_unique<has::IdentityAttacker>();
  } else {
    has::InversionTable table =
        has::train_inversion(has::collect_pairs(train, recognizer, cfg.hide));
    if (attacker_name == "informed") {
      attacker = std::make_unique<has::InversionAttacker>(has::make_informed_attacker(
          table, cfg.hide.policy, has::enumerable_originals(cfg.recognizer)));
    } else {
      attacker = std::make_unique<has::InversionAttacker>(std::move(table));
    }
  }
  const has::ProtectionReport r =
      has::evaluate_protection(test, recognizer, cfg.hide, *attacker);
  emit(c, r.to_json().dump(2));
  return 0;
}

int cmd_eval(const Common& c, const std::string& corpus_path, std::size_t synthetic) {
  const AppConfig cfg = resolve(c);
  const has::Recognizer recognizer(cfg.recognizer);
  const auto docs = corpus_of(corpus_path, synthetic, cfg.hide.policy.seed);
  if (docs.empty()) throw Runtime("empty corpus");
  const auto translator =
      has::llm::DictTranslateBackend::load(cfg.backend.lexicon, cfg.backend.target);
  const auto classifier = has::llm::ClassifyBackend::load(cfg.backend.keywords);
  has::HarnessOptions o;
  o.policy = cfg.hide.policy;
  o.seek = cfg.seek;
  o.recognizer = &recognizer;
  o.translator = &translator;
  o.classifier = &classifier;
  if (!c.strategy.empty()) o.strategies = {cfg.hide.strategy};
  const has::HarnessReport r = has::run_harness(docs, o);
  if (c.json) {
    emit(c, r.to_json().dump(2));
  } else {
    emit(c, r.to_table());
  }
  return 0;
}

int cmd_synth(const Common& c, const std::string& corpus_path, std::size_t synthetic,
              const std::string& hide_backend) {
  const AppConfig cfg = resolve(c);
  if (c.out.empty()) throw CLI::ValidationError("--out", "synth needs an output directory");
  const has::Recognizer recognizer(cfg.recognizer);
  const auto docs = corpus_of(corpus_path, synthetic, cfg.hide.policy.seed);
  const auto backend = has::llm::make_backend(cfg.backend);
  std::shared_ptr<const has::llm::Backend> hider;
  if (hide_backend == "substituter") {
    hider = std::make_shared<has::dataset::SubstituterBackend>(recognizer, cfg.hide.policy);
  } else {
    hider = backend;
  }
  const auto hidden = has::dataset::synth_hide_corpus(has::dataset::texts(docs), *hider,
                                                      recognizer, cfg.backend.parallelism);
  std::vector<has::dataset::SeekSource> sources;
  for (const auto& r : hidden.records) sources.push_back({r.c, r.s});
  const has::TaskType task = task_of(c);
  const auto sought = has::dataset::synth_seek_corpus(
      sources, *backend, task,
      task == has::TaskType::kTranslate ? std::optional<std::string>(cfg.backend.target)
                                        : std::nullopt,
      cfg.backend.parallelism);

  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  has::dataset::write_jsonl(dir / "hide.jsonl", hidden.records);
  has::dataset::write_jsonl(dir / "seek.jsonl", sought.records);
  has::dataset::write_text(dir / "hide_train.txt",
                           has::dataset::render_hide_file(hidden.records));
  has::dataset::write_text(dir / "seek_train.txt",
                           has::dataset::render_seek_file(sought.records));
  for (const auto& s : hidden.skipped) {
    std::cerr << "hide: skipped doc " << s.index << ": " << s.reason << "\n";
  }
  for (const auto& s : sought.skipped) {
    std::cerr << "seek: skipped record " << s.index << ": " << s.reason << "\n";
  }
  std::cout << "hide records " << hidden.records.size() << ", seek records "
            << sought.records.size() << " -> " << dir.string() << "\n";
  return 0;
}

has::Gateway* g_gateway = nullptr;

void on_signal(int) {
  if (g_gateway) g_gateway->stop();
}

int cmd_serve(const Common& c, const std::string& host, int port, bool passthrough) {
  AppConfig cfg = resolve(c);
  if (!host.empty()) cfg.gateway.host = host;
  if (port >= 0) cfg.gateway.port = port;
  if (passthrough) cfg.gateway.hide_enabled = false;
  has::Gateway gateway(cfg.gateway, has::llm::make_backend(cfg.backend));
  const int bound = gateway.bind();
  std::cerr << "listening on " << cfg.gateway.host << ":" << bound << " (upstream "
            << has::llm::to_string(cfg.backend.kind) << ", strategy "
            << (cfg.gateway.hide_enabled ? cfg.gateway.hide.strategy.name() : "disabled")
            << ")" << std::endl;
  g_gateway = &gateway;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  gateway.listen();
  g_gateway = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hide-and-seek privacy gateway"};
  app.require_subcommand(1);
  Common c;
  std::string text;
  std::string input;
  std::string doc_path;
  std::string corpus;
  std::size_t synthetic = 200;
  std::string attacker = "inversion";
  std::string hide_backend = "substituter";
  std::string host;
  int port = -1;
  bool interactive = false;
  bool passthrough = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file, '-' for stdin");
    cmd->add_option("--text", text, "literal input text");
  };
  auto add_corpus = [&](CLI::App* cmd) {
    cmd->add_option("corpus", corpus, "corpus (.jsonl with text/label, else one doc per line)");
    cmd->add_option("--synthetic", synthetic, "synthetic documents when no corpus is given");
  };

  CLI::App* hide = app.add_subcommand("hide", "anonymize a document");
  add_common(hide, c);
  add_strategy(hide, c);
  add_input(hide);
  hide->add_flag("--json", c.json, "print the anonymized document with its mapping");

  CLI::App* seek = app.add_subcommand("seek", "restore an LLM answer");
  add_common(seek, c);
  seek->add_option("--doc", doc_path, "document written by 'hide --json'")->required();
  add_input(seek);
  seek->add_flag("--json", c.json, "print the full seek result");

  CLI::App* run = app.add_subcommand("run", "recognize, hide, complete and seek");
  add_common(run, c);
  add_strategy(run, c);
  add_backend(run, c);
  add_task(run, c);
  add_input(run);
  run->add_flag("--review", interactive, "confirm or edit the entity list first");
  run->add_flag("--json", c.json, "print the pipeline record");

  CLI::App* attack = app.add_subcommand("attack", "score an attacker on held-out documents");
  add_common(attack, c);
  add_strategy(attack, c);
  add_corpus(attack);
  attack->add_option("--attacker", attacker, "attacker")
      ->check(CLI::IsMember({"identity", "inversion", "informed"}));

  CLI::App* eval = app.add_subcommand("eval", "protection versus budget for every strategy");
  add_common(eval, c);
  add_strategy(eval, c);
  add_corpus(eval);
  add_task(eval, c);
  eval->add_flag("--json", c.json, "print JSON instead of the table");

  CLI::App* synth = app.add_subcommand("synth", "write hide and seek training data");
  add_common(synth, c);
  add_backend(synth, c);
  add_task(synth, c);
  add_corpus(synth);
  synth->add_option("--hide-backend", hide_backend, "backend answering the substitution prompts")
      ->check(CLI::IsMember({"substituter", "same"}));

  CLI::App* serve = app.add_subcommand("serve", "run the chat-completions gateway");
  add_common(serve, c);
  add_strategy(serve, c);
  add_backend(serve, c);
  serve->add_option("--host", host, "listen address");
  serve->add_option("--port", port, "listen port, 0 picks one")->check(CLI::Range(0, 65535));
  serve->add_flag("--passthrough", passthrough, "forward requests without hiding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*hide) return cmd_hide(c, text, input);
    if (*seek) return cmd_seek(c, doc_path, text, input);
    if (*run) return cmd_run(c, text, input, interactive);
    if (*attack) return cmd_attack(c, corpus, synthetic, attacker);
    if (*eval) return cmd_eval(c, corpus, synthetic);
    if (*synth) return cmd_synth(c, corpus, synthetic, hide_backend);
    if (*serve) return cmd_serve(c, host, port, passthrough);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}
