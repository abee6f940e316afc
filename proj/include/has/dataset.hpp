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

// Training data synthesis for the hide and seek models, JSONL plumbing and
// the synthetic news corpus used by the tests and the evaluation harness.

#ifndef HAS_DATASET_HPP_
#define HAS_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "has/hide.hpp"
#include "has/json_io.hpp"
#include "has/llm.hpp"
#include "has/recognizer.hpp"
#include "has/types.hpp"
#include "json.hpp"

namespace has::dataset {

struct HideTrainRecord {
  std::string c;
  std::vector<std::string> p;
  std::string s;

  bool operator==(const HideTrainRecord&) const = default;
};

struct SeekTrainRecord {
  std::string e;
  std::string l;
  std::string c;
  std::string r;
  TaskType task = TaskType::kTranslate;

  bool operator==(const SeekTrainRecord&) const = default;
};

void to_json(nlohmann::json& j, const HideTrainRecord& r);
void from_json(const nlohmann::json& j, HideTrainRecord& r);
void to_json(nlohmann::json& j, const SeekTrainRecord& r);
void from_json(const nlohmann::json& j, SeekTrainRecord& r);

// Throws Error when a field is empty or s equals c.
void validate(const HideTrainRecord& r);
void validate(const SeekTrainRecord& r);

struct Issue {
  std::size_t index;  // position in the input
  std::string reason;
};

struct HideSynthResult {
  std::vector<HideTrainRecord> records;
  std::vector<Issue> skipped;
};

struct SeekSynthResult {
  std::vector<SeekTrainRecord> records;
  std::vector<Issue> skipped;
};

// s = backend(prompt_S(c, P(c))) per document. Documents without entities
// or whose request fails are skipped.
HideSynthResult synth_hide_corpus(const std::vector<std::string>& corpus,
                                  const llm::Backend& backend,
                                  const Recognizer& recognizer,
                                  int parallelism = 4);

struct SeekSource {
  std::string c;
  std::string e;
};

// l = backend(prompt_L(e)), then r = backend(prompt_R(e, l, c)).
SeekSynthResult synth_seek_corpus(const std::vector<SeekSource>& sources,
                                  const llm::Backend& backend, TaskType task,
                                  const std::optional<std::string>& target = {},
                                  int parallelism = 4);

// --- JSONL ------------------------------------------------------------------

class JsonlError : public Error {
 public:
  JsonlError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

template <typename T>
void write_jsonl(const std::filesystem::path& path, const std::vector<T>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const T& r : records) {
    out << nlohmann::json(r).dump(-1, ' ', false,
                                  nlohmann::json::error_handler_t::strict)
        << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

// One object per line; blank lines are skipped. A line that does not parse
// or does not fit T raises JsonlError carrying its 1-based number.
template <typename T>
std::vector<T> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::vector<T> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line).get<T>());
    } catch (const nlohmann::json::exception& e) {
      throw JsonlError(lineno, e.what());
    } catch (const Error& e) {
      throw JsonlError(lineno, e.what());
    }
  }
  return out;
}

// Rendered training examples, one per record, separated by a blank line.
std::string render_hide_file(const std::vector<HideTrainRecord>& records);
std::string render_seek_file(const std::vector<SeekTrainRecord>& records);
void write_text(const std::filesystem::path& path, std::string_view text);

// Stable 80/20 membership: a pure function of c.
bool in_train_split(std::string_view c);

// --- corpora ----------------------------------------------------------------

struct NewsDoc {
  std::string text;
  std::string label;  // business, politics, sport, tech, entertainment

  bool operator==(const NewsDoc&) const = default;
};

void to_json(nlohmann::json& j, const NewsDoc& d);
void from_json(const nlohmann::json& j, NewsDoc& d);

const std::vector<std::string>& news_labels();

// Deterministic synthetic news articles of roughly `target_bytes` each.
std::vector<NewsDoc> synth_news(std::size_t n, std::uint64_t seed,
                                std::size_t target_bytes = 1024);

std::vector<std::string> texts(const std::vector<NewsDoc>& docs);

// JSONL rows with a "text" (or "c") field and an optional "label"; any
// other extension is read as one document per non-empty line.
std::vector<NewsDoc> load_corpus(const std::filesystem::path& path);

// --- local substituter --------------------------------------------------------

// Answers a substitution prompt locally: the given words are located in the
// Text slot, typed by the recognizer (ORG when it has no opinion) and
// replaced by hide_generative.
class SubstituterBackend : public llm::Backend {
 public:
  SubstituterBackend(const Recognizer& recognizer, SurrogatePolicy policy);
  std::string complete(const llm::LlmRequest& req) const override;
  std::string name() const override { return "substituter"; }

 private:
  const Recognizer& recognizer_;
  SurrogatePolicy policy_;
};

}  // namespace has::dataset

#endif  // HAS_DATASET_HPP_
