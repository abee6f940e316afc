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

#include "has/dataset.hpp"

#include <algorithm>
#include <set>

#include "has/text.hpp"

namespace has::dataset {
namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw Error("record is not a JSON object");
  if (!j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key).get<T>();
}

std::string join_examples(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += parts[i];
  }
  if (!out.empty()) out += '\n';
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const HideTrainRecord& r) {
  j = nlohmann::json{{"c", r.c}, {"p", r.p}, {"s", r.s}};
}

void from_json(const nlohmann::json& j, HideTrainRecord& r) {
  r.c = field<std::string>(j, "c");
  r.p = field<std::vector<std::string>>(j, "p");
  r.s = field<std::string>(j, "s");
}

void to_json(nlohmann::json& j, const SeekTrainRecord& r) {
  j = nlohmann::json{{"e", r.e}, {"l", r.l}, {"c", r.c}, {"r", r.r}};
  has::to_json(j["task"], r.task);
}

void from_json(const nlohmann::json& j, SeekTrainRecord& r) {
  r.e = field<std::string>(j, "e");
  r.l = field<std::string>(j, "l");
  r.c = field<std::string>(j, "c");
  r.r = field<std::string>(j, "r");
  has::from_json(j.at("task"), r.task);
}

void validate(const HideTrainRecord& r) {
  if (r.c.empty()) throw Error("hide record: empty c");
  if (r.p.empty()) throw Error("hide record: empty p");
  if (r.s.empty()) throw Error("hide record: empty s");
  if (r.s == r.c) throw Error("hide record: s equals c");
}

void validate(const SeekTrainRecord& r) {
  if (r.e.empty() || r.l.empty() || r.c.empty() || r.r.empty()) {
    throw Error("seek record: empty field");
  }
}

HideSynthResult synth_hide_corpus(const std::vector<std::string>& corpus,
                                  const llm::Backend& backend,
                                  const Recognizer& recognizer, int parallelism) {
  HideSynthResult result;
  std::vector<std::size_t> index;
  std::vector<std::vector<std::string>> entities;
  std::vector<llm::LlmRequest> requests;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::vector<std::string> p = dedup_surfaces(recognizer.recognize(corpus[i]));
    if (p.empty()) {
      result.skipped.push_back(Issue{i, "no entities"});
      continue;
    }
    requests.push_back(llm::LlmRequest::user(llm::build_prompt_s(corpus[i], p)));
    entities.push_back(std::move(p));
    index.push_back(i);
  }
  llm::BatchResult batch = llm::complete_batch(backend, requests, parallelism);
  std::vector<Issue> failures;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (!batch.errors[k].empty()) {
      failures.push_back(Issue{index[k], batch.errors[k]});
      continue;
    }
    HideTrainRecord rec{corpus[index[k]], std::move(entities[k]),
                        std::move(batch.outputs[k])};
    try {
      validate(rec);
    } catch (const Error& e) {
      failures.push_back(Issue{index[k], e.what()});
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  result.skipped.insert(result.skipped.end(), failures.begin(), failures.end());
  std::sort(result.skipped.begin(), result.skipped.end(),
            [](const Issue& a, const Issue& b) { return a.index < b.index; });
  return result;
}

SeekSynthResult synth_seek_corpus(const std::vector<SeekSource>& sources,
                                  const llm::Backend& backend, TaskType task,
                                  const std::optional<std::string>& target,
                                  int parallelism) {
  SeekSynthResult result;
  std::vector<llm::LlmRequest> first;
  first.reserve(sources.size());
  for (const SeekSource& s : sources) {
    first.push_back(llm::LlmRequest::user(llm::build_prompt_l(s.e, task, target)));
  }
  llm::BatchResult l = llm::complete_batch(backend, first, parallelism);

  std::vector<std::size_t> index;
  std::vector<llm::LlmRequest> second;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!l.errors[i].empty()) {
      result.skipped.push_back(Issue{i, l.errors[i]});
      continue;
    }
    second.push_back(llm::LlmRequest::user(
        llm::build_prompt_r(sources[i].e, l.outputs[i], sources[i].c, task)));
    index.push_back(i);
  }
  llm::BatchResult r = llm::complete_batch(backend, second, parallelism);
  for (std::size_t k = 0; k < index.size(); ++k) {
    const std::size_t i = index[k];
    if (!r.errors[k].empty()) {
      result.skipped.push_back(Issue{i, r.errors[k]});
      continue;
    }
    SeekTrainRecord rec{sources[i].e, l.outputs[i], sources[i].c, r.outputs[k], task};
    try {
      validate(rec);
    } catch (const Error& e) {
      result.skipped.push_back(Issue{i, e.what()});
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  std::sort(result.skipped.begin(), result.skipped.end(),
            [](const Issue& a, const Issue& b) { return a.index < b.index; });
  return result;
}

JsonlError::JsonlError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string render_hide_file(const std::vector<HideTrainRecord>& records) {
  std::vector<std::string> parts;
  parts.reserve(records.size());
  for (const HideTrainRecord& r : records) {
    parts.push_back(llm::render_hide_training(r.c, r.p, r.s));
  }
  return join_examples(parts);
}

std::string render_seek_file(const std::vector<SeekTrainRecord>& records) {
  std::vector<std::string> parts;
  parts.reserve(records.size());
  for (const SeekTrainRecord& r : records) {
    parts.push_back(llm::render_seek_training(r.e, r.l, r.c, r.r, r.task));
  }
  return join_examples(parts);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

bool in_train_split(std::string_view c) { return text::fnv1a(c) % 100 < 80; }

void to_json(nlohmann::json& j, const NewsDoc& d) {
  j = nlohmann::json{{"text", d.text}, {"label", d.label}};
}

void from_json(const nlohmann::json& j, NewsDoc& d) {
  if (!j.is_object()) throw Error("record is not a JSON object");
  if (j.contains("text")) {
    d.text = j.at("text").get<std::string>();
  } else {
    d.text = field<std::string>(j, "c");
  }
  d.label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
}

std::vector<std::string> texts(const std::vector<NewsDoc>& docs) {
  std::vector<std::string> out;
  out.reserve(docs.size());
  for (const NewsDoc& d : docs) out.push_back(d.text);
  return out;
}

std::vector<NewsDoc> load_corpus(const std::filesystem::path& path) {
  if (path.extension() == ".jsonl") return read_jsonl<NewsDoc>(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::vector<NewsDoc> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    docs.push_back(NewsDoc{line, {}});
  }
  return docs;
}

SubstituterBackend::SubstituterBackend(const Recognizer& recognizer,
                                       SurrogatePolicy policy)
    : recognizer_(recognizer), policy_(std::move(policy)) {}

std::string SubstituterBackend::complete(const llm::LlmRequest& req) const {
  const std::string& content = req.last_user().content;
  const std::string text(llm::payload_of(content));
  constexpr std::string_view kGiven = "\nGiven words: ";
  constexpr std::string_view kTail = "\nSubstituted text:";
  const std::size_t g = content.rfind(kGiven);
  const std::size_t t = content.rfind(kTail);
  if (g == std::string::npos || t == std::string::npos || t < g) return text;
  const std::vector<std::string> given = llm::parse_python_list(
      std::string_view(content).substr(g + kGiven.size(), t - g - kGiven.size()));
  const std::set<std::string> wanted(given.begin(), given.end());

  std::vector<EntitySpan> automatic;
  std::set<std::string> covered;
  for (EntitySpan& s : recognizer_.recognize(text)) {
    if (wanted.count(s.surface)) {
      covered.insert(s.surface);
      automatic.push_back(std::move(s));
    }
  }
  std::vector<EntitySpan> manual;
  for (const std::string& w : given) {
    if (w.empty() || covered.count(w)) continue;
    EntityType etype = EntityType::kOrg;
    const std::vector<EntitySpan> alone = recognizer_.recognize(w);
    if (alone.size() == 1 && alone[0].surface == w) etype = alone[0].etype;
    for (EntitySpan& s : spans_for_surface(text, w, etype)) manual.push_back(std::move(s));
  }
  const std::vector<EntitySpan> spans =
      merge_spans(automatic, resolve_overlaps(std::move(manual)));
  return hide_generative(text, spans, policy_).anonymized;
}

}  // namespace has::dataset
