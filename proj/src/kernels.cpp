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

#include "has/kernels.hpp"

#include <omp.h>

#include "has/textsim.hpp"

namespace has::kernels {
namespace {

ProtectionOutcome protect_one(const std::string& c, const Recognizer& recognizer,
                              const HideConfig& hide_config,
                              const Attacker& attacker) {
  ProtectionOutcome out;
  try {
    AnonymizedDocument doc = hide(c, recognizer.recognize(c), hide_config);
    out.score = privacy_score(c, attacker.recover(doc.anonymized));
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

RoundTripOutcome round_trip_one(const std::string& c, const RoundTripJob& job) {
  RoundTripOutcome out;
  try {
    AnonymizedDocument doc = hide(c, job.recognizer->recognize(c), job.hide);
    const std::string l = job.backend->complete(
        llm::LlmRequest::user(llm::build_prompt_l(doc.anonymized, job.task, job.target)));
    SeekResult r = seek(doc, l, job.seek);
    out.exact = r.text == c;
    out.unresolved = r.unresolved.size();
    out.entries = doc.mapping.entries.size();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

namespace serial {

std::vector<ProtectionOutcome> protection(const std::vector<std::string>& corpus,
                                          const Recognizer& recognizer,
                                          const HideConfig& hide,
                                          const Attacker& attacker) {
  std::vector<ProtectionOutcome> out(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = protect_one(corpus[i], recognizer, hide, attacker);
  }
  return out;
}

std::vector<RoundTripOutcome> round_trip(const std::vector<std::string>& corpus,
                                         const RoundTripJob& job) {
  std::vector<RoundTripOutcome> out(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = round_trip_one(corpus[i], job);
  }
  return out;
}

std::vector<double> similarities(const std::vector<TextPair>& pairs) {
  std::vector<double> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i] = similarity(pairs[i].first, pairs[i].second);
  }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<ProtectionOutcome> protection(const std::vector<std::string>& corpus,
                                          const Recognizer& recognizer,
                                          const HideConfig& hide,
                                          const Attacker& attacker) {
  std::vector<ProtectionOutcome> out(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = protect_one(corpus[k], recognizer, hide, attacker);
  }
  return out;
}

std::vector<RoundTripOutcome> round_trip(const std::vector<std::string>& corpus,
                                         const RoundTripJob& job) {
  std::vector<RoundTripOutcome> out(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = round_trip_one(corpus[k], job);
  }
  return out;
}

std::vector<double> similarities(const std::vector<TextPair>& pairs) {
  std::vector<double> out(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = similarity(pairs[k].first, pairs[k].second);
  }
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace omp

}  // namespace has::kernels
