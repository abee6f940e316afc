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

// Per-document batch kernels. `serial` is the reference; `omp` splits the
// documents across OpenMP threads and returns identical results in the
// same order.

#ifndef HAS_KERNELS_HPP_
#define HAS_KERNELS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "has/adversary.hpp"
#include "has/hide.hpp"
#include "has/llm.hpp"
#include "has/recognizer.hpp"
#include "has/seek.hpp"

namespace has::kernels {

struct ProtectionOutcome {
  double score = 0.0;
  std::string error;  // non-empty when hiding failed
};

struct RoundTripOutcome {
  bool exact = false;
  std::size_t unresolved = 0;
  std::size_t entries = 0;
  std::string error;
};

struct RoundTripJob {
  const Recognizer* recognizer = nullptr;
  HideConfig hide;
  SeekConfig seek;
  const llm::Backend* backend = nullptr;
  TaskType task = TaskType::kTranslate;
  std::string target = "French";
};

using TextPair = std::pair<std::string, std::string>;

namespace serial {
std::vector<ProtectionOutcome> protection(const std::vector<std::string>& corpus,
                                          const Recognizer& recognizer,
                                          const HideConfig& hide,
                                          const Attacker& attacker);
std::vector<RoundTripOutcome> round_trip(const std::vector<std::string>& corpus,
                                         const RoundTripJob& job);
std::vector<double> similarities(const std::vector<TextPair>& pairs);
}  // namespace serial

namespace omp {
std::vector<ProtectionOutcome> protection(const std::vector<std::string>& corpus,
                                          const Recognizer& recognizer,
                                          const HideConfig& hide,
                                          const Attacker& attacker);
std::vector<RoundTripOutcome> round_trip(const std::vector<std::string>& corpus,
                                         const RoundTripJob& job);
std::vector<double> similarities(const std::vector<TextPair>& pairs);
int max_threads();
}  // namespace omp

}  // namespace has::kernels

#endif  // HAS_KERNELS_HPP_
