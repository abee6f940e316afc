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

// De-anonymization of LLM output through the recorded mapping.

#ifndef HAS_SEEK_HPP_
#define HAS_SEEK_HPP_

#include <cstddef>
#include <string_view>

#include "has/types.hpp"
#include "json.hpp"

namespace has {

struct SeekConfig {
  double fuzzy_threshold = 0.80;
  bool case_insensitive_pass = true;
  std::size_t window_slack = 2;  // characters

  void check() const;
  static SeekConfig from_json(const nlohmann::json& j);
};

// Surrogates are located by exact match, then case-insensitive token-bounded
// match, then fuzzy windows scoring at least the threshold. Every matched
// segment is replaced once by its original; nothing else changes. Label
// based documents go to seek_label.
SeekResult seek(const AnonymizedDocument& doc, std::string_view llm_output,
                const SeekConfig& config = {});

// Indexed placeholders map one to one. The k-th bare "<CODE>" in the output
// takes the k-th mention of that type in the document, so unchanged text
// restores exactly; confidence drops below 1 when the type has more than
// one distinct original. Placeholder tokens with no entry are left in place
// and listed as extraneous.
SeekResult seek_label(const AnonymizedDocument& doc, std::string_view llm_output);

}  // namespace has

#endif  // HAS_SEEK_HPP_
