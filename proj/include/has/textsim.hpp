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

// Ratcliff/Obershelp sequence similarity over Unicode scalar values,
// computed the way Python's difflib.SequenceMatcher does with autojunk off.

#ifndef HAS_TEXTSIM_HPP_
#define HAS_TEXTSIM_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace has {

struct MatchingBlock {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

// Matching blocks in ascending order, without the terminating sentinel.
std::vector<MatchingBlock> matching_blocks(std::u32string_view a,
                                           std::u32string_view b);

// 2M / T, 1.0 when both are empty.
double similarity(std::u32string_view a, std::u32string_view b);
double similarity(std::string_view a, std::string_view b);

// 1 - similarity(c, c_hat).
double privacy_score(std::string_view c, std::string_view c_hat);

}  // namespace has

#endif  // HAS_TEXTSIM_HPP_
