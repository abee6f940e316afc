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

// Format-preserving surrogates for numeric, date and time surfaces. Each
// returns nullopt when the surface is not in a form it can re-render.

#ifndef HAS_SRC_SURROGATE_FORMATS_HPP_
#define HAS_SRC_SURROGATE_FORMATS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "rng.hpp"

namespace has::formats {

// Scales the first number in `surface` by 1 + u, u uniform in
// [-jitter, jitter] with |u| >= 0.05. Decimals, digit grouping and all
// surrounding text (currency, units, scale words) are kept.
std::optional<std::string> jitter_number(std::string_view surface, Rng& rng,
                                         double jitter);

// Moves a parsed date by a non-zero offset of at most `max_days` days (or
// the coarser unit the format carries) and renders it in the same format.
std::optional<std::string> shift_date(std::string_view surface, Rng& rng,
                                      int max_days);

// Moves a clock time by a non-zero offset, same rendering style.
std::optional<std::string> shift_time(std::string_view surface, Rng& rng);

}  // namespace has::formats

#endif  // HAS_SRC_SURROGATE_FORMATS_HPP_
