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

#include "has/textsim.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "has/text.hpp"

namespace has {
namespace {

class Matcher {
 public:
  Matcher(std::u32string_view a, std::u32string_view b)
      : a_(a), b_(b), j2len_(b.size() + 1, 0), newj2len_(b.size() + 1, 0) {
    for (std::size_t j = 0; j < b.size(); ++j) b2j_[b[j]].push_back(j);
  }

  // Earliest longest block in a[alo, ahi) x b[blo, bhi); among equal
  // lengths the smallest i, then the smallest j wins.
  MatchingBlock longest(std::size_t alo, std::size_t ahi, std::size_t blo,
                        std::size_t bhi) {
    MatchingBlock best{alo, blo, 0};
    // j2len_[j + 1] holds the run length ending at (i - 1, j).
    touched_.clear();
    for (std::size_t i = alo; i < ahi; ++i) {
      new_touched_.clear();
      auto it = b2j_.find(a_[i]);
      if (it != b2j_.end()) {
        const std::vector<std::size_t>& js = it->second;
        for (auto p = std::lower_bound(js.begin(), js.end(), blo); p != js.end();
             ++p) {
          const std::size_t j = *p;
          if (j >= bhi) break;
          const std::size_t k = (j > blo ? j2len_[j] : 0) + 1;
          newj2len_[j + 1] = k;
          new_touched_.push_back(j + 1);
          if (k > best.size) best = MatchingBlock{i + 1 - k, j + 1 - k, k};
        }
      }
      for (std::size_t t : touched_) j2len_[t] = 0;
      for (std::size_t t : new_touched_) {
        j2len_[t] = newj2len_[t];
        newj2len_[t] = 0;
      }
      std::swap(touched_, new_touched_);
    }
    for (std::size_t t : touched_) j2len_[t] = 0;
    return best;
  }

  std::vector<MatchingBlock> blocks() {
    std::vector<MatchingBlock> out;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>>
        queue{{0, a_.size(), 0, b_.size()}};
    while (!queue.empty()) {
      auto [alo, ahi, blo, bhi] = queue.back();
      queue.pop_back();
      MatchingBlock m = longest(alo, ahi, blo, bhi);
      if (m.size == 0) continue;
      out.push_back(m);
      if (alo < m.a && blo < m.b) queue.emplace_back(alo, m.a, blo, m.b);
      if (m.a + m.size < ahi && m.b + m.size < bhi) {
        queue.emplace_back(m.a + m.size, ahi, m.b + m.size, bhi);
      }
    }
    std::sort(out.begin(), out.end(), [](const MatchingBlock& x, const MatchingBlock& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
  }

 private:
  std::u32string_view a_;
  std::u32string_view b_;
  std::unordered_map<char32_t, std::vector<std::size_t>> b2j_;
  std::vector<std::size_t> j2len_;
  std::vector<std::size_t> newj2len_;
  std::vector<std::size_t> touched_;
  std::vector<std::size_t> new_touched_;
};

}  // namespace

std::vector<MatchingBlock> matching_blocks(std::u32string_view a,
                                           std::u32string_view b) {
  if (a.empty() || b.empty()) return {};
  return Matcher(a, b).blocks();
}

double similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  std::size_t matched = 0;
  for (const MatchingBlock& m : matching_blocks(a, b)) matched += m.size;
  return 2.0 * static_cast<double>(matched) / static_cast<double>(total);
}

double similarity(std::string_view a, std::string_view b) {
  return similarity(text::decode_utf8(a), text::decode_utf8(b));
}

double privacy_score(std::string_view c, std::string_view c_hat) {
  return 1.0 - similarity(c, c_hat);
}

}  // namespace has
