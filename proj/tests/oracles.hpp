// Copyright 2026 The roughcms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference implementations used only by the tests. They work
// straight from the definitions (explicit index scans over the unrolled
// sequence) and never call the limsup shortcuts they are compared with.

#ifndef ROUGHCMS_TESTS_ORACLES_HPP_
#define ROUGHCMS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "roughcms/roughcms.hpp"

namespace roughcms::testing {

inline constexpr std::array<double, 3> kEpsilons = {1e-1, 1e-3, 1e-6};

// First `count` terms, by direct indexing arithmetic.
inline std::vector<std::string> Unroll(const EpSequence& seq,
                                       std::size_t count) {
  std::vector<std::string> out;
  const auto& p = seq.prefix();
  const auto& c = seq.cycle();
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i < p.size() ? p[i] : c[(i - p.size()) % c.size()]);
  }
  return out;
}

// "For every eps > 0 there is n0 with d(x_n, x) < r + eps for all n >= n0",
// decided over eps in kEpsilons and n in 1..P+4C. Any n0 <= P+C+1 leaves at
// least three full periods in the window, and by periodicity a full period
// is all that matters past the prefix.
inline bool DefinitionalRoughLimit(const ControlledSpace& space,
                                   const EpSequence& seq, std::size_t x,
                                   double r) {
  const std::size_t horizon = seq.prefix().size() + 4 * seq.cycle().size();
  const std::size_t last_n0 = seq.prefix().size() + seq.cycle().size() + 1;
  const auto terms = Unroll(seq, horizon);
  for (double eps : kEpsilons) {
    bool found = false;
    for (std::size_t n0 = 1; n0 <= last_n0 && !found; ++n0) {
      bool all = true;
      for (std::size_t n = n0; n <= horizon; ++n) {
        if (!(space.distance(space.index_of(terms[n - 1]), x) < r + eps)) {
          all = false;
          break;
        }
      }
      found = all;
    }
    if (!found) return false;
  }
  return true;
}

// "For every eps and every p there is m > p with d(x_m, c) < eps", decided at
// eps = min_positive_distance / 2 and p over one prefix plus one period.
inline bool DefinitionalClusterPoint(const ControlledSpace& space,
                                     const EpSequence& seq, std::size_t c) {
  const double eps = space.size() == 1 ? 1.0 : space.min_positive_distance() / 2;
  const std::size_t period_end = seq.prefix().size() + seq.cycle().size();
  const std::size_t horizon = period_end + 2 * seq.cycle().size();
  const auto terms = Unroll(seq, horizon);
  for (std::size_t p = 1; p <= period_end; ++p) {
    bool hit = false;
    for (std::size_t m = p + 1; m <= horizon && !hit; ++m) {
      hit = space.distance(space.index_of(terms[m - 1]), c) < eps;
    }
    if (!hit) return false;
  }
  return true;
}

// Every sequence with |prefix| <= max_prefix and 1 <= |cycle| <= max_cycle
// over labels "1".."n".
inline std::vector<EpSequence> AllSequences(std::size_t n,
                                            std::size_t max_prefix,
                                            std::size_t max_cycle) {
  auto words = [n](std::size_t len) {
    std::vector<std::vector<std::string>> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::vector<std::string>> next;
      for (const auto& w : out) {
        for (std::size_t v = 1; v <= n; ++v) {
          auto e = w;
          e.push_back(std::to_string(v));
          next.push_back(std::move(e));
        }
      }
      out = std::move(next);
    }
    return out;
  };
  std::vector<std::vector<std::string>> prefixes, cycles;
  for (std::size_t len = 0; len <= max_prefix; ++len) {
    for (auto& w : words(len)) prefixes.push_back(std::move(w));
  }
  for (std::size_t len = 1; len <= max_cycle; ++len) {
    for (auto& w : words(len)) cycles.push_back(std::move(w));
  }
  std::vector<EpSequence> out;
  out.reserve(prefixes.size() * cycles.size());
  for (const auto& p : prefixes) {
    for (const auto& c : cycles) out.emplace_back(p, c);
  }
  return out;
}

// Default six-point grid plus the second-smallest distinct limsup value and
// its midpoint with r*; padded from the diameter when the space has too few
// distinct limsup values.
inline std::vector<double> EightPointGrid(const ControlledSpace& space,
                                          const EpSequence& seq) {
  std::vector<double> grid = DefaultRGrid(space, seq);
  std::set<double> limsups;
  for (std::size_t x = 0; x < space.size(); ++x) {
    limsups.insert(LimsupDistance(seq, space, x));
  }
  const double diam = Diameter(space, space.all_points());
  const double r_star = *limsups.begin();
  const double second =
      limsups.size() > 1 ? *std::next(limsups.begin()) : 0.75 * diam;
  for (double r : {second, (r_star + second) / 2, 0.25 * diam, 1.5 * diam,
                   3 * diam, 4 * diam}) {
    if (grid.size() == 8) break;
    if (std::find(grid.begin(), grid.end(), r) == grid.end()) grid.push_back(r);
  }
  while (grid.size() < 8) grid.push_back(static_cast<double>(grid.size()));
  return grid;
}

}  // namespace roughcms::testing

#endif  // ROUGHCMS_TESTS_ORACLES_HPP_
