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

// Random valid spaces and sequences.
//
// Spaces are built constructively. Draw a symmetric table of positive
// off-diagonal distances, then take
//
//   K = max over x != y, z not in {x, y} of d(x,y) / (d(x,z) + d(z,y))
//
// and alpha(u,v) = max(1, K) * (1 + noise(u,v)) with noise in [0, 1). Since
// alpha >= K everywhere, d3 holds for every triple without rejection.
//
// The integer and real draws below are written out instead of using the
// <random> distributions, whose output is implementation-defined; the
// engine itself (mt19937_64) is fully specified, so a seed reproduces the
// same spaces on every standard library.

#ifndef ROUGHCMS_RANDOM_HPP_
#define ROUGHCMS_RANDOM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"

namespace roughcms {

using Rng = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for trial `index` of a run seeded with `seed`.
inline Rng TrialRng(std::uint64_t seed, std::uint64_t index) {
  return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(~index)));
}

// Uniform in [0, 1).
inline double UniformReal(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi] (inclusive). Modulo bias is below 2^-58 for the
// ranges used here.
inline std::uint64_t UniformInt(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline bool Coin(Rng& rng) { return (rng() >> 63) != 0; }

// Labels "1" .. "n".
inline std::vector<std::string> NumberedLabels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Smallest constant c such that d(x,y) <= c (d(x,z) + d(z,y)) over all
// triples of distinct points; 0 when there are fewer than three points.
inline double RelaxedTriangleConstant(const Table& dist) {
  const std::size_t n = dist.size();
  double worst = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        worst = std::max(worst, dist[x][y] / (dist[x][z] + dist[z][y]));
      }
    }
  }
  return worst;
}

// Space on n points. Half the tables draw distances from a coarse grid of
// levels so that ties (and hence exact boundary cases) are common; a third
// of them use noise-free alpha, which yields b-metrics and, when K <= 1,
// ordinary metrics with alpha == 1.
inline SpaceSpec RandomSpaceSpec(Rng& rng, std::size_t n) {
  if (n == 0) throw DomainError("random space needs at least one point");
  static constexpr std::array<double, 4> kLevels = {0.25, 0.5, 0.75, 1.0};
  SpaceSpec spec;
  spec.points = NumberedLabels(n);
  spec.dist.assign(n, std::vector<double>(n, 0.0));
  const bool levelled = Coin(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = levelled ? kLevels[UniformInt(rng, 0, 3)]
                                : 0.05 + 0.95 * UniformReal(rng);
      spec.dist[i][j] = spec.dist[j][i] = d;
    }
  }
  const double base = std::max(1.0, RelaxedTriangleConstant(spec.dist));
  const bool noisy = UniformInt(rng, 0, 2) != 0;
  spec.alpha.assign(n, std::vector<double>(n, base));
  if (noisy) {
    for (auto& row : spec.alpha) {
      for (double& a : row) a = base * (1.0 + UniformReal(rng));
    }
  }
  return spec;
}

enum class SequenceShape { kAny, kConvergent, kNonConvergent };

// Sequence over the first `n` labels of NumberedLabels. kNonConvergent
// needs n >= 2 and a cycle of length >= 2; `max_cycle` is raised to 2 for
// it if necessary.
inline EpSequence RandomSequence(Rng& rng, std::size_t n,
                                 std::size_t max_prefix, std::size_t max_cycle,
                                 SequenceShape shape = SequenceShape::kAny) {
  if (n == 0 || max_cycle == 0) {
    throw DomainError("random sequence needs points and a nonempty cycle");
  }
  if (shape == SequenceShape::kAny) {
    shape = Coin(rng) ? SequenceShape::kConvergent : SequenceShape::kAny;
  }
  if (shape == SequenceShape::kNonConvergent) {
    if (n < 2) throw DomainError("non-convergent sequence needs 2 points");
    max_cycle = std::max<std::size_t>(max_cycle, 2);
  }
  auto point = [&] { return std::to_string(UniformInt(rng, 1, n)); };
  std::vector<std::string> prefix(UniformInt(rng, 0, max_prefix));
  for (auto& p : prefix) p = point();

  std::vector<std::string> cycle;
  switch (shape) {
    case SequenceShape::kConvergent:
      cycle.assign(UniformInt(rng, 1, max_cycle), point());
      break;
    case SequenceShape::kNonConvergent: {
      cycle.resize(UniformInt(rng, 2, max_cycle));
      for (auto& c : cycle) c = point();
      // Force two distinct values.
      if (std::all_of(cycle.begin(), cycle.end(),
                      [&](const auto& c) { return c == cycle.front(); })) {
        const std::uint64_t v = std::stoull(cycle.front());
        cycle.back() = std::to_string(v % n + 1);
      }
      break;
    }
    case SequenceShape::kAny:
      cycle.resize(UniformInt(rng, 1, max_cycle));
      for (auto& c : cycle) c = point();
      break;
  }
  return EpSequence(std::move(prefix), std::move(cycle));
}

}  // namespace roughcms

#endif  // ROUGHCMS_RANDOM_HPP_
