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

// Rough convergence.
//
// x_n is r-convergent to x when for every eps > 0, eventually
// d(x_n, x) < r + eps. Equivalently limsup d(x_n, x) <= r, so the boundary
// case belongs to the rough limit set. r = 0 is ordinary convergence.

#ifndef ROUGHCMS_ROUGH_HPP_
#define ROUGHCMS_ROUGH_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"
#include "roughcms/tolerance.hpp"

namespace roughcms {

struct RoughLimitSet {
  double r = 0;
  PointSet members;
  EpSequence sequence;
  ControlledSpace space;

  bool contains(std::size_t x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

inline void CheckRoughness(double r) {
  if (!(r >= 0)) throw DomainError("roughness degree must be >= 0");
}

inline bool IsRoughLimit(const EpSequence& seq, const ControlledSpace& space,
                         std::size_t x, double r) {
  CheckRoughness(r);
  return LessOrEqual(LimsupDistance(seq, space, x), r);
}

inline bool IsRoughLimit(const EpSequence& seq, const ControlledSpace& space,
                         std::string_view x, double r) {
  return IsRoughLimit(seq, space, space.index_of(x), r);
}

// LIM^r by exhaustive scan over every point.
inline RoughLimitSet RoughLimits(const EpSequence& seq,
                                 const ControlledSpace& space, double r) {
  CheckRoughness(r);
  CheckPointsIn(seq, space);
  const PointSet tail = TailValues(seq, space);
  RoughLimitSet out{r, {}, seq, space};
  for (std::size_t x = 0; x < space.size(); ++x) {
    double limsup = 0;
    for (std::size_t v : tail) limsup = std::max(limsup, space.distance(v, x));
    if (LessOrEqual(limsup, r)) out.members.push_back(x);
  }
  return out;
}

struct CriticalRoughness {
  double r_star = 0;
  // Every minimizer, in point order.
  PointSet argmin;
};

// Smallest r with LIM^r nonempty; attained because the space is finite.
inline CriticalRoughness FindCriticalRoughness(const EpSequence& seq,
                                               const ControlledSpace& space) {
  CriticalRoughness out{std::numeric_limits<double>::infinity(), {}};
  for (std::size_t x = 0; x < space.size(); ++x) {
    const double limsup = LimsupDistance(seq, space, x);
    if (limsup < out.r_star) {
      out.r_star = limsup;
      out.argmin = {x};
    } else if (limsup == out.r_star) {
      out.argmin.push_back(x);
    }
  }
  return out;
}

// Cluster points are exactly the tail values: a point approached within
// every eps infinitely often must coincide with a recurring value, since
// distinct points are at least min_positive_distance apart.
inline PointSet ClusterPoints(const EpSequence& seq,
                              const ControlledSpace& space) {
  CheckPointsIn(seq, space);
  return TailValues(seq, space);
}

// Limit points of `subset`: y such that every open ball B(y, eps) meets
// subset \ {y}. Radii below min_positive_distance isolate every point, so
// probing eps = min_positive_distance / 2 decides the question for any
// finite table; it is evaluated through the ball routine rather than
// assumed.
inline PointSet DerivedSet(const ControlledSpace& space,
                           const PointSet& subset) {
  for (std::size_t s : subset) {
    if (s >= space.size()) throw DomainError("subset index out of range");
  }
  PointSet out;
  if (subset.empty() || space.size() == 1) return out;
  const double eps = space.min_positive_distance() / 2;
  for (std::size_t y = 0; y < space.size(); ++y) {
    const Ball ball = MakeBall(space, y, eps, BallKind::kOpen);
    const bool meets = std::any_of(
        ball.members.begin(), ball.members.end(), [&](std::size_t m) {
          return m != y && std::binary_search(subset.begin(), subset.end(), m);
        });
    if (meets) out.push_back(y);
  }
  return out;
}

}  // namespace roughcms

#endif  // ROUGHCMS_ROUGH_HPP_
