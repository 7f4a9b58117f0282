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

// Finite controlled metric type spaces.
//
// A controlled metric type space is a set X with a distance d and a control
// function alpha: X x X -> [1, inf) such that
//
//   (d1) d(x, y) = 0  iff  x = y
//   (d2) d(x, y) = d(y, x)
//   (d3) d(x, y) <= alpha(x, z) d(x, z) + alpha(z, y) d(z, y)
//
// for all x, y, z. With alpha == s this is a b-metric space, with alpha == 1
// an ordinary metric space. Everything here works on finite point sets whose
// tables are given explicitly.

#ifndef ROUGHCMS_SPACE_HPP_
#define ROUGHCMS_SPACE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/tolerance.hpp"

namespace roughcms {

using Table = std::vector<std::vector<double>>;

// Sorted, duplicate-free indices into a space's point list.
using PointSet = std::vector<std::size_t>;

// Raw, unvalidated description of a space. Row i of `dist` and `alpha`
// belongs to points[i].
struct SpaceSpec {
  std::vector<std::string> points;
  Table dist;
  Table alpha;

  std::size_t size() const { return points.size(); }
  bool operator==(const SpaceSpec&) const = default;
};

// Throws ShapeError unless the spec has n >= 1 distinct labels, n x n
// tables, finite non-negative distances and finite alpha entries.
inline void CheckShape(const SpaceSpec& spec) {
  const std::size_t n = spec.points.size();
  if (n == 0) throw ShapeError("space has no points");
  {
    std::vector<std::string> sorted = spec.points;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw ShapeError("duplicate point label '" + *dup + "'");
    }
  }
  auto check_table = [n](const Table& table, const char* name) {
    if (table.size() != n) {
      throw ShapeError(std::string(name) + " has " +
                       std::to_string(table.size()) + " rows, expected " +
                       std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ShapeError(std::string(name) + " row " + std::to_string(i) +
                         " has " + std::to_string(table[i].size()) +
                         " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(table[i][j])) {
          throw ShapeError(std::string(name) + "[" + std::to_string(i) +
                           "][" + std::to_string(j) + "] is not finite");
        }
      }
    }
  };
  check_table(spec.dist, "dist");
  check_table(spec.alpha, "alpha");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.dist[i][j] < 0) {
        throw ShapeError("dist[" + std::to_string(i) + "][" +
                         std::to_string(j) + "] is negative");
      }
    }
  }
}

enum class Axiom {
  kIdentity,       // d1
  kSymmetry,       // d2
  kTriangle,       // d3
  kAlphaAtLeastOne,
};

inline std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kIdentity:
      return "d1";
    case Axiom::kSymmetry:
      return "d2";
    case Axiom::kTriangle:
      return "d3";
    case Axiom::kAlphaAtLeastOne:
      return "alpha>=1";
  }
  return "?";
}

// One failed instance of an axiom. `points` holds the labels involved:
// (x, y) for d1/d2/alpha, (x, y, z) for d3. The failed relation is
//   d1:    lhs = d(x,y), rhs = 0 (nonzero diagonal or zero off-diagonal)
//   d2:    lhs = d(x,y), rhs = d(y,x)
//   d3:    lhs = d(x,y), rhs = alpha(x,z)d(x,z) + alpha(z,y)d(z,y)
//   alpha: lhs = 1,      rhs = alpha(x,y)
struct Violation {
  Axiom axiom;
  std::vector<std::string> points;
  double lhs = 0;
  double rhs = 0;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

// Exhaustive axiom check: every pair for d1, d2 and alpha >= 1, every
// ordered triple (degenerate ones included) for d3, so n^3 evaluations.
// Throws ShapeError for malformed tables.
inline ValidationResult ValidateAxioms(const SpaceSpec& spec) {
  CheckShape(spec);
  const std::size_t n = spec.size();
  const auto& d = spec.dist;
  const auto& a = spec.alpha;
  ValidationResult result;
  auto add = [&](Axiom axiom, std::vector<std::size_t> idx, double lhs,
                 double rhs) {
    Violation v{axiom, {}, lhs, rhs};
    for (std::size_t i : idx) v.points.push_back(spec.points[i]);
    result.violations.push_back(std::move(v));
  };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((x == y) != (d[x][y] == 0)) add(Axiom::kIdentity, {x, y}, d[x][y], 0);
      if (x < y && d[x][y] != d[y][x]) {
        add(Axiom::kSymmetry, {x, y}, d[x][y], d[y][x]);
      }
      if (!LessOrEqual(1.0, a[x][y])) {
        add(Axiom::kAlphaAtLeastOne, {x, y}, 1.0, a[x][y]);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const double rhs = a[x][z] * d[x][z] + a[z][y] * d[z][y];
        if (!LessOrEqual(d[x][y], rhs)) {
          add(Axiom::kTriangle, {x, y, z}, d[x][y], rhs);
        }
      }
    }
  }
  return result;
}

// Thrown by BuildSpace when the spec is well-formed but breaks an axiom.
class AxiomError : public std::invalid_argument {
 public:
  explicit AxiomError(ValidationResult result)
      : std::invalid_argument(Describe(result)), result_(std::move(result)) {}

  const ValidationResult& result() const noexcept { return result_; }

 private:
  static std::string Describe(const ValidationResult& r) {
    std::string out = std::to_string(r.violations.size()) +
                      " axiom violation(s); first: ";
    const Violation& v = r.violations.front();
    out += AxiomName(v.axiom);
    out += " at (";
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      if (i) out += ",";
      out += v.points[i];
    }
    return out + ")";
  }

  ValidationResult result_;
};

// A validated space. Copies share the immutable tables, so passing by value
// is cheap and a copy can be kept alongside results that refer to it.
class ControlledSpace {
 public:
  // Use BuildSpace.
  ControlledSpace() = delete;

  const SpaceSpec& spec() const { return data_->spec; }
  std::size_t size() const { return data_->spec.size(); }
  std::span<const std::string> points() const { return data_->spec.points; }
  const std::string& label(std::size_t i) const {
    return data_->spec.points.at(i);
  }

  double distance(std::size_t x, std::size_t y) const {
    return data_->spec.dist[x][y];
  }
  double alpha(std::size_t x, std::size_t y) const {
    return data_->spec.alpha[x][y];
  }

  // sup of alpha over all pairs.
  double k() const { return data_->k; }
  // Smallest nonzero distance; +inf for a one-point space.
  double min_positive_distance() const { return data_->min_positive_dist; }

  bool contains(std::string_view label) const {
    return data_->index.find(std::string(label)) != data_->index.end();
  }

  std::size_t index_of(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) {
      throw DomainError("unknown point '" + std::string(label) + "'");
    }
    return it->second;
  }

  PointSet all_points() const {
    PointSet all(size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  std::vector<std::string> labels(const PointSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (std::size_t i : set) out.push_back(label(i));
    return out;
  }

  // Resolves labels into a sorted, duplicate-free PointSet.
  PointSet resolve(std::span<const std::string> labels) const {
    PointSet out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(index_of(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct Data {
    SpaceSpec spec;
    double k = 1;
    double min_positive_dist = std::numeric_limits<double>::infinity();
    std::unordered_map<std::string, std::size_t> index;
  };

  explicit ControlledSpace(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  friend ControlledSpace BuildSpace(SpaceSpec spec);

  std::shared_ptr<const Data> data_;
};

// Validates `spec` and caches k and the minimum positive distance.
// Throws ShapeError or AxiomError.
inline ControlledSpace BuildSpace(SpaceSpec spec) {
  ValidationResult result = ValidateAxioms(spec);
  if (!result.valid()) throw AxiomError(std::move(result));

  auto data = std::make_shared<ControlledSpace::Data>();
  const std::size_t n = spec.size();
  double k = spec.alpha[0][0];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      k = std::max(k, spec.alpha[i][j]);
      if (spec.dist[i][j] > 0) {
        data->min_positive_dist =
            std::min(data->min_positive_dist, spec.dist[i][j]);
      }
    }
    data->index.emplace(spec.points[i], i);
  }
  data->k = k;
  data->spec = std::move(spec);
  return ControlledSpace(std::move(data));
}

// The parity space on {1, ..., n}:
//
//   d(x,y) = 0        if x = y
//            1/sqrt(x) if x even, y odd
//            1/sqrt(y) if x odd, y even
//            1         otherwise
//
//   alpha(x,y) = sqrt(x) if x even, y odd
//                sqrt(y) if x odd, y even
//                1       otherwise
//
// It is the restriction of a controlled metric type space on all of N, so
// every truncation is itself valid. Labels are "1" .. "n".
inline SpaceSpec ParityExampleSpec(int n) {
  if (n < 2) throw DomainError("parity example needs n >= 2");
  SpaceSpec spec;
  spec.points.reserve(n);
  for (int i = 1; i <= n; ++i) spec.points.push_back(std::to_string(i));
  spec.dist.assign(n, std::vector<double>(n, 0.0));
  spec.alpha.assign(n, std::vector<double>(n, 1.0));
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const bool x_even = x % 2 == 0;
      const bool y_even = y % 2 == 0;
      double d = 1.0;
      double a = 1.0;
      if (x == y) {
        d = 0.0;
      } else if (x_even && !y_even) {
        d = 1.0 / std::sqrt(static_cast<double>(x));
      } else if (!x_even && y_even) {
        d = 1.0 / std::sqrt(static_cast<double>(y));
      }
      if (x_even && !y_even) {
        a = std::sqrt(static_cast<double>(x));
      } else if (!x_even && y_even) {
        a = std::sqrt(static_cast<double>(y));
      }
      spec.dist[x - 1][y - 1] = d;
      spec.alpha[x - 1][y - 1] = a;
    }
  }
  return spec;
}

enum class BallKind { kOpen, kClosed };

struct Ball {
  std::size_t center;
  double radius;
  BallKind kind;
  PointSet members;
};

// Open: d(center, y) < radius. Closed: d(center, y) <= radius (+ tolerance).
inline Ball MakeBall(const ControlledSpace& space, std::size_t center,
                     double radius, BallKind kind) {
  if (center >= space.size()) {
    throw DomainError("ball center index out of range");
  }
  if (!(radius >= 0)) throw DomainError("ball radius must be >= 0");
  Ball ball{center, radius, kind, {}};
  for (std::size_t y = 0; y < space.size(); ++y) {
    const double d = space.distance(center, y);
    const bool inside =
        kind == BallKind::kOpen ? Less(d, radius) : LessOrEqual(d, radius);
    if (inside) ball.members.push_back(y);
  }
  return ball;
}

inline Ball MakeBall(const ControlledSpace& space, std::string_view center,
                     double radius, BallKind kind) {
  return MakeBall(space, space.index_of(center), radius, kind);
}

// max pairwise distance over `subset`; 0 for the empty set and singletons.
inline double Diameter(const ControlledSpace& space, const PointSet& subset) {
  double diam = 0;
  for (std::size_t x : subset) {
    if (x >= space.size()) throw DomainError("subset index out of range");
    for (std::size_t y : subset) diam = std::max(diam, space.distance(x, y));
  }
  return diam;
}

inline double Diameter(const ControlledSpace& space,
                       std::span<const std::string> subset) {
  return Diameter(space, space.resolve(subset));
}

// Sub-space on `subset` (kept in the parent's point order). Restriction
// preserves every axiom, so the rebuild cannot fail for a valid parent.
inline ControlledSpace Restrict(const ControlledSpace& space,
                                const PointSet& subset) {
  if (subset.empty()) throw DomainError("cannot restrict to the empty set");
  PointSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SpaceSpec spec;
  const std::size_t m = sorted.size();
  spec.dist.assign(m, std::vector<double>(m));
  spec.alpha.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (sorted[i] >= space.size()) {
      throw DomainError("subset index out of range");
    }
    spec.points.push_back(space.label(sorted[i]));
    for (std::size_t j = 0; j < m; ++j) {
      spec.dist[i][j] = space.distance(sorted[i], sorted[j]);
      spec.alpha[i][j] = space.alpha(sorted[i], sorted[j]);
    }
  }
  return BuildSpace(std::move(spec));
}

inline ControlledSpace Restrict(const ControlledSpace& space,
                                std::span<const std::string> subset) {
  return Restrict(space, space.resolve(subset));
}

}  // namespace roughcms

#endif  // ROUGHCMS_SPACE_HPP_
