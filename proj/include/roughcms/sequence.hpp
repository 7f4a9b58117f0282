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

// Eventually-periodic sequences and their exact asymptotics.
//
// A sequence is stored as a finite prefix followed by a cycle repeated
// forever. Every cycle value recurs with bounded gap and the prefix is seen
// only once, so limits and limsups reduce to finite scans over the cycle.

#ifndef ROUGHCMS_SEQUENCE_HPP_
#define ROUGHCMS_SEQUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/space.hpp"

namespace roughcms {

class EpSequence {
 public:
  // Throws DomainError if `cycle` is empty.
  EpSequence(std::vector<std::string> prefix, std::vector<std::string> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw DomainError("sequence cycle must be nonempty");
  }

  static EpSequence Constant(std::string value) {
    return EpSequence({}, {std::move(value)});
  }

  const std::vector<std::string>& prefix() const { return prefix_; }
  const std::vector<std::string>& cycle() const { return cycle_; }

  // x_n for n >= 1.
  const std::string& at(std::uint64_t n) const {
    if (n == 0) throw DomainError("sequence index starts at 1");
    if (n <= prefix_.size()) return prefix_[n - 1];
    return cycle_[(n - prefix_.size() - 1) % cycle_.size()];
  }

  bool operator==(const EpSequence&) const = default;

 private:
  std::vector<std::string> prefix_;
  std::vector<std::string> cycle_;
};

inline const std::string& Eval(const EpSequence& seq, std::uint64_t n) {
  return seq.at(n);
}

// Checks that every referenced point exists in `space`.
inline void CheckPointsIn(const EpSequence& seq, const ControlledSpace& space) {
  for (const auto& p : seq.prefix()) space.index_of(p);
  for (const auto& p : seq.cycle()) space.index_of(p);
}

// Labels occurring infinitely often, i.e. the distinct cycle entries, in
// first-occurrence order.
inline std::vector<std::string> TailValues(const EpSequence& seq) {
  std::vector<std::string> out;
  for (const auto& v : seq.cycle()) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

inline PointSet TailValues(const EpSequence& seq, const ControlledSpace& space) {
  return space.resolve(seq.cycle());
}

// limsup_n d(x_n, x) = max over tail values v of d(v, x).
inline double LimsupDistance(const EpSequence& seq,
                             const ControlledSpace& space, std::size_t x) {
  if (x >= space.size()) throw DomainError("point index out of range");
  CheckPointsIn(seq, space);
  double best = 0;
  for (const auto& v : seq.cycle()) {
    best = std::max(best, space.distance(space.index_of(v), x));
  }
  return best;
}

inline double LimsupDistance(const EpSequence& seq,
                             const ControlledSpace& space,
                             std::string_view x) {
  return LimsupDistance(seq, space, space.index_of(x));
}

// The limit, if the sequence converges. Over a finite space with d1 this
// happens exactly when the cycle takes a single value.
inline std::optional<std::string> IsConvergent(const EpSequence& seq,
                                               const ControlledSpace& space) {
  CheckPointsIn(seq, space);
  const PointSet tail = TailValues(seq, space);
  if (tail.size() != 1) return std::nullopt;
  return space.label(tail.front());
}

inline bool IsCauchy(const EpSequence& seq, const ControlledSpace& space) {
  CheckPointsIn(seq, space);
  return TailValues(seq, space).size() == 1;
}

struct BoundednessReport {
  bool bounded = true;
  // Strict bound: d(x_n, x_m) < bound for all n, m.
  double bound = 1;
};

// bound = (max pairwise distance among all occurring values) + 1.
inline BoundednessReport Boundedness(const EpSequence& seq,
                                     const ControlledSpace& space) {
  std::vector<std::string> values = seq.prefix();
  values.insert(values.end(), seq.cycle().begin(), seq.cycle().end());
  return {true, Diameter(space, space.resolve(values)) + 1.0};
}

// i -> x_{offset + (i-1)*stride}, re-encoded as prefix + cycle. The cycle
// has length |cycle| / gcd(|cycle|, stride).
inline EpSequence ArithmeticSubsequence(const EpSequence& seq,
                                        std::uint64_t offset,
                                        std::uint64_t stride) {
  if (offset == 0 || stride == 0) {
    throw DomainError("subsequence offset and stride must be >= 1");
  }
  const std::uint64_t prefix_len = seq.prefix().size();
  const std::uint64_t cycle_len = seq.cycle().size();
  std::vector<std::string> prefix;
  std::uint64_t n = offset;
  for (; n <= prefix_len; n += stride) prefix.push_back(seq.at(n));
  const std::uint64_t period = cycle_len / std::gcd(cycle_len, stride);
  std::vector<std::string> cycle;
  cycle.reserve(period);
  for (std::uint64_t i = 0; i < period; ++i, n += stride) {
    cycle.push_back(seq.at(n));
  }
  return EpSequence(std::move(prefix), std::move(cycle));
}

}  // namespace roughcms

#endif  // ROUGHCMS_SEQUENCE_HPP_
