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

// Executable checks for the rough-convergence results on controlled metric
// type spaces. Throughout, k = sup alpha.
//
//   T_DIAM            diam(LIM^r) <= 2rk, hence LIM^r is bounded
//   T_BALL_SANDWICH   x_n -> x  =>  B[x,r] c LIM^{rk}  and  LIM^r c B[x,rk]
//   T_DERIVED_SET     (LIM^r)' c LIM^{rk}; with alpha == 1 also c LIM^r
//   T_ROUGH_BOUNDED   LIM^r nonempty  =>  the sequence is bounded
//   T_BOUNDED_ROUGH   bounded by B  =>  every x_p is in LIM^{2kB}
//   T_SUBSEQ          LIM^r x_n c LIM^r x_{n_i}
//   T_SHADOW          a_n -> xi, d(a_i,b_i) <= r/k eventually  =>  xi in
//                     LIM^r b_n
//   T_LIMSET_SEQ      xi_n in LIM^r, xi_n -> xi  =>  xi in LIM^{rk}
//   T_CLUSTER_BALL    c a cluster point  =>  LIM^r c B[c,rk]
//
// Each check reports whether its hypothesis applied, so a vacuous pass is
// never mistaken for one with content.

#ifndef ROUGHCMS_THEOREMS_HPP_
#define ROUGHCMS_THEOREMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/rough.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"
#include "roughcms/tolerance.hpp"

namespace roughcms {

enum class TheoremId {
  kDiameter,
  kBallSandwich,
  kDerivedSet,
  kRoughImpliesBounded,
  kBoundedImpliesRough,
  kSubsequence,
  kShadowing,
  kLimitSetSequence,
  kClusterBall,
};

inline constexpr std::array<TheoremId, 9> kAllTheorems = {
    TheoremId::kDiameter,           TheoremId::kBallSandwich,
    TheoremId::kDerivedSet,         TheoremId::kRoughImpliesBounded,
    TheoremId::kBoundedImpliesRough, TheoremId::kSubsequence,
    TheoremId::kShadowing,          TheoremId::kLimitSetSequence,
    TheoremId::kClusterBall,
};

inline std::string_view TheoremName(TheoremId id) {
  switch (id) {
    case TheoremId::kDiameter:
      return "T_DIAM";
    case TheoremId::kBallSandwich:
      return "T_BALL_SANDWICH";
    case TheoremId::kDerivedSet:
      return "T_DERIVED_SET";
    case TheoremId::kRoughImpliesBounded:
      return "T_ROUGH_BOUNDED";
    case TheoremId::kBoundedImpliesRough:
      return "T_BOUNDED_ROUGH";
    case TheoremId::kSubsequence:
      return "T_SUBSEQ";
    case TheoremId::kShadowing:
      return "T_SHADOW";
    case TheoremId::kLimitSetSequence:
      return "T_LIMSET_SEQ";
    case TheoremId::kClusterBall:
      return "T_CLUSTER_BALL";
  }
  return "?";
}

enum class Verdict {
  kHolds,          // hypothesis met, conclusion verified
  kVacuous,        // hypothesis met, but the conclusion is about an empty set
  kNotApplicable,  // hypothesis not met; nothing was asserted
  kViolated,
};

inline std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kVacuous:
      return "vacuous";
    case Verdict::kNotApplicable:
      return "not-applicable";
    case Verdict::kViolated:
      return "violated";
  }
  return "?";
}

struct Witness {
  std::string detail;
  std::vector<std::string> points;
  std::vector<double> values;
};

// Everything needed to re-run a check.
struct CheckParams {
  ControlledSpace space;
  EpSequence sequence;
  double r = 0;
  // Second sequence: b_n for T_SHADOW, the probe for T_LIMSET_SEQ.
  std::optional<EpSequence> other = std::nullopt;
  std::uint64_t offset = 1;
  std::uint64_t stride = 1;
};

struct TheoremReport {
  TheoremId id;
  Verdict verdict;
  CheckParams params;
  // Present iff verdict == kViolated.
  std::optional<Witness> witness;
  // T_DIAM only: diam(LIM^r) / (2rk) when r > 0 and LIM^r is nonempty.
  std::optional<double> bound_ratio;
  std::string note;

  bool passed() const { return verdict != Verdict::kViolated; }
};

namespace internal {

inline TheoremReport MakeReport(TheoremId id, CheckParams params) {
  return TheoremReport{id, Verdict::kHolds, std::move(params), std::nullopt,
                       std::nullopt, {}};
}

inline void Fail(TheoremReport& report, Witness witness) {
  report.verdict = Verdict::kViolated;
  report.witness = std::move(witness);
}

// First member of `sub` missing from `super`, if any. Both sorted.
inline std::optional<std::size_t> FirstNotIn(const PointSet& sub,
                                             const PointSet& super) {
  for (std::size_t x : sub) {
    if (!std::binary_search(super.begin(), super.end(), x)) return x;
  }
  return std::nullopt;
}

inline PointSet OccurringPoints(const EpSequence& seq,
                                const ControlledSpace& space) {
  std::vector<std::string> values = seq.prefix();
  values.insert(values.end(), seq.cycle().begin(), seq.cycle().end());
  return space.resolve(values);
}

inline bool AlphaIsIdentically1(const ControlledSpace& space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (space.alpha(i, j) != 1.0) return false;
    }
  }
  return true;
}

}  // namespace internal

inline TheoremReport CheckDiameterBound(const ControlledSpace& space,
                                        const EpSequence& seq, double r) {
  auto report = internal::MakeReport(TheoremId::kDiameter, {space, seq, r});
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  if (lim.members.empty()) {
    report.verdict = Verdict::kVacuous;
    report.note = "LIM^r is empty";
    return report;
  }
  const double diam = Diameter(space, lim.members);
  const double bound = 2 * r * space.k();
  if (r > 0) report.bound_ratio = diam / bound;
  if (!std::isfinite(diam)) {
    internal::Fail(report, {"LIM^r has infinite diameter", {}, {diam}});
    return report;
  }
  if (!LessOrEqual(diam, bound)) {
    for (std::size_t x : lim.members) {
      for (std::size_t y : lim.members) {
        if (space.distance(x, y) == diam) {
          internal::Fail(report, {"d(x,y) > 2rk for x, y in LIM^r",
                                  {space.label(x), space.label(y)},
                                  {diam, bound}});
          return report;
        }
      }
    }
  }
  return report;
}

inline TheoremReport CheckBallSandwich(const ControlledSpace& space,
                                       const EpSequence& seq, double r) {
  auto report =
      internal::MakeReport(TheoremId::kBallSandwich, {space, seq, r});
  const auto limit = IsConvergent(seq, space);
  if (!limit) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "sequence is not convergent";
    return report;
  }
  const std::size_t x = space.index_of(*limit);
  const double rk = r * space.k();
  const Ball inner = MakeBall(space, x, r, BallKind::kClosed);
  const RoughLimitSet lim_rk = RoughLimits(seq, space, rk);
  if (auto bad = internal::FirstNotIn(inner.members, lim_rk.members)) {
    internal::Fail(report,
                   {"point of B[x,r] outside LIM^{rk}",
                    {*limit, space.label(*bad)},
                    {space.distance(x, *bad), LimsupDistance(seq, space, *bad),
                     rk}});
    return report;
  }
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  const Ball outer = MakeBall(space, x, rk, BallKind::kClosed);
  if (auto bad = internal::FirstNotIn(lim.members, outer.members)) {
    internal::Fail(report, {"point of LIM^r outside B[x,rk]",
                            {*limit, space.label(*bad)},
                            {space.distance(x, *bad), rk}});
  }
  return report;
}

inline TheoremReport CheckDerivedSet(const ControlledSpace& space,
                                     const EpSequence& seq, double r) {
  auto report = internal::MakeReport(TheoremId::kDerivedSet, {space, seq, r});
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  const PointSet derived = DerivedSet(space, lim.members);
  const RoughLimitSet lim_rk = RoughLimits(seq, space, r * space.k());
  if (auto bad = internal::FirstNotIn(derived, lim_rk.members)) {
    internal::Fail(report, {"limit point of LIM^r outside LIM^{rk}",
                            {space.label(*bad)},
                            {LimsupDistance(seq, space, *bad), r * space.k()}});
    return report;
  }
  if (internal::AlphaIsIdentically1(space)) {
    if (auto bad = internal::FirstNotIn(derived, lim.members)) {
      internal::Fail(report, {"alpha == 1 but LIM^r is not closed",
                              {space.label(*bad)},
                              {LimsupDistance(seq, space, *bad), r}});
      return report;
    }
  }
  if (derived.empty()) {
    report.verdict = Verdict::kVacuous;
    report.note = "derived set of LIM^r is empty (finite space)";
  }
  return report;
}

inline TheoremReport CheckRoughImpliesBounded(const ControlledSpace& space,
                                              const EpSequence& seq,
                                              double r) {
  auto report =
      internal::MakeReport(TheoremId::kRoughImpliesBounded, {space, seq, r});
  if (RoughLimits(seq, space, r).members.empty()) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "sequence is not r-convergent";
    return report;
  }
  const BoundednessReport b = Boundedness(seq, space);
  if (!b.bounded || !std::isfinite(b.bound)) {
    internal::Fail(report, {"no finite bound", {}, {b.bound}});
    return report;
  }
  const PointSet values = internal::OccurringPoints(seq, space);
  for (std::size_t x : values) {
    for (std::size_t y : values) {
      if (!(space.distance(x, y) < b.bound)) {
        internal::Fail(report, {"d(x_n,x_m) >= B",
                                {space.label(x), space.label(y)},
                                {space.distance(x, y), b.bound}});
        return report;
      }
    }
  }
  return report;
}

inline TheoremReport CheckBoundedImpliesRough(const ControlledSpace& space,
                                              const EpSequence& seq) {
  const BoundednessReport b = Boundedness(seq, space);
  const double r = 2 * space.k() * b.bound;
  auto report =
      internal::MakeReport(TheoremId::kBoundedImpliesRough, {space, seq, r});
  for (std::size_t p : internal::OccurringPoints(seq, space)) {
    if (!IsRoughLimit(seq, space, p, r)) {
      internal::Fail(report, {"x_p not in LIM^{2kB}",
                              {space.label(p)},
                              {LimsupDistance(seq, space, p), r}});
      return report;
    }
  }
  return report;
}

inline TheoremReport CheckSubsequence(const ControlledSpace& space,
                                      const EpSequence& seq, double r,
                                      std::uint64_t offset,
                                      std::uint64_t stride) {
  auto report = internal::MakeReport(TheoremId::kSubsequence,
                                     {space, seq, r, std::nullopt, offset,
                                      stride});
  const EpSequence sub = ArithmeticSubsequence(seq, offset, stride);
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  const RoughLimitSet lim_sub = RoughLimits(sub, space, r);
  if (auto bad = internal::FirstNotIn(lim.members, lim_sub.members)) {
    internal::Fail(report, {"point of LIM^r x_n outside LIM^r x_{n_i}",
                            {space.label(*bad)},
                            {LimsupDistance(sub, space, *bad), r}});
  } else if (lim.members.empty()) {
    report.verdict = Verdict::kVacuous;
    report.note = "LIM^r is empty";
  }
  return report;
}

// Throws DomainError for r <= 0.
inline TheoremReport CheckShadowing(const ControlledSpace& space,
                                    const EpSequence& seq_a,
                                    const EpSequence& seq_b, double r) {
  if (!(r > 0)) throw DomainError("shadowing check needs r > 0");
  auto report =
      internal::MakeReport(TheoremId::kShadowing, {space, seq_a, r, seq_b});
  CheckPointsIn(seq_b, space);
  const auto xi = IsConvergent(seq_a, space);
  if (!xi) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "a_n is not convergent";
    return report;
  }
  // Past both prefixes the pair (a_i, b_i) is periodic with period
  // lcm(|cycle_a|, |cycle_b|).
  const std::uint64_t start =
      std::max(seq_a.prefix().size(), seq_b.prefix().size()) + 1;
  const std::uint64_t period =
      std::lcm<std::uint64_t>(seq_a.cycle().size(), seq_b.cycle().size());
  const double limit = r / space.k();
  for (std::uint64_t i = start; i < start + period; ++i) {
    const double d = space.distance(space.index_of(seq_a.at(i)),
                                    space.index_of(seq_b.at(i)));
    if (!LessOrEqual(d, limit)) {
      report.verdict = Verdict::kNotApplicable;
      report.note = "d(a_i,b_i) > r/k infinitely often";
      return report;
    }
  }
  if (!IsRoughLimit(seq_b, space, *xi, r)) {
    internal::Fail(report, {"xi not in LIM^r b_n",
                            {*xi},
                            {LimsupDistance(seq_b, space, *xi), r}});
  }
  return report;
}

inline TheoremReport CheckLimitSetSequence(const ControlledSpace& space,
                                           const EpSequence& seq, double r,
                                           const EpSequence& probe) {
  auto report = internal::MakeReport(TheoremId::kLimitSetSequence,
                                     {space, seq, r, probe});
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  if (lim.members.empty()) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "sequence is not r-convergent";
    return report;
  }
  if (internal::FirstNotIn(internal::OccurringPoints(probe, space),
                           lim.members)) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "probe leaves LIM^r";
    return report;
  }
  const auto xi = IsConvergent(probe, space);
  if (!xi) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "probe is not convergent";
    return report;
  }
  const double rk = r * space.k();
  if (!IsRoughLimit(seq, space, *xi, rk)) {
    internal::Fail(report, {"probe limit not in LIM^{rk}",
                            {*xi},
                            {LimsupDistance(seq, space, *xi), rk}});
  }
  return report;
}

inline TheoremReport CheckClusterBall(const ControlledSpace& space,
                                      const EpSequence& seq, double r) {
  auto report =
      internal::MakeReport(TheoremId::kClusterBall, {space, seq, r});
  const RoughLimitSet lim = RoughLimits(seq, space, r);
  if (lim.members.empty()) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "sequence is not r-convergent";
    return report;
  }
  const double rk = r * space.k();
  for (std::size_t c : ClusterPoints(seq, space)) {
    const Ball ball = MakeBall(space, c, rk, BallKind::kClosed);
    if (auto bad = internal::FirstNotIn(lim.members, ball.members)) {
      internal::Fail(report, {"point of LIM^r outside B[c,rk]",
                              {space.label(c), space.label(*bad)},
                              {space.distance(c, *bad), rk}});
      return report;
    }
  }
  return report;
}

// Re-runs the check recorded in `report` from its params.
inline TheoremReport Recheck(const TheoremReport& report) {
  const CheckParams& p = report.params;
  switch (report.id) {
    case TheoremId::kDiameter:
      return CheckDiameterBound(p.space, p.sequence, p.r);
    case TheoremId::kBallSandwich:
      return CheckBallSandwich(p.space, p.sequence, p.r);
    case TheoremId::kDerivedSet:
      return CheckDerivedSet(p.space, p.sequence, p.r);
    case TheoremId::kRoughImpliesBounded:
      return CheckRoughImpliesBounded(p.space, p.sequence, p.r);
    case TheoremId::kBoundedImpliesRough:
      return CheckBoundedImpliesRough(p.space, p.sequence);
    case TheoremId::kSubsequence:
      return CheckSubsequence(p.space, p.sequence, p.r, p.offset, p.stride);
    case TheoremId::kShadowing:
      // RunAll's r = 0 placeholder has no partner and nothing to re-run.
      if (!p.other || !(p.r > 0)) return report;
      return CheckShadowing(p.space, p.sequence, *p.other, p.r);
    case TheoremId::kLimitSetSequence:
      if (!p.other) return report;
      return CheckLimitSetSequence(p.space, p.sequence, p.r, *p.other);
    case TheoremId::kClusterBall:
      return CheckClusterBall(p.space, p.sequence, p.r);
  }
  throw DomainError("unknown theorem id");
}

// {0, r*/2, r*, (r*+D)/2, D, 2D} with r* the critical roughness and D the
// diameter of the whole space; exact duplicates dropped, order kept.
inline std::vector<double> DefaultRGrid(const ControlledSpace& space,
                                        const EpSequence& seq) {
  const double r_star = FindCriticalRoughness(seq, space).r_star;
  const double diam = Diameter(space, space.all_points());
  std::vector<double> grid;
  for (double r : {0.0, r_star / 2, r_star, (r_star + diam) / 2, diam,
                   2 * diam}) {
    if (std::find(grid.begin(), grid.end(), r) == grid.end()) {
      grid.push_back(r);
    }
  }
  return grid;
}

struct RunOptions {
  std::uint64_t offset = 1;
  std::uint64_t stride = 2;
  // Rotates the derived shadowing partner and limit-set probe.
  std::uint64_t salt = 0;
};

// Shadowing partner: if seq converges to xi, a sequence cycling through
// B[xi, r/k] (rotated by `salt`) after seq's own prefix. Otherwise seq.
inline EpSequence ShadowPartner(const ControlledSpace& space,
                                const EpSequence& seq, double r,
                                std::uint64_t salt) {
  const auto xi = IsConvergent(seq, space);
  if (!xi) return seq;
  PointSet near =
      MakeBall(space, *xi, r / space.k(), BallKind::kClosed).members;
  std::rotate(near.begin(), near.begin() + salt % near.size(), near.end());
  return EpSequence(seq.prefix(), space.labels(near));
}

// Probe inside LIM^r: all members (rotated by `salt`) then constant at one
// of them. Nullopt when LIM^r is empty.
inline std::optional<EpSequence> LimitSetProbe(const ControlledSpace& space,
                                               const EpSequence& seq,
                                               double r, std::uint64_t salt) {
  PointSet members = RoughLimits(seq, space, r).members;
  if (members.empty()) return std::nullopt;
  std::rotate(members.begin(), members.begin() + salt % members.size(),
              members.end());
  const std::string target = space.label(members.back());
  return EpSequence(space.labels(members), {target});
}

// T_BOUNDED_ROUGH once, then every r-dependent check for each r in the
// grid. T_SHADOW is reported not-applicable at r = 0, where it is undefined.
inline std::vector<TheoremReport> RunAll(const ControlledSpace& space,
                                         const EpSequence& seq,
                                         const std::vector<double>& r_grid,
                                         const RunOptions& options = {}) {
  std::vector<TheoremReport> out;
  out.push_back(CheckBoundedImpliesRough(space, seq));
  for (double r : r_grid) {
    out.push_back(CheckDiameterBound(space, seq, r));
    out.push_back(CheckBallSandwich(space, seq, r));
    out.push_back(CheckDerivedSet(space, seq, r));
    out.push_back(CheckRoughImpliesBounded(space, seq, r));
    out.push_back(
        CheckSubsequence(space, seq, r, options.offset, options.stride));
    if (r > 0) {
      out.push_back(CheckShadowing(
          space, seq, ShadowPartner(space, seq, r, options.salt), r));
    } else {
      auto na = internal::MakeReport(TheoremId::kShadowing, {space, seq, r});
      na.verdict = Verdict::kNotApplicable;
      na.note = "requires r > 0";
      out.push_back(std::move(na));
    }
    if (auto probe = LimitSetProbe(space, seq, r, options.salt)) {
      out.push_back(CheckLimitSetSequence(space, seq, r, *probe));
    } else {
      auto na = internal::MakeReport(TheoremId::kLimitSetSequence,
                                     {space, seq, r});
      na.verdict = Verdict::kNotApplicable;
      na.note = "LIM^r is empty";
      out.push_back(std::move(na));
    }
    out.push_back(CheckClusterBall(space, seq, r));
  }
  return out;
}

}  // namespace roughcms

#endif  // ROUGHCMS_THEOREMS_HPP_
