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

// Seeded theorem fuzzing. Trial i draws everything from TrialRng(seed, i),
// so the summary depends only on the config, never on thread scheduling.

#ifndef ROUGHCMS_FUZZ_HPP_
#define ROUGHCMS_FUZZ_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/random.hpp"
#include "roughcms/theorems.hpp"

namespace roughcms {

struct FuzzConfig {
  std::uint64_t trials = 1000;
  std::size_t max_points = 12;
  std::size_t max_cycle = 4;
  std::size_t max_prefix = 3;
  std::uint64_t seed = 1;
  // Empty: DefaultRGrid per trial.
  std::vector<double> r_grid;
  // Worker threads, 0 = hardware concurrency. Does not affect results.
  unsigned threads = 0;
  // Failures kept with full witnesses; the rest are only counted.
  std::size_t max_witnesses = 16;
};

inline void CheckConfig(const FuzzConfig& config) {
  if (config.trials < 1 || config.max_points < 1 || config.max_cycle < 1) {
    throw DomainError("fuzz trials, max_points and max_cycle must be >= 1");
  }
  for (double r : config.r_grid) {
    if (!(r >= 0)) throw DomainError("r_grid entries must be >= 0");
  }
}

struct VerdictTally {
  std::uint64_t holds = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t violated = 0;

  void Add(Verdict v) {
    switch (v) {
      case Verdict::kHolds:
        ++holds;
        break;
      case Verdict::kVacuous:
        ++vacuous;
        break;
      case Verdict::kNotApplicable:
        ++not_applicable;
        break;
      case Verdict::kViolated:
        ++violated;
        break;
    }
  }
  void Merge(const VerdictTally& o) {
    holds += o.holds;
    vacuous += o.vacuous;
    not_applicable += o.not_applicable;
    violated += o.violated;
  }
};

struct FuzzFailure {
  std::uint64_t trial;
  TheoremReport report;
};

// Largest diam(LIM^r) / (2rk) seen over reports with r > 0 and LIM^r
// nonempty. Recorded as data only; attaining 1 is not asserted anywhere.
struct BoundRatioRecord {
  double ratio = 0;
  std::uint64_t trial = 0;
  double r = 0;
};

struct FuzzSummary {
  FuzzConfig config;
  std::uint64_t reports = 0;
  std::array<VerdictTally, kAllTheorems.size()> tallies{};
  std::uint64_t failures = 0;
  std::vector<FuzzFailure> witnesses;
  std::optional<BoundRatioRecord> max_bound_ratio;

  bool ok() const { return failures == 0; }
};

struct TrialResult {
  std::array<VerdictTally, kAllTheorems.size()> tallies{};
  std::uint64_t reports = 0;
  std::vector<TheoremReport> failures;
  std::optional<BoundRatioRecord> max_bound_ratio;
};

inline TrialResult RunTrial(const FuzzConfig& config, std::uint64_t index) {
  Rng rng = TrialRng(config.seed, index);
  const std::size_t n = UniformInt(rng, 1, config.max_points);
  const ControlledSpace space = BuildSpace(RandomSpaceSpec(rng, n));
  const EpSequence seq =
      RandomSequence(rng, n, config.max_prefix, config.max_cycle);
  RunOptions options;
  options.offset = UniformInt(rng, 1, 4);
  options.stride = UniformInt(rng, 1, 4);
  options.salt = rng();
  const std::vector<double> grid =
      config.r_grid.empty() ? DefaultRGrid(space, seq) : config.r_grid;

  TrialResult result;
  for (TheoremReport& report : RunAll(space, seq, grid, options)) {
    ++result.reports;
    result.tallies[static_cast<std::size_t>(report.id)].Add(report.verdict);
    if (report.bound_ratio &&
        (!result.max_bound_ratio ||
         *report.bound_ratio > result.max_bound_ratio->ratio)) {
      result.max_bound_ratio =
          BoundRatioRecord{*report.bound_ratio, index, report.params.r};
    }
    if (!report.passed()) result.failures.push_back(std::move(report));
  }
  return result;
}

inline FuzzSummary Fuzz(const FuzzConfig& config) {
  CheckConfig(config);
  std::vector<TrialResult> results(config.trials);
  unsigned workers = config.threads != 0
                         ? config.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, config.trials));

  std::vector<std::exception_ptr> errors(config.trials);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i = next++; i < config.trials; i = next++) {
      try {
        results[i] = RunTrial(config, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FuzzSummary summary;
  summary.config = config;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    TrialResult& t = results[i];
    summary.reports += t.reports;
    for (std::size_t j = 0; j < t.tallies.size(); ++j) {
      summary.tallies[j].Merge(t.tallies[j]);
    }
    summary.failures += t.failures.size();
    for (auto& f : t.failures) {
      if (summary.witnesses.size() < config.max_witnesses) {
        summary.witnesses.push_back({i, std::move(f)});
      }
    }
    if (t.max_bound_ratio &&
        (!summary.max_bound_ratio ||
         t.max_bound_ratio->ratio > summary.max_bound_ratio->ratio)) {
      summary.max_bound_ratio = t.max_bound_ratio;
    }
  }
  return summary;
}

}  // namespace roughcms

#endif  // ROUGHCMS_FUZZ_HPP_
