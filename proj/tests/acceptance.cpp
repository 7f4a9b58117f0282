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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "roughcms/commands.hpp"
#include "roughcms/roughcms.hpp"

namespace roughcms {
namespace {

constexpr double kValidateBudgetSeconds = 5.0;
constexpr double kFuzzBudgetSeconds = 60.0;
constexpr std::uint64_t kFuzzTrials = 10000;
constexpr std::uint64_t kFuzzSeed = 1;
constexpr std::size_t kOracleSpaces = 200;
constexpr std::size_t kOracleMaxPoints = 6;
constexpr std::size_t kDegenerationCases = 100;
constexpr double kRatioSlack = 1e-9;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int failed = 0;

void Report(int id, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

void AxiomReproduction() {
  const auto start = Clock::now();
  int valid = 0;
  for (int n = 2; n <= 50; ++n) {
    AnalysisRequest req;
    req.operation = Operation::kValidate;
    req.space_source = "paper-example:" + std::to_string(n);
    std::ostringstream out, err;
    if (RunRequest(req, out, err) == kExitOk &&
        out.str().rfind("valid (", 0) == 0) {
      ++valid;
    }
  }
  const double t = Seconds(start);
  std::ostringstream d;
  d << "validate N=2..50: " << valid << "/49 valid in " << t << " s (limit "
    << kValidateBudgetSeconds << " s)";
  Report(1, valid == 49 && t < kValidateBudgetSeconds, d.str());
}

void GoldenLimitSets() {
  const ControlledSpace space = BuildSpace(ParityExampleSpec(10));
  const EpSequence xi({}, {"2", "3"});
  const PointSet half = RoughLimits(xi, space, 1 / std::sqrt(2.0)).members;
  const PointSet one = RoughLimits(xi, space, 1.0).members;
  const bool pass =
      half == space.resolve(std::vector<std::string>{"2", "3"}) && one == space.all_points();
  Report(2, pass,
         "LIM^{1/sqrt2} = " + internal::FlowLabels(space.labels(half)) +
             ", LIM^1 = " + internal::FlowLabels(space.labels(one)));
}

void NonConvergence() {
  const ControlledSpace space = BuildSpace(ParityExampleSpec(10));
  const EpSequence xi({}, {"2", "3"});
  const auto limit = IsConvergent(xi, space);
  const bool cauchy = IsCauchy(xi, space);
  Report(3, !limit && !cauchy,
         std::string("convergent: ") + (limit ? *limit : "none") +
             ", cauchy: " + (cauchy ? "true" : "false"));
}

void OracleEquivalence() {
  std::uint64_t cases = 0, agree = 0;
  for (std::size_t i = 0; i < kOracleSpaces; ++i) {
    Rng rng = TrialRng(4, i);
    const std::size_t n = UniformInt(rng, 1, kOracleMaxPoints);
    const ControlledSpace space = BuildSpace(RandomSpaceSpec(rng, n));
    for (const EpSequence& seq : testing::AllSequences(n, 2, 3)) {
      for (double r : testing::EightPointGrid(space, seq)) {
        for (std::size_t x = 0; x < n; ++x) {
          ++cases;
          agree += IsRoughLimit(seq, space, x, r) ==
                   testing::DefinitionalRoughLimit(space, seq, x, r);
        }
      }
    }
  }
  std::ostringstream d;
  d << agree << "/" << cases << " rough-limit decisions agree with the "
    << "definitional scan over " << kOracleSpaces << " spaces";
  Report(4, cases > 0 && agree == cases, d.str());
}

FuzzConfig AcceptanceFuzzConfig() {
  FuzzConfig config;
  config.trials = kFuzzTrials;
  config.seed = kFuzzSeed;
  return config;
}

void TheoremFuzz(FuzzSummary& summary) {
  const auto start = Clock::now();
  summary = Fuzz(AcceptanceFuzzConfig());
  const double t = Seconds(start);
  std::ostringstream d;
  d << kFuzzTrials << " trials, " << summary.reports << " reports, "
    << summary.failures << " failures in " << t << " s (limit "
    << kFuzzBudgetSeconds << " s)";
  Report(5, summary.ok() && t < kFuzzBudgetSeconds, d.str());
  for (const auto& w : summary.witnesses) {
    std::printf("  trial %llu: %s at r=%s\n",
                static_cast<unsigned long long>(w.trial),
                std::string(TheoremName(w.report.id)).c_str(),
                FormatReal(w.report.params.r).c_str());
  }
}

void ZeroDegeneration() {
  std::size_t convergent_ok = 0, divergent_ok = 0;
  for (std::size_t i = 0; i < kDegenerationCases; ++i) {
    Rng rng = TrialRng(6, i);
    const std::size_t n = UniformInt(rng, 2, 12);
    const ControlledSpace space = BuildSpace(RandomSpaceSpec(rng, n));
    const EpSequence conv =
        RandomSequence(rng, n, 3, 4, SequenceShape::kConvergent);
    const EpSequence div =
        RandomSequence(rng, n, 3, 4, SequenceShape::kNonConvergent);
    convergent_ok += RoughLimits(conv, space, 0).members ==
                     space.resolve(std::vector<std::string>{conv.cycle().front()});
    divergent_ok += RoughLimits(div, space, 0).members.empty();
  }
  std::ostringstream d;
  d << "LIM^0 = {limit} for " << convergent_ok << "/" << kDegenerationCases
    << " convergent, empty for " << divergent_ok << "/" << kDegenerationCases
    << " non-convergent";
  Report(6,
         convergent_ok == kDegenerationCases &&
             divergent_ok == kDegenerationCases,
         d.str());
}

void DiameterRatio(const FuzzSummary& summary) {
  if (!summary.max_bound_ratio) {
    Report(7, false, "no report with r > 0 and nonempty LIM^r");
    return;
  }
  const BoundRatioRecord& m = *summary.max_bound_ratio;
  std::ostringstream d;
  d << "max diam(LIM^r)/(2rk) = " << FormatReal(m.ratio) << " (trial "
    << m.trial << ", r = " << FormatReal(m.r) << "), bound 1 + "
    << kRatioSlack;
  Report(7, m.ratio <= 1 + kRatioSlack, d.str());
}

void Reproducibility(const FuzzSummary& first) {
  FuzzConfig config = AcceptanceFuzzConfig();
  config.threads = 3;
  const std::string a = EmitFuzzSummary(first);
  const std::string b = EmitFuzzSummary(Fuzz(config));
  Report(8, a == b,
         "same-seed summaries (" + std::to_string(a.size()) + " bytes) " +
             (a == b ? "identical" : "differ"));
}

}  // namespace
}  // namespace roughcms

int main() {
  using namespace roughcms;
  std::printf("tolerance = %g\n", tolerance());
  AxiomReproduction();
  GoldenLimitSets();
  NonConvergence();
  OracleEquivalence();
  FuzzSummary summary;
  TheoremFuzz(summary);
  ZeroDegeneration();
  DiameterRatio(summary);
  Reproducibility(summary);
  std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
