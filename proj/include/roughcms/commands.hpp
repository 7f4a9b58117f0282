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

// Command implementations behind the `roughcms` CLI. Each returns the
// process exit status: 0 success/valid, 1 axiom violation or theorem
// failure, 2 usage, parse or shape error.

#ifndef ROUGHCMS_COMMANDS_HPP_
#define ROUGHCMS_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/fuzz.hpp"
#include "roughcms/io.hpp"
#include "roughcms/rough.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"
#include "roughcms/theorems.hpp"

namespace roughcms {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Operation { kValidate, kAnalyze, kLimset, kTheorems, kFuzz, kExport };
enum class OutputFormat { kText, kYaml };

struct AnalysisRequest {
  Operation operation = Operation::kValidate;
  // Builtin name, inline document or file path. Unused by kFuzz.
  std::string space_source;
  std::optional<std::string> sequence;
  // --r for analyze/limset, --r-grid for theorems. Empty: defaults.
  std::vector<double> r_values;
  FuzzConfig fuzz;
  OutputFormat format = OutputFormat::kText;
};

namespace internal {

inline std::string LabelSet(const ControlledSpace& space, const PointSet& s) {
  return FlowLabels(space.labels(s));
}

inline void PrintViolations(const ValidationResult& result, std::ostream& out,
                            OutputFormat format, std::size_t limit) {
  if (format == OutputFormat::kYaml) {
    out << "violations:\n";
  } else {
    out << result.violations.size() << " violation(s):\n";
  }
  std::size_t shown = 0;
  for (const Violation& v : result.violations) {
    if (format == OutputFormat::kText && shown == limit) {
      out << "  ... " << result.violations.size() - shown << " more\n";
      break;
    }
    ++shown;
    if (format == OutputFormat::kYaml) {
      out << "  - {axiom: \"" << AxiomName(v.axiom)
          << "\", points: " << FlowLabels(v.points)
          << ", lhs: " << FormatReal(v.lhs) << ", rhs: " << FormatReal(v.rhs)
          << "}\n";
    } else {
      out << "  " << AxiomName(v.axiom) << " at "
          << FlowLabels(v.points) << ": ";
      switch (v.axiom) {
        case Axiom::kIdentity:
          out << "d = " << FormatReal(v.lhs)
              << (v.points[0] == v.points[1] ? " on the diagonal\n"
                                             : " between distinct points\n");
          break;
        case Axiom::kSymmetry:
          out << FormatReal(v.lhs) << " != " << FormatReal(v.rhs) << "\n";
          break;
        case Axiom::kTriangle:
          out << "d(x,y) = " << FormatReal(v.lhs)
              << " > alpha(x,z)d(x,z) + alpha(z,y)d(z,y) = "
              << FormatReal(v.rhs) << "\n";
          break;
        case Axiom::kAlphaAtLeastOne:
          out << "alpha = " << FormatReal(v.rhs) << " < 1\n";
          break;
      }
    }
  }
}

// Builds the requested space, printing violations on failure.
inline std::optional<ControlledSpace> BuildOrReport(const AnalysisRequest& req,
                                                    std::ostream& out) {
  SpaceSpec spec = ResolveSpaceSource(req.space_source);
  ValidationResult result = ValidateAxioms(spec);
  if (!result.valid()) {
    out << (req.format == OutputFormat::kYaml ? "valid: false\n"
                                              : "space is not valid\n");
    PrintViolations(result, out, req.format, 20);
    return std::nullopt;
  }
  return BuildSpace(std::move(spec));
}

inline EpSequence RequireSequence(const AnalysisRequest& req,
                                  const ControlledSpace& space) {
  if (!req.sequence) throw ParseError("--seq is required", 0, "seq");
  EpSequence seq = ParseSequence(*req.sequence);
  CheckPointsIn(seq, space);
  return seq;
}

}  // namespace internal

inline int CmdValidate(const AnalysisRequest& req, std::ostream& out) {
  const SpaceSpec spec = ResolveSpaceSource(req.space_source);
  const ValidationResult result = ValidateAxioms(spec);
  const bool yaml = req.format == OutputFormat::kYaml;
  if (!result.valid()) {
    out << (yaml ? "valid: false\n" : "invalid\n");
    internal::PrintViolations(result, out, req.format, 20);
    return kExitFailure;
  }
  const ControlledSpace space = BuildSpace(spec);
  if (yaml) {
    out << "valid: true\n"
        << "points: " << space.size() << "\n"
        << "k: " << FormatReal(space.k()) << "\n"
        << "min_positive_distance: "
        << FormatReal(space.min_positive_distance()) << "\n";
  } else {
    out << "valid (" << space.size() << " points, "
        << space.size() * space.size() * space.size()
        << " triples checked)\n"
        << "k = " << FormatReal(space.k()) << "\n"
        << "min positive distance = "
        << FormatReal(space.min_positive_distance()) << "\n";
  }
  return kExitOk;
}

inline int CmdAnalyze(const AnalysisRequest& req, std::ostream& out) {
  const auto space = internal::BuildOrReport(req, out);
  if (!space) return kExitFailure;
  const EpSequence seq = internal::RequireSequence(req, *space);
  const std::vector<double> rs =
      req.r_values.empty() ? DefaultRGrid(*space, seq) : req.r_values;
  const CriticalRoughness crit = FindCriticalRoughness(seq, *space);
  const auto limit = IsConvergent(seq, *space);
  const bool cauchy = IsCauchy(seq, *space);
  const BoundednessReport bounded = Boundedness(seq, *space);
  const double diam = Diameter(*space, space->all_points());

  out << "sequence: " << EmitSequence(seq) << "\n"
      << "k: " << FormatReal(space->k()) << "\n"
      << "diameter: " << FormatReal(diam) << "\n"
      << "convergent: " << (limit ? *limit : std::string("no")) << "\n"
      << "cauchy: " << (cauchy ? "yes" : "no") << "\n"
      << "bound_B: " << FormatReal(bounded.bound) << "\n"
      << "cluster_points: "
      << internal::LabelSet(*space, ClusterPoints(seq, *space)) << "\n"
      << "critical_roughness: {r: " << FormatReal(crit.r_star)
      << ", argmin: " << internal::LabelSet(*space, crit.argmin) << "}\n";
  out << "limsup_distance:\n";
  for (std::size_t x = 0; x < space->size(); ++x) {
    out << "  " << internal::QuoteLabel(space->label(x)) << ": "
        << FormatReal(LimsupDistance(seq, *space, x)) << "\n";
  }
  out << "rough_limit_sets:\n";
  for (double r : rs) {
    const RoughLimitSet lim = RoughLimits(seq, *space, r);
    out << "  - {r: " << FormatReal(r)
        << ", members: " << internal::LabelSet(*space, lim.members)
        << ", diameter: " << FormatReal(Diameter(*space, lim.members))
        << "}\n";
  }
  return kExitOk;
}

inline int CmdLimset(const AnalysisRequest& req, std::ostream& out) {
  if (req.r_values.size() != 1) {
    throw ParseError("limset takes exactly one --r value", 0, "r");
  }
  const auto space = internal::BuildOrReport(req, out);
  if (!space) return kExitFailure;
  const EpSequence seq = internal::RequireSequence(req, *space);
  const RoughLimitSet lim = RoughLimits(seq, *space, req.r_values.front());
  if (req.format == OutputFormat::kYaml) {
    out << "r: " << FormatReal(lim.r) << "\n"
        << "members: " << internal::LabelSet(*space, lim.members) << "\n";
  } else {
    out << internal::LabelSet(*space, lim.members) << "\n";
  }
  return kExitOk;
}

inline int CmdTheorems(const AnalysisRequest& req, std::ostream& out) {
  const auto space = internal::BuildOrReport(req, out);
  if (!space) return kExitFailure;
  const EpSequence seq = internal::RequireSequence(req, *space);
  const std::vector<double> grid =
      req.r_values.empty() ? DefaultRGrid(*space, seq) : req.r_values;
  for (double r : grid) {
    if (!(r >= 0)) throw DomainError("r-grid entries must be >= 0");
  }
  const auto reports = RunAll(*space, seq, grid);
  bool ok = true;
  if (req.format == OutputFormat::kYaml) {
    out << "reports:\n";
    for (const auto& r : reports) {
      out << EmitReport(r);
      ok = ok && r.passed();
    }
  } else {
    for (const auto& r : reports) {
      out << TheoremName(r.id) << " r=" << FormatReal(r.params.r) << ": "
          << VerdictName(r.verdict);
      if (!r.note.empty()) out << " (" << r.note << ")";
      if (r.witness) {
        out << " witness " << internal::FlowLabels(r.witness->points) << " "
            << internal::FlowReals(r.witness->values) << ": "
            << r.witness->detail;
      }
      out << "\n";
      ok = ok && r.passed();
    }
  }
  out << "status: " << (ok ? "ok" : "failed") << "\n";
  return ok ? kExitOk : kExitFailure;
}

inline int CmdFuzz(const AnalysisRequest& req, std::ostream& out) {
  const FuzzSummary summary = Fuzz(req.fuzz);
  out << EmitFuzzSummary(summary);
  return summary.ok() ? kExitOk : kExitFailure;
}

// Writes the normalized document of a space (useful for builtins).
inline int CmdExport(const AnalysisRequest& req, std::ostream& out) {
  out << EmitSpace(ResolveSpaceSource(req.space_source));
  return kExitOk;
}

// Dispatches and maps library errors to exit status 2 with a message on
// `err`.
inline int RunRequest(const AnalysisRequest& req, std::ostream& out,
                      std::ostream& err) {
  try {
    switch (req.operation) {
      case Operation::kValidate:
        return CmdValidate(req, out);
      case Operation::kAnalyze:
        return CmdAnalyze(req, out);
      case Operation::kLimset:
        return CmdLimset(req, out);
      case Operation::kTheorems:
        return CmdTheorems(req, out);
      case Operation::kFuzz:
        return CmdFuzz(req, out);
      case Operation::kExport:
        return CmdExport(req, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace roughcms

#endif  // ROUGHCMS_COMMANDS_HPP_
