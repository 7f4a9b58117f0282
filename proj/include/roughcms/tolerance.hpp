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

#ifndef ROUGHCMS_TOLERANCE_HPP_
#define ROUGHCMS_TOLERANCE_HPP_

#include <cmath>
#include <cstdlib>
#include <string>

namespace roughcms {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr const char* kToleranceEnvVar = "ROUGHCMS_TOLERANCE";

// Absolute slack applied to inequality boundaries only: `a <= b` is
// evaluated as `a <= b + tolerance()`. Equalities (d1, d2) stay exact.
//
// Read once from ROUGHCMS_TOLERANCE; a missing, unparsable, negative or
// non-finite value falls back to 1e-9.
inline double tolerance() {
  static const double value = [] {
    const char* raw = std::getenv(kToleranceEnvVar);
    if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
    char* end = nullptr;
    const double parsed = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !std::isfinite(parsed) || parsed < 0) {
      return kDefaultTolerance;
    }
    return parsed;
  }();
  return value;
}

inline bool LessOrEqual(double a, double b) { return a <= b + tolerance(); }

// Strict counterpart: a < b - tau, the negation of LessOrEqual(b, a).
inline bool Less(double a, double b) { return !LessOrEqual(b, a); }

}  // namespace roughcms

#endif  // ROUGHCMS_TOLERANCE_HPP_
