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

// Text formats. Everything is YAML: spaces, sequence literals and reports.
//
// Space document:
//
//   points: [1, 2, 3]
//   dist:
//     - [0, 1/sqrt(2), 1]
//     - [1/sqrt(2), 0, 0.5]
//     - [1, 0.5, 0]
//   alpha:
//     - [1, 1.5, 1]
//     - ...
//
// Rows follow the order of `points`. A real is either a decimal number or an
// arithmetic expression over numbers with + - * / parentheses and sqrt(),
// e.g. "1/sqrt(2)". Reals are written back with 12 significant digits.
//
// Sequence literal: {prefix: [7], cycle: [2, 3]}, or a bare list [2, 3]
// meaning an empty prefix.

#ifndef ROUGHCMS_IO_HPP_
#define ROUGHCMS_IO_HPP_

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "roughcms/errors.hpp"
#include "roughcms/fuzz.hpp"
#include "roughcms/sequence.hpp"
#include "roughcms/space.hpp"
#include "roughcms/theorems.hpp"

namespace roughcms {

inline std::string FormatReal(double v) {
  if (std::isnan(v)) return ".nan";
  if (std::isinf(v)) return v > 0 ? ".inf" : "-.inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace internal {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  double Parse() {
    const double v = Sum();
    Skip();
    if (pos_ != text_.size()) Error("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void Error(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void Skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    Skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double Sum() {
    double v = Product();
    for (;;) {
      if (Accept('+')) {
        v += Product();
      } else if (Accept('-')) {
        v -= Product();
      } else {
        return v;
      }
    }
  }

  double Product() {
    double v = Unary();
    for (;;) {
      if (Accept('*')) {
        v *= Unary();
      } else if (Accept('/')) {
        v /= Unary();
      } else {
        return v;
      }
    }
  }

  double Unary() {
    if (Accept('-')) return -Unary();
    if (Accept('+')) return Unary();
    return Primary();
  }

  double Primary() {
    Skip();
    if (Accept('(')) {
      const double v = Sum();
      if (!Accept(')')) Error("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!Accept('(')) Error("expected '(' after sqrt");
      const double v = Sum();
      if (!Accept(')')) Error("expected ')'");
      return std::sqrt(v);
    }
    for (std::string_view inf : {".inf", "inf"}) {
      if (text_.substr(pos_, inf.size()) == inf) {
        pos_ += inf.size();
        return std::numeric_limits<double>::infinity();
      }
    }
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) Error("expected a number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int LineOf(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : 0;
}

inline double ReadReal(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) {
    throw ParseError("expected a real number", LineOf(node), field);
  }
  try {
    return ExpressionParser(node.Scalar()).Parse();
  } catch (const ParseError& e) {
    throw ParseError(e.what(), LineOf(node), field);
  }
}

inline std::vector<std::string> ReadLabels(const YAML::Node& node,
                                           const std::string& field) {
  if (!node.IsSequence()) {
    throw ParseError("expected a list of point ids", LineOf(node), field);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].IsScalar()) {
      throw ParseError("point ids must be scalars", LineOf(node[i]),
                       field + "[" + std::to_string(i) + "]");
    }
    out.push_back(node[i].Scalar());
  }
  return out;
}

inline Table ReadTable(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) {
    throw ParseError("expected a list of rows", LineOf(node), field);
  }
  Table table;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    const YAML::Node row = node[i];
    if (!row.IsSequence()) {
      throw ParseError("expected a row list", LineOf(row), row_field);
    }
    std::vector<double> values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      values.push_back(
          ReadReal(row[j], row_field + "[" + std::to_string(j) + "]"));
    }
    table.push_back(std::move(values));
  }
  return table;
}

inline YAML::Node LoadYaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : 0);
  }
}

inline bool IsPlainLabel(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
        c != '-' && c != '.') {
      return false;
    }
  }
  return s.front() != '-' && s.front() != '.';
}

inline std::string QuoteLabel(std::string_view s) {
  if (IsPlainLabel(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <typename Range, typename Fn>
std::string FlowList(const Range& items, Fn&& fn) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += fn(item);
  }
  return out + "]";
}

inline std::string FlowLabels(const std::vector<std::string>& labels) {
  return FlowList(labels, [](const std::string& s) { return QuoteLabel(s); });
}

inline std::string FlowReals(const std::vector<double>& values) {
  return FlowList(values, [](double v) { return FormatReal(v); });
}

}  // namespace internal

// Parses "1/sqrt(2)", "0.5", "2*sqrt(3)+1" and so on.
inline double ParseReal(std::string_view text) {
  return internal::ExpressionParser(text).Parse();
}

// Parses a space document. Throws ParseError for syntax problems and
// ShapeError for missing or mis-sized tables; axioms are not checked.
inline SpaceSpec LoadSpace(const std::string& text) {
  const YAML::Node doc = internal::LoadYaml(text);
  if (!doc.IsMap()) {
    throw ParseError("space document must be a mapping",
                     internal::LineOf(doc));
  }
  for (const auto& kv : doc) {
    const std::string key = kv.first.as<std::string>();
    if (key != "points" && key != "dist" && key != "alpha" && key != "name") {
      throw ParseError("unknown key", internal::LineOf(kv.first), key);
    }
  }
  for (const char* key : {"points", "dist", "alpha"}) {
    if (!doc[key]) throw ShapeError(std::string("missing '") + key + "'");
  }
  SpaceSpec spec;
  spec.points = internal::ReadLabels(doc["points"], "points");
  spec.dist = internal::ReadTable(doc["dist"], "dist");
  spec.alpha = internal::ReadTable(doc["alpha"], "alpha");
  CheckShape(spec);
  return spec;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpaceSpec LoadSpaceFile(const std::string& path) {
  return LoadSpace(ReadFile(path));
}

// Builtin spaces: "parity-example:N" (alias "paper-example:N") is
// ParityExampleSpec(N). Returns false if `source` names no builtin.
inline bool ParseBuiltin(std::string_view source, SpaceSpec& out) {
  for (std::string_view prefix :
       {"parity-example:", "parity-example ", "paper-example:",
        "paper-example "}) {
    if (source.substr(0, prefix.size()) != prefix) continue;
    const std::string arg(source.substr(prefix.size()));
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw ParseError("builtin size must be an integer", 0,
                       std::string(source));
    }
    if (used != arg.size()) {
      throw ParseError("builtin size must be an integer", 0,
                       std::string(source));
    }
    out = ParityExampleSpec(n);
    return true;
  }
  return false;
}

// A builtin name, an inline document starting with '{', or a file path.
inline SpaceSpec ResolveSpaceSource(const std::string& source) {
  SpaceSpec spec;
  if (ParseBuiltin(source, spec)) return spec;
  if (!source.empty() && source.front() == '{') return LoadSpace(source);
  return LoadSpaceFile(source);
}

inline std::string EmitSpace(const SpaceSpec& spec) {
  std::string out = "points: " + internal::FlowLabels(spec.points) + "\n";
  for (const auto& [name, table] :
       {std::pair<const char*, const Table*>{"dist", &spec.dist},
        {"alpha", &spec.alpha}}) {
    out += std::string(name) + ":\n";
    for (const auto& row : *table) {
      out += "  - " + internal::FlowReals(row) + "\n";
    }
  }
  return out;
}

// Single-line flow form of a space, used inside reports.
inline std::string EmitSpaceFlow(const SpaceSpec& spec) {
  auto rows = [](const Table& t) {
    return internal::FlowList(
        t, [](const std::vector<double>& r) { return internal::FlowReals(r); });
  };
  return "{points: " + internal::FlowLabels(spec.points) +
         ", dist: " + rows(spec.dist) + ", alpha: " + rows(spec.alpha) + "}";
}

inline EpSequence ParseSequence(const std::string& text) {
  const YAML::Node doc = internal::LoadYaml(text);
  if (doc.IsSequence()) {
    return EpSequence({}, internal::ReadLabels(doc, "cycle"));
  }
  if (!doc.IsMap()) {
    throw ParseError("sequence must be {prefix: [...], cycle: [...]} or a list",
                     internal::LineOf(doc));
  }
  for (const auto& kv : doc) {
    const std::string key = kv.first.as<std::string>();
    if (key != "prefix" && key != "cycle") {
      throw ParseError("unknown key", internal::LineOf(kv.first), key);
    }
  }
  if (!doc["cycle"]) throw ParseError("missing 'cycle'", 0, "cycle");
  std::vector<std::string> prefix;
  if (doc["prefix"]) prefix = internal::ReadLabels(doc["prefix"], "prefix");
  std::vector<std::string> cycle = internal::ReadLabels(doc["cycle"], "cycle");
  if (cycle.empty()) throw ParseError("cycle must be nonempty", 0, "cycle");
  return EpSequence(std::move(prefix), std::move(cycle));
}

inline std::string EmitSequence(const EpSequence& seq) {
  return "{prefix: " + internal::FlowLabels(seq.prefix()) +
         ", cycle: " + internal::FlowLabels(seq.cycle()) + "}";
}

// Comma-separated reals, each a ParseReal expression.
inline std::vector<double> ParseRealList(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    out.push_back(ParseReal(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// One YAML list item (two-space indented) describing a report.
inline std::string EmitReport(const TheoremReport& report,
                              bool include_space = false) {
  std::string out;
  out += "  - theorem: " + std::string(TheoremName(report.id)) + "\n";
  out += "    verdict: " + std::string(VerdictName(report.verdict)) + "\n";
  out += "    r: " + FormatReal(report.params.r) + "\n";
  if (!report.note.empty()) out += "    note: \"" + report.note + "\"\n";
  if (report.bound_ratio) {
    out += "    bound_ratio: " + FormatReal(*report.bound_ratio) + "\n";
  }
  if (report.id == TheoremId::kSubsequence) {
    out += "    offset: " + std::to_string(report.params.offset) + "\n";
    out += "    stride: " + std::to_string(report.params.stride) + "\n";
  }
  if (report.witness) {
    out += "    witness:\n";
    out += "      detail: \"" + report.witness->detail + "\"\n";
    out += "      points: " + internal::FlowLabels(report.witness->points) +
           "\n";
    out += "      values: " + internal::FlowReals(report.witness->values) +
           "\n";
  }
  if (include_space) {
    out += "    sequence: " + EmitSequence(report.params.sequence) + "\n";
    if (report.params.other) {
      out += "    other: " + EmitSequence(*report.params.other) + "\n";
    }
    out += "    space: " + EmitSpaceFlow(report.params.space.spec()) + "\n";
  }
  return out;
}

// Deterministic summary: a function of the config only (the thread count is
// deliberately left out).
inline std::string EmitFuzzSummary(const FuzzSummary& s) {
  std::string out;
  const FuzzConfig& c = s.config;
  out += "config:\n";
  out += "  seed: " + std::to_string(c.seed) + "\n";
  out += "  trials: " + std::to_string(c.trials) + "\n";
  out += "  max_points: " + std::to_string(c.max_points) + "\n";
  out += "  max_prefix: " + std::to_string(c.max_prefix) + "\n";
  out += "  max_cycle: " + std::to_string(c.max_cycle) + "\n";
  out += "  r_grid: " +
         (c.r_grid.empty() ? std::string("default")
                           : internal::FlowReals(c.r_grid)) +
         "\n";
  out += "reports: " + std::to_string(s.reports) + "\n";
  out += "theorems:\n";
  for (TheoremId id : kAllTheorems) {
    const VerdictTally& t = s.tallies[static_cast<std::size_t>(id)];
    out += "  " + std::string(TheoremName(id)) +
           ": {holds: " + std::to_string(t.holds) +
           ", vacuous: " + std::to_string(t.vacuous) +
           ", not_applicable: " + std::to_string(t.not_applicable) +
           ", violated: " + std::to_string(t.violated) + "}\n";
  }
  if (s.max_bound_ratio) {
    out += "max_diam_over_2rk: {ratio: " +
           FormatReal(s.max_bound_ratio->ratio) +
           ", trial: " + std::to_string(s.max_bound_ratio->trial) +
           ", r: " + FormatReal(s.max_bound_ratio->r) + "}\n";
  } else {
    out += "max_diam_over_2rk: null\n";
  }
  out += "failures: " + std::to_string(s.failures) + "\n";
  out += "witnesses:";
  if (s.witnesses.empty()) {
    out += " []\n";
  } else {
    out += "\n";
    for (const FuzzFailure& f : s.witnesses) {
      std::string item = EmitReport(f.report, /*include_space=*/true);
      // Splice the trial index in after the list marker.
      item.insert(item.find('\n') + 1,
                  "    trial: " + std::to_string(f.trial) + "\n");
      out += item;
    }
  }
  out += "status: " + std::string(s.ok() ? "ok" : "failed") + "\n";
  return out;
}

}  // namespace roughcms

#endif  // ROUGHCMS_IO_HPP_
