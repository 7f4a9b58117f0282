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

// roughcms: validate controlled metric type spaces, compute rough limit sets
// of eventually-periodic sequences and property-check the rough-convergence
// theorems.
//
//   roughcms validate <space>
//   roughcms analyze  <space> --seq <literal> [--r <list>]
//   roughcms limset   <space> --seq <literal> --r <value>
//   roughcms theorems <space> --seq <literal> [--r-grid <list>]
//   roughcms fuzz     [--trials N] [--max-points N] [--seed S] ...
//   roughcms export   <space>
//
// <space> is a file path, an inline YAML document, or parity-example:N.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "roughcms/commands.hpp"

int main(int argc, char** argv) {
  using roughcms::AnalysisRequest;
  using roughcms::Operation;
  using roughcms::OutputFormat;

  CLI::App app{"Rough convergence in controlled metric type spaces"};
  app.require_subcommand(1);

  AnalysisRequest req;
  std::string r_list;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText}, {"yaml", OutputFormat::kYaml}};

  auto add_space = [&](CLI::App* cmd) {
    cmd->add_option("space", req.space_source,
                    "space file, inline {...} document, or parity-example:N")
        ->required();
    cmd->add_option("--format", req.format, "text or yaml")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* validate = app.add_subcommand("validate", "check the axioms");
  add_space(validate);

  auto* analyze = app.add_subcommand(
      "analyze", "limsup table, convergence, cluster points, LIM^r");
  add_space(analyze);
  analyze->add_option("--seq", req.sequence, "{prefix: [...], cycle: [...]}")
      ->required();
  analyze->add_option("--r", r_list, "comma-separated roughness degrees");

  auto* limset = app.add_subcommand("limset", "rough limit set LIM^r");
  add_space(limset);
  limset->add_option("--seq", req.sequence, "{prefix: [...], cycle: [...]}")
      ->required();
  limset->add_option("--r", r_list, "roughness degree")->required();

  auto* theorems = app.add_subcommand("theorems", "run every theorem check");
  add_space(theorems);
  theorems->add_option("--seq", req.sequence, "{prefix: [...], cycle: [...]}")
      ->required();
  theorems->add_option("--r-grid", r_list, "comma-separated roughness degrees");

  auto* fuzz = app.add_subcommand("fuzz", "randomized theorem checks");
  fuzz->add_option("--trials", req.fuzz.trials)->check(CLI::PositiveNumber);
  fuzz->add_option("--max-points", req.fuzz.max_points)
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--max-prefix", req.fuzz.max_prefix);
  fuzz->add_option("--max-cycle", req.fuzz.max_cycle)
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", req.fuzz.seed);
  fuzz->add_option("--r-grid", r_list, "fixed grid instead of the default");
  fuzz->add_option("--threads", req.fuzz.threads, "0 = all cores");

  auto* export_cmd =
      app.add_subcommand("export", "write the space as a YAML document");
  add_space(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : roughcms::kExitUsage;
  }

  if (validate->parsed()) req.operation = Operation::kValidate;
  if (analyze->parsed()) req.operation = Operation::kAnalyze;
  if (limset->parsed()) req.operation = Operation::kLimset;
  if (theorems->parsed()) req.operation = Operation::kTheorems;
  if (fuzz->parsed()) req.operation = Operation::kFuzz;
  if (export_cmd->parsed()) req.operation = Operation::kExport;

  if (!r_list.empty()) {
    try {
      req.r_values = roughcms::ParseRealList(r_list);
    } catch (const roughcms::ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return roughcms::kExitUsage;
    }
    if (req.operation == Operation::kFuzz) req.fuzz.r_grid = req.r_values;
  }
  return roughcms::RunRequest(req, std::cout, std::cerr);
}
