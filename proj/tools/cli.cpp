//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "cli.hpp"

#include <relind/scenario.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace relind::cli {

namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FileError("cannot write '" + path + "'");
  f << text;
  if (!f) throw FileError("write failed for '" + path + "'");
}

void report_diagnostics(const ScenarioError& e, const std::string& source, std::ostream& err) {
  for (const auto& d : e.diagnostics()) err << source << ": " << d.to_string() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
            const Environment& env) {
  CLI::App app{"Relativistic indeterminacy scenario runner", "relind"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "relind 0.1.0");

  std::string input;
  std::string output;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  double tolerance = kGeomEpsilon;
  bool timings = false;
  std::string builtin;
  bool list = false;

  auto* run = app.add_subcommand("run", "Evaluate every query and print a report");
  run->add_option("file", input, "Scenario file, or - for standard input")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--tolerance", tolerance, "Geometric tolerance")->check(CLI::PositiveNumber);
  run->add_flag("--timings", timings, "Record per-query wall time");
  run->add_option("-o,--output", output, "Write the report to a file");

  auto* diagram = app.add_subcommand("diagram", "Render an SVG space-time diagram");
  diagram->add_option("file", input, "Scenario file, or - for standard input")->required();
  diagram->add_option("-o,--output", output, "SVG output path");
  diagram->add_option("--seed", seed, "Override the scenario seed");
  diagram->add_option("--tolerance", tolerance, "Geometric tolerance")->check(CLI::PositiveNumber);

  auto* materialize = app.add_subcommand("builtin", "Write a built-in scenario document");
  materialize->add_option("name", builtin, "Built-in name");
  materialize->add_option("-o,--output", output, "Output path");
  materialize->add_flag("--list", list, "List built-in names");

  auto* check = app.add_subcommand("check", "Validate a scenario file");
  check->add_option("file", input, "Scenario file, or - for standard input")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kRuntime;
  }

  try {
    if (materialize->parsed()) {
      if (list) {
        for (const auto& n : builtin_names()) out << n << "\n";
        return kOk;
      }
      if (builtin.empty()) {
        err << "relind builtin: a name is required (see --list)\n";
        return kRuntime;
      }
      emit(output, print_scenario(builtin_scenario(builtin)), out);
      return kOk;
    }

    const std::string source = input == "-" ? "<stdin>" : input;
    const std::string text = slurp(input, in);
    Scenario s;
    try {
      s = parse_scenario(text);
    } catch (const ScenarioError& e) {
      report_diagnostics(e, source, err);
      return kInvalid;
    }

    if (check->parsed()) {
      out << source << ": ok (" << s.queries.size() << " queries)\n";
      return kOk;
    }

    RunOptions options;
    options.seed = seed;
    options.tolerance = tolerance;
    options.timings = timings;
    const Report report = relind::run(s, options);
    if (diagram->parsed()) {
      emit(output, render_diagram(s, report), out);
      return kOk;
    }
    if (format == "structured") {
      emit(output, report.dump(2) + "\n", out);
    } else {
      emit(output, render_text(report, env.color && output.empty()), out);
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "relind: " << e.what() << "\n";
    return kRuntime;
  }
}

}  // namespace relind::cli
