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

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using relind::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("relind_cli_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("builtin piped into run") {
  const auto doc = invoke({"builtin", "fig2"});
  REQUIRE(doc.code == 0);
  const auto rep = invoke({"run", "-", "--format", "structured"}, doc.out);
  REQUIRE(rep.code == 0);
  const auto j = nlohmann::json::parse(rep.out);
  CHECK(j.at("queries")[0].at("result").at("time").get<double>() == doctest::Approx(0.5));
  const auto text = invoke({"run", "-"}, doc.out);
  CHECK(text.code == 0);
  CHECK(text.out.find("1:00:30 pm") != std::string::npos);
  CHECK(text.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("check") {
  const auto good = invoke({"check", "-"}, invoke({"builtin", "prbox"}).out);
  CHECK(good.code == 0);
  const auto bad = invoke({"check", "-"}, "{ \"c\": ");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line") != std::string::npos);
  const auto dup = invoke({"check", "-"}, R"({"schema": 1, "c": 1,
    "variables": [{"name": "a", "at": {"t": 0, "x": 0}}, {"name": "a", "at": {"t": 1, "x": 0}}]})");
  CHECK(dup.code == 1);
  CHECK(dup.err.find("duplicate variable determination") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical") {
  const auto path = scratch("fig1.json");
  REQUIRE(invoke({"builtin", "fig1", "-o", path.string()}).code == 0);
  const auto a = invoke({"run", path.string(), "--seed", "7", "--format", "structured"});
  const auto b = invoke({"run", path.string(), "--seed", "7", "--format", "structured"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).at("seed") == 7);
  std::filesystem::remove(path);
}

TEST_CASE("diagram output") {
  const auto in = scratch("fig2.json");
  const auto svg = scratch("fig2.svg");
  REQUIRE(invoke({"builtin", "fig2", "-o", in.string()}).code == 0);
  REQUIRE(invoke({"diagram", in.string(), "-o", svg.string()}).code == 0);
  std::ifstream f(svg);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().rfind("<?xml", 0) == 0);
  CHECK(ss.str() == invoke({"diagram", in.string()}).out);
  std::filesystem::remove(in);
  std::filesystem::remove(svg);
}

TEST_CASE("usage and runtime errors") {
  CHECK(invoke({}).code != 0);
  CHECK(invoke({"frobnicate"}).code != 0);
  CHECK(invoke({"run"}).code != 0);
  CHECK(invoke({"run", "-", "--format", "xml"}, "{}").code != 0);
  const auto missing = invoke({"run", "/nonexistent/relind.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(invoke({"builtin", "fig9"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  const auto list = invoke({"builtin", "--list"});
  CHECK(list.out.find("singlet") != std::string::npos);
}

}
