// Copyright 2026 The digraph-ed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "dged/io.hpp"
#include "dged/suite.hpp"
#include <json.hpp>

using namespace dged;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "digraph-ed");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("dged_test_" + name);
  std::ofstream(p) << body;
  return p;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("parse_graph_json") {
  const auto g = io::parse_graph_json(R"({"M": 3, "edges": [[1, 2], [2, 3]], "labels_base": 1})");
  CHECK(g == DirectedGraph(3, {{0, 1}, {1, 2}}));
  CHECK(io::parse_graph_json(R"({"M": 2, "edges": [[0, 1]]})") == DirectedGraph(2, {{0, 1}}));

  const auto code_of = [](std::string_view text) {
    try {
      io::parse_graph_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::KernelInvariant;
  };
  CHECK(code_of(R"({"M": 2, "edges": [[0, 0]]})") == ErrorCode::SelfLoop);
  CHECK(code_of(R"({"M": 2, "edges": [[0, 1], [1, 0]]})") == ErrorCode::AntiparallelPair);
  CHECK(code_of(R"({"M": 2, "edges": [[0, 5]]})") == ErrorCode::IndexOutOfRange);
  CHECK(code_of(R"({"edges": []})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"M": 2, "edges": [[0, 1]], "labels_base": 1})") == ErrorCode::ParseError);
  CHECK(code_of("not json") == ErrorCode::ParseError);

  try {
    io::parse_graph_json(R"({"M": 2, "edges": [[0, "x"]]})");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("edges") != std::string::npos);
  }

  CHECK(io::parse_graph_json(R"({"M": 2, "edges": [[0, 1], [1, 0]]})",
                             AntiparallelPolicy::Allow)
            .num_edges() == 2);
}

TEST_CASE("graph JSON round trip") {
  const auto g = generate(GraphKind::ErdosRenyi, 7, {{"p", 0.4}}, 11);
  CHECK(io::parse_graph_json(io::graph_to_json(g)) == g);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, 0.0}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("cli: input selection and exit codes") {
  CHECK(run_cli({"ed", "--theta", "0.5"}).code == cli::kExitBadInput);
  const auto g = temp_file("pair.json", R"({"M": 2, "edges": [[0, 1]]})");
  CHECK(run_cli({"ed", "--graph", g.string(), "--kind", "path", "--M", "2", "--theta", "1"}).code ==
        cli::kExitBadInput);
  CHECK(run_cli({"ed", "--graph", g.string()}).code == cli::kExitBadInput);
  CHECK(run_cli({"ed", "--graph", g.string(), "--theta", "1"}).code == cli::kExitOk);

  const auto loop = temp_file("loop.json", R"({"M": 2, "edges": [[1, 1]]})");
  const auto r = run_cli({"ed", "--graph", loop.string(), "--theta", "1"});
  CHECK(r.code == cli::kExitBadInput);
  CHECK(r.err.find("SelfLoop") != std::string::npos);

  CHECK(run_cli({"ed", "--graph", "/nonexistent/graph.json", "--theta", "1"}).code ==
        cli::kExitBadInput);
  CHECK(run_cli({"gen", "--kind", "wheel", "--M", "4"}).code == cli::kExitBadInput);
  CHECK(run_cli({"ed", "--kind", "cycle", "--M", "2", "--theta", "1"}).code == cli::kExitBadInput);
  CHECK(run_cli({"ed", "--kind", "path", "--M", "3", "--theta", "nan"}).code == cli::kExitBadInput);
}

TEST_CASE("cli: qubit cap") {
  CHECK(run_cli({"ed", "--kind", "path", "--M", "21", "--theta", "1"}).code == cli::kExitCapability);
  CHECK(run_cli({"ed", "--kind", "path", "--M", "6", "--theta", "1", "--max-qubits", "5"}).code ==
        cli::kExitCapability);
  CHECK(run_cli({"gen", "--kind", "path", "--M", "30"}).code == cli::kExitCapability);
  CHECK(run_cli({"gen", "--kind", "path", "--M", "30", "--max-qubits", "30"}).code == cli::kExitOk);

  ::setenv("DIGRAPH_ED_MAX_QUBITS", "4", 1);
  CHECK(run_cli({"ed", "--kind", "path", "--M", "5", "--theta", "1"}).code == cli::kExitCapability);
  CHECK(run_cli({"ed", "--kind", "path", "--M", "5", "--theta", "1", "--max-qubits", "5"}).code ==
        cli::kExitOk);
  ::unsetenv("DIGRAPH_ED_MAX_QUBITS");
}

TEST_CASE("cli: outputs") {
  SUBCASE("gen emits parseable JSON") {
    const auto r = run_cli({"gen", "--kind", "erdos_renyi", "--M", "6", "--p", "0.5", "--seed", "3"});
    REQUIRE(r.code == 0);
    CHECK(io::parse_graph_json(r.out) ==
          generate(GraphKind::ErdosRenyi, 6, {{"p", 0.5}}, 3));
  }
  SUBCASE("ed csv and json") {
    const auto csv = run_cli({"ed", "--kind", "star_out", "--M", "3", "--theta", "45", "--deg"});
    REQUIRE(csv.code == 0);
    CHECK(first_line(csv.out) == "vertex,E");
    CHECK(csv.out.find("total,0.58333333333333") != std::string::npos);
    const auto js = run_cli({"ed", "--kind", "star_out", "--M", "3", "--theta", "45", "--deg", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["per_vertex"].size() == 3);
    CHECK(doc["total"].get<double>() == doctest::Approx(0.5833333333333333));
  }
  SUBCASE("verify json keys") {
    const auto r = run_cli({"verify", "--kind", "cycle", "--M", "4", "--theta", "0.7", "--psi", "0.3"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"per_vertex", "total_sv", "total_cf", "discrepancy", "theta", "psi",
                            "graph_hash", "policy"}) {
      CHECK(doc.contains(key));
    }
    CHECK(doc["policy"] == "reject_antiparallel");
    CHECK(doc["discrepancy"].get<double>() < 1e-10);
  }
  SUBCASE("verify with antiparallel edges reports no closed form") {
    const auto g = temp_file("anti.json", R"({"M": 3, "edges": [[0, 1], [1, 0], [1, 2]]})");
    CHECK(run_cli({"verify", "--graph", g.string(), "--theta", "0.4"}).code == cli::kExitBadInput);
    const auto r = run_cli({"verify", "--graph", g.string(), "--theta", "0.4", "--allow-antiparallel"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["total_cf"].is_null());
    CHECK(doc["policy"] == "allow_antiparallel");
  }
  SUBCASE("sweep headers") {
    const auto t = run_cli({"sweep-theta", "--kind", "cycle", "--M", "3", "--grid", "5"});
    REQUIRE(t.code == 0);
    CHECK(first_line(t.out) == "theta,E_sv,E_cf,discrepancy");
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
    const auto a = run_cli({"sweep-alpha", "--grid", "11"});
    REQUIRE(a.code == 0);
    CHECK(first_line(a.out) == "t,E,S_nats,D_HS");
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 12);
    CHECK(run_cli({"sweep-alpha", "--grid", "2"}).code == cli::kExitBadInput);
  }
  SUBCASE("repeated runs are byte-identical") {
    const std::vector<std::string> args{"sweep-theta", "--kind", "erdos_renyi", "--M", "7",
                                        "--p", "0.4", "--seed", "9", "--psi", "0.2",
                                        "--grid", "17", "--format", "json"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  SUBCASE("--out writes the artifact to a file") {
    const auto p = std::filesystem::temp_directory_path() / "dged_test_out.csv";
    std::filesystem::remove(p);
    const auto r = run_cli({"sweep-alpha", "--grid", "5", "--out", p.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(p);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,E,S_nats,D_HS");
  }
}

TEST_CASE("suite detects a wrong closed form") {
  SuiteConfig cfg;
  cfg.graphs = 20;
  cfg.max_vertices = 6;
  cfg.transform_graphs = 5;
  CHECK(run_suite(cfg).passed());
  cfg.closed_form_perturbation = 1e-6;
  const auto bad = run_suite(cfg);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.criteria.at(0).passed);

  const auto r = run_cli({"suite", "--graphs", "10", "--max-M", "5", "--inject-cf-perturbation", "1e-6"});
  CHECK(r.code == cli::kExitViolation);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
}
