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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "dged/digraph.hpp"
#include "dged/entanglement.hpp"
#include "dged/io.hpp"
#include "dged/statevector.hpp"
#include "dged/suite.hpp"

namespace dged::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool needs_graph(Command c) {
  return c == Command::Ed || c == Command::Verify || c == Command::SweepTheta;
}

AntiparallelPolicy policy_of(const RunConfig& cfg) {
  return cfg.allow_antiparallel ? AntiparallelPolicy::Allow
                                : AntiparallelPolicy::Reject;
}

void check_cap(std::size_t m, const RunConfig& cfg) {
  if (m > cfg.max_qubits) {
    throw Error(ErrorCode::CapabilityExceeded,
                "M = " + std::to_string(m) + " exceeds the qubit cap of " +
                    std::to_string(cfg.max_qubits));
  }
}

DirectedGraph load_graph(const RunConfig& cfg) {
  const bool from_file = cfg.graph_path.has_value();
  const bool from_generator = cfg.kind.has_value() || cfg.num_vertices.has_value();
  if (from_file == from_generator) {
    throw UsageError(
        "supply exactly one of --graph or generator parameters (--kind, --M)");
  }
  if (from_file) {
    DirectedGraph g = io::parse_graph_file(*cfg.graph_path, policy_of(cfg));
    check_cap(g.num_vertices(), cfg);
    return g;
  }
  if (!cfg.kind || !cfg.num_vertices) {
    throw UsageError("generator needs both --kind and --M");
  }
  check_cap(*cfg.num_vertices, cfg);
  GeneratorParams params;
  if (cfg.p) params["p"] = *cfg.p;
  return generate(parse_graph_kind(*cfg.kind), *cfg.num_vertices, params,
                  cfg.seed, policy_of(cfg));
}

double required_theta(const RunConfig& cfg) {
  if (!cfg.theta) throw UsageError("--theta is required");
  return *cfg.theta;
}

std::string ed_table(const DirectedGraph& g, const RunConfig& cfg) {
  const Amplitude plus{std::numbers::sqrt2 / 2.0, 0.0};
  const PureState state =
      build_graph_state(g, GateParams(required_theta(cfg), cfg.psi), plus,
                        plus, policy_of(cfg), cfg.max_qubits);
  std::vector<double> per_vertex;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    per_vertex.push_back(ed_per_vertex(state, i));
  }
  const double total = ed_total(state);
  std::string text;
  if (cfg.format == Format::Json) {
    text = "{\"per_vertex\":[";
    for (std::size_t i = 0; i < per_vertex.size(); ++i) {
      if (i) text += ",";
      text += io::format_double(per_vertex[i]);
    }
    text += "],\"total\":" + io::format_double(total) + "}\n";
  } else {
    text = "vertex,E\n";
    for (std::size_t i = 0; i < per_vertex.size(); ++i) {
      text += std::to_string(i) + "," + io::format_double(per_vertex[i]) + "\n";
    }
    text += "total," + io::format_double(total) + "\n";
  }
  return text;
}

std::string verify_csv(const EDReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? io::format_double(*v) : std::string();
  };
  return "total_sv,total_cf,discrepancy,theta,psi,graph_hash,policy\n" +
         io::format_double(r.total_statevector) + "," +
         opt(r.total_closed_form) + "," + opt(r.discrepancy) + "," +
         io::format_double(r.gp.theta()) + "," + io::format_double(r.gp.psi()) +
         "," + r.graph_hash + "," + std::string(io::to_string(r.policy)) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + *cfg.out_path);
  file << text;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Gen: {
      if (cfg.graph_path) throw UsageError("gen takes generator parameters only");
      emit(cfg, io::graph_to_json(load_graph(cfg)), out);
      return kExitOk;
    }
    case Command::Ed: {
      emit(cfg, ed_table(load_graph(cfg), cfg), out);
      return kExitOk;
    }
    case Command::Verify: {
      const DirectedGraph g = load_graph(cfg);
      EDReport report = verify_graph(g, GateParams(required_theta(cfg), cfg.psi),
                                     policy_of(cfg), cfg.max_qubits);
      report.seed_info = "seed=" + std::to_string(cfg.seed);
      const bool json = !cfg.format_given || cfg.format == Format::Json;
      emit(cfg, json ? io::report_to_json(report) : verify_csv(report), out);
      if (report.discrepancy && *report.discrepancy >= kTheoremTolerance) {
        err << "discrepancy " << io::format_double(*report.discrepancy)
            << " exceeds " << kTheoremTolerance << "\n";
        return kExitViolation;
      }
      return kExitOk;
    }
    case Command::SweepTheta: {
      const DirectedGraph g = load_graph(cfg);
      const auto rows = theta_sweep(g, cfg.psi, cfg.grid.value_or(101),
                                    policy_of(cfg), cfg.max_qubits);
      emit(cfg,
           cfg.format == Format::Json ? io::theta_sweep_json(rows)
                                      : io::theta_sweep_csv(rows),
           out);
      for (const auto& row : rows) {
        if (row.discrepancy && *row.discrepancy >= kTheoremTolerance) {
          err << "discrepancy at theta=" << io::format_double(row.theta)
              << "\n";
          return kExitViolation;
        }
      }
      return kExitOk;
    }
    case Command::SweepAlpha: {
      if (cfg.graph_path || cfg.kind) {
        throw UsageError("sweep-alpha always uses the two-qubit single-edge graph");
      }
      const SweepResult s = alpha_sweep(
          GateParams(cfg.theta.value_or(std::numbers::pi / 2.0), cfg.psi),
          cfg.grid.value_or(101));
      emit(cfg,
           cfg.format == Format::Json ? io::alpha_sweep_json(s)
                                      : io::alpha_sweep_csv(s),
           out);
      if (s.degenerate) err << "degenerate sweep: no entanglement generated\n";
      return kExitOk;
    }
    case Command::Suite: {
      check_cap(cfg.suite_max_vertices, cfg);
      SuiteConfig sc;
      sc.seed = cfg.seed;
      sc.graphs = cfg.suite_graphs;
      sc.max_vertices = cfg.suite_max_vertices;
      sc.closed_form_perturbation = cfg.closed_form_perturbation;
      const SuiteReport report = run_suite(sc);
      emit(cfg, report.summary(), out);
      return report.passed() ? kExitOk : kExitViolation;
    }
  }
  return kExitBadInput;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::CapabilityExceeded: return kExitCapability;
      case ErrorCode::KernelInvariant: return kExitViolation;
      default: return kExitBadInput;
    }
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("DIGRAPH_ED_MAX_QUBITS")) {
    try {
      cfg.max_qubits = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: DIGRAPH_ED_MAX_QUBITS must be a positive integer\n";
      return kExitBadInput;
    }
  }

  CLI::App app{"Entanglement distance of directed graph states"};
  app.require_subcommand(1);

  bool degrees = false;
  std::string format_text;
  std::optional<std::size_t> max_qubits_flag;

  auto graph_options = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph JSON file");
    sub->add_option("--kind", cfg.kind,
                    "path|cycle|star_out|star_in|complete_dag|erdos_renyi");
    sub->add_option("--M", cfg.num_vertices, "number of vertices");
    sub->add_option("--p", cfg.p, "edge probability for erdos_renyi");
    sub->add_flag("--allow-antiparallel", cfg.allow_antiparallel,
                  "admit (a,b) together with (b,a); closed form is refused");
  };
  auto common_options = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", format_text, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--max-qubits", max_qubits_flag, "qubit cap");
  };
  auto angle_options = [&](CLI::App* sub) {
    sub->add_option("--theta", cfg.theta, "gate angle theta (radians)");
    sub->add_option("--psi", cfg.psi, "gate phase psi (radians)");
    sub->add_flag("--deg", degrees, "read --theta/--psi in degrees");
  };

  auto* gen = app.add_subcommand("gen", "generate a graph and write its JSON");
  graph_options(gen);
  common_options(gen);

  auto* ed = app.add_subcommand("ed", "per-vertex and total ED of a graph state");
  graph_options(ed);
  common_options(ed);
  angle_options(ed);

  auto* verify = app.add_subcommand(
      "verify", "statevector ED against the degree closed form");
  graph_options(verify);
  common_options(verify);
  angle_options(verify);

  auto* sweep_theta =
      app.add_subcommand("sweep-theta", "ED over theta in [0, pi]");
  graph_options(sweep_theta);
  common_options(sweep_theta);
  angle_options(sweep_theta);
  sweep_theta->add_option("--grid", cfg.grid, "number of grid points");

  auto* sweep_alpha = app.add_subcommand(
      "sweep-alpha", "E, S and D_HS over the initial state of one edge");
  common_options(sweep_alpha);
  angle_options(sweep_alpha);
  sweep_alpha->add_option("--grid", cfg.grid, "number of grid points");

  auto* suite = app.add_subcommand("suite", "run the seeded property battery");
  common_options(suite);
  suite->add_option("--graphs", cfg.suite_graphs, "number of random graphs");
  suite->add_option("--max-M", cfg.suite_max_vertices, "largest graph size");
  suite->add_option("--inject-cf-perturbation", cfg.closed_form_perturbation,
                    "test fixture: offset added to closed-form values")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (gen->parsed()) cfg.command = Command::Gen;
  if (ed->parsed()) cfg.command = Command::Ed;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (sweep_theta->parsed()) cfg.command = Command::SweepTheta;
  if (sweep_alpha->parsed()) cfg.command = Command::SweepAlpha;
  if (suite->parsed()) cfg.command = Command::Suite;

  if (max_qubits_flag) cfg.max_qubits = *max_qubits_flag;
  if (!format_text.empty()) {
    cfg.format = format_text == "json" ? Format::Json : Format::Csv;
    cfg.format_given = true;
  }
  if (degrees) {
    constexpr double to_rad = std::numbers::pi / 180.0;
    if (cfg.theta) *cfg.theta *= to_rad;
    cfg.psi *= to_rad;
  }
  return run(cfg, out, err);
}

}  // namespace dged::cli
