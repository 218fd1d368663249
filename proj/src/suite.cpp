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

#include "dged/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <thread>

#include "dged/digraph.hpp"
#include "dged/entanglement.hpp"
#include "dged/io.hpp"
#include "dged/statevector.hpp"

namespace dged {

bool SuiteReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

std::string SuiteReport::summary() const {
  std::string out;
  char buf[160];
  for (const auto& c : criteria) {
    std::snprintf(buf, sizeof buf, "[%s] %2d %-28s worst=%.3e tol=%.1e",
                  c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.worst,
                  c.tolerance);
    out += buf;
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  return out;
}

namespace {

constexpr double kInvarianceTolerance = 1e-12;
constexpr double kPerVertexTolerance = 1e-10;
constexpr double kGateTolerance = 1e-15;
constexpr double kCommutationTolerance = 1e-14;
constexpr double kCrossValidationTolerance = 1e-14;
constexpr double kPauliTolerance = 1e-10;
constexpr std::array<double, 3> kEdgeProbabilities{0.2, 0.5, 0.8};
const Amplitude kPlus{std::numbers::sqrt2 / 2.0, 0.0};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on the open interval (0, pi).
double open_angle(std::mt19937_64& rng) {
  double u = 0.0;
  while (u == 0.0) u = uniform01(rng);
  return std::numbers::pi * u;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt,
                       std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct SuiteCase {
  DirectedGraph graph;
  GateParams gp;
  double p = 0.0;
};

SuiteCase make_case(const SuiteConfig& cfg, std::size_t index) {
  auto rng = stream(cfg.seed, 1, index);
  const std::size_t span = cfg.max_vertices - cfg.min_vertices + 1;
  const std::size_t m = cfg.min_vertices + static_cast<std::size_t>(rng() % span);
  const double p = kEdgeProbabilities[index % kEdgeProbabilities.size()];
  const std::uint64_t graph_seed = rng();
  const double theta = open_angle(rng);
  const double psi = open_angle(rng);
  return {generate(GraphKind::ErdosRenyi, m, {{"p", p}}, graph_seed),
          GateParams(theta, psi), p};
}

double sv_total(const DirectedGraph& g, const GateParams& gp) {
  return ed_total(build_graph_state(g, gp, kPlus, kPlus));
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

// Per-graph outcome of the checks that run on every suite graph.
struct GraphOutcome {
  double theorem_gap = 0.0;
  double per_vertex_gap = 0.0;
  double orientation_gap = 0.0;
  double relabel_gap = 0.0;
  double psi_spread = 0.0;
  double max_entanglement_gap = 0.0;
  bool max_entanglement_applicable = false;
  std::string error;
};

GraphOutcome check_graph(const SuiteConfig& cfg, std::size_t index) {
  GraphOutcome out;
  try {
    const SuiteCase c = make_case(cfg, index);
    const DirectedGraph& g = c.graph;
    const std::size_t m = g.num_vertices();

    const EDReport report = verify_graph(g, c.gp);
    const double cf =
        *report.total_closed_form + cfg.closed_form_perturbation;
    out.theorem_gap = std::abs(report.total_statevector - cf);

    const auto deg = degrees(g);
    for (std::size_t i = 0; i < m; ++i) {
      const double law = ed_vertex_closed_form(deg[i].total, c.gp.theta()) +
                         cfg.closed_form_perturbation;
      out.per_vertex_gap =
          std::max(out.per_vertex_gap, std::abs(report.per_vertex[i] - law));
    }

    auto rng = stream(cfg.seed, 2, index);
    if (index < cfg.transform_graphs) {
      std::vector<std::size_t> subset;
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (rng() & 1U) subset.push_back(e);
      }
      const DirectedGraph flipped = reverse_edges(g, subset);
      out.orientation_gap =
          std::abs(sv_total(flipped, c.gp) - report.total_statevector);

      std::vector<Vertex> perm(m);
      for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<Vertex>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      out.relabel_gap = std::abs(sv_total(permute(g, perm), c.gp) -
                                 report.total_statevector);
    }

    double lo = report.total_statevector;
    double hi = report.total_statevector;
    for (int k = 0; k < 10; ++k) {
      const double e = sv_total(g, GateParams(c.gp.theta(), open_angle(rng)));
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    out.psi_spread = hi - lo;

    const auto min_degree =
        std::min_element(deg.begin(), deg.end(), [](auto& a, auto& b) {
          return a.total < b.total;
        })->total;
    if (min_degree >= 1) {
      out.max_entanglement_applicable = true;
      out.max_entanglement_gap = std::abs(
          sv_total(g, GateParams(std::numbers::pi / 2.0, c.gp.psi())) - 1.0);
    }
  } catch (const std::exception& e) {
    out.error = "graph " + std::to_string(index) + ": " + e.what();
  }
  return out;
}

CriterionResult make_result(int id, std::string name, double worst,
                            double tolerance, std::string detail = {}) {
  return {id, std::move(name), worst < tolerance, worst, tolerance,
          std::move(detail)};
}

CriterionResult max_entanglement(const std::vector<GraphOutcome>& outcomes,
                                 const SuiteConfig& cfg) {
  double worst = 0.0;
  std::size_t applicable = 0;
  for (const auto& o : outcomes) {
    if (!o.max_entanglement_applicable) continue;
    ++applicable;
    worst = std::max(worst, o.max_entanglement_gap);
  }
  const GateParams half_pi(std::numbers::pi / 2.0, 0.3);
  for (std::size_t m = 3; m <= cfg.max_vertices; ++m) {
    for (GraphKind kind : {GraphKind::Cycle, GraphKind::StarOut,
                           GraphKind::StarIn, GraphKind::CompleteDag,
                           GraphKind::Path}) {
      ++applicable;
      worst = std::max(worst,
                       std::abs(sv_total(generate(kind, m, {}, 0), half_pi) - 1.0));
    }
  }
  bool empty_exact = true;
  for (std::size_t m = 1; m <= cfg.max_vertices; ++m) {
    empty_exact = empty_exact && sv_total(DirectedGraph(m, {}), half_pi) == 0.0;
  }
  auto r = make_result(5, "maximal_entanglement", worst, kInvarianceTolerance,
                       std::to_string(applicable) + " graphs; empty graph E=0 " +
                           (empty_exact ? "exact" : "NOT exact"));
  r.passed = r.passed && empty_exact;
  return r;
}

CriterionResult initial_state_optimality() {
  bool ok = true;
  std::string detail;
  for (double psi : {0.0, 0.4, std::numbers::pi / 2.0, 2.5}) {
    const SweepResult s =
        alpha_sweep(GateParams(std::numbers::pi / 2.0, psi), 101);
    const bool at_half =
        s.argmax_ed == 0.5 && s.argmax_entropy == 0.5 && s.argmin_hs == 0.5;
    bool monotone = true;
    for (std::size_t k = 1; k <= 50; ++k) {
      const auto& a = s.samples[k - 1];
      const auto& b = s.samples[k];
      monotone = monotone && b.ed > a.ed && b.entropy > a.entropy && b.hs < a.hs;
    }
    if (!at_half || !monotone) {
      ok = false;
      detail += "psi=" + io::format_double(psi) + " argmax_E=" +
                io::format_double(s.argmax_ed) + " ";
    }
  }
  CriterionResult r{6, "initial_state_optimality", ok, ok ? 0.0 : 1.0, 0.0,
                    ok ? "argmax E,S and argmin D_HS at t=0.5; monotone on [0,0.5]"
                       : detail};
  return r;
}

CriterionResult gate_correctness(const SuiteConfig& cfg) {
  const Matrix4 u = edge_gate_matrix(
      GateParams(std::numbers::pi / 2.0, std::numbers::pi / 2.0));
  double worst_cz = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double expected = r != c ? 0.0 : (r == 3 ? -1.0 : 1.0);
      worst_cz = std::max(worst_cz, std::abs(u[r][c] - expected));
    }
  }
  auto rng = stream(cfg.seed, 8, 0);
  double worst_comm = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double theta = 2.0 * std::numbers::pi * uniform01(rng) - std::numbers::pi;
    const double psi = 2.0 * std::numbers::pi * uniform01(rng) - std::numbers::pi;
    worst_comm = std::max(worst_comm, commutation_check(GateParams(theta, psi)));
  }
  CriterionResult r = make_result(
      8, "gate_correctness", std::max(worst_cz, worst_comm), kGateTolerance,
      "cz=" + io::format_double(worst_cz) +
          " commutator=" + io::format_double(worst_comm));
  r.passed = worst_cz < kGateTolerance && worst_comm < kCommutationTolerance;
  return r;
}

std::vector<Amplitude> random_amplitudes(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Amplitude> amps(std::size_t{1} << m);
  double n2 = 0.0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    n2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= scale;
  return amps;
}

CriterionResult kernel_cross_validation(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 9, 0);
  double worst = 0.0;
  std::size_t checks = 0;
  std::vector<const kernels::KernelTable*> tables{&kernels::scalar_table()};
  if (const auto* t = kernels::avx2_table()) tables.push_back(t);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(rng() % 7);
    const PureState state(m, random_amplitudes(m, rng));
    const Vertex a = static_cast<Vertex>(rng() % m);
    Vertex b = static_cast<Vertex>(rng() % (m - 1));
    if (b >= a) ++b;
    const GateParams gp(open_angle(rng) * 2.0 - std::numbers::pi,
                        open_angle(rng) * 2.0 - std::numbers::pi);
    const PureState dense =
        apply_two_qubit_dense(state, Edge{a, b}, edge_gate_matrix(gp));
    for (const auto* t : tables) {
      const PureState fast = apply_edge_gate(state, Edge{a, b}, gp, *t);
      for (std::size_t k = 0; k < dense.amplitudes().size(); ++k) {
        worst = std::max(worst, std::abs(fast[k] - dense[k]));
      }
      ++checks;
    }
  }
  std::string isas;
  for (const auto* t : tables) isas += std::string(kernels::to_string(t->isa)) + " ";
  return make_result(9, "kernel_cross_validation", worst,
                     kCrossValidationTolerance,
                     std::to_string(checks) + " comparisons, kernels: " + isas);
}

CriterionResult pauli_closed_forms(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 10, 0);
  double worst = 0.0;
  auto gap = [](const PauliVector& a, const PauliVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                     std::abs(a.z - b.z)});
  };
  for (std::size_t d = 1; d <= 6; ++d) {
    const GateParams gp(open_angle(rng), open_angle(rng));
    const double amp = std::pow(std::cos(gp.theta()), static_cast<double>(d));
    const double dd = static_cast<double>(d);

    // Centre with outgoing edges only: phase d * psi.
    const PureState out_star = build_graph_state(
        generate(GraphKind::StarOut, d + 1, {}, 0), gp, kPlus, kPlus);
    const PauliVector printed_out{amp * std::cos(dd * gp.psi()),
                                  -amp * std::sin(dd * gp.psi()), 0.0};
    worst = std::max(worst, gap(pauli_expectation(out_star, 0), printed_out));

    // Centre with incoming edges only: phase d * theta.
    const PureState in_star = build_graph_state(
        generate(GraphKind::StarIn, d + 1, {}, 0), gp, kPlus, kPlus);
    const PauliVector printed_in{amp * std::cos(dd * gp.theta()),
                                 -amp * std::sin(dd * gp.theta()), 0.0};
    worst = std::max(worst, gap(pauli_expectation(in_star, 0), printed_in));
  }

  // Mixed centres: outgoing edges to 1..d_out, incoming from the rest.
  double worst_mixed = 0.0;
  for (std::size_t d_out = 1; d_out <= 3; ++d_out) {
    for (std::size_t d_in = 1; d_in <= 3; ++d_in) {
      std::vector<Edge> edges;
      for (std::size_t j = 1; j <= d_out; ++j) {
        edges.push_back({0, static_cast<Vertex>(j)});
      }
      for (std::size_t j = d_out + 1; j <= d_out + d_in; ++j) {
        edges.push_back({static_cast<Vertex>(j), 0});
      }
      const GateParams gp(open_angle(rng), open_angle(rng));
      const PureState s = build_graph_state(
          make_graph(d_out + d_in + 1, std::move(edges)), gp, kPlus, kPlus);
      worst_mixed = std::max(
          worst_mixed,
          gap(pauli_expectation(s, 0), pauli_vector_closed_form(d_out, d_in, gp)));
    }
  }
  auto r = make_result(10, "pauli_vector_closed_forms",
                       std::max(worst, worst_mixed), kPauliTolerance,
                       "pure stars d<=6; mixed phase d_out*psi + d_in*theta gap=" +
                           io::format_double(worst_mixed));
  return r;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.min_vertices < 2 || cfg.max_vertices < cfg.min_vertices) {
    throw Error(ErrorCode::BadParams, "suite vertex range must satisfy 2 <= min <= max");
  }
  std::vector<GraphOutcome> outcomes(cfg.graphs);
  parallel_for(cfg.graphs, cfg.workers,
               [&](std::size_t i) { outcomes[i] = check_graph(cfg, i); });

  std::string errors;
  for (const auto& o : outcomes) {
    if (!o.error.empty()) errors += o.error + "; ";
  }

  auto worst_of = [&](double GraphOutcome::*field) {
    double w = 0.0;
    for (const auto& o : outcomes) w = std::max(w, o.*field);
    return w;
  };

  SuiteReport report;
  const std::size_t transformed = std::min(cfg.transform_graphs, cfg.graphs);
  report.criteria.push_back(make_result(
      1, "theorem_reproduction", worst_of(&GraphOutcome::theorem_gap),
      kTheoremTolerance, std::to_string(cfg.graphs) + " Erdos-Renyi graphs"));
  report.criteria.push_back(make_result(
      2, "orientation_insensitivity", worst_of(&GraphOutcome::orientation_gap),
      kInvarianceTolerance, std::to_string(transformed) + " graphs"));
  report.criteria.push_back(make_result(
      3, "relabeling_invariance", worst_of(&GraphOutcome::relabel_gap),
      kInvarianceTolerance, std::to_string(transformed) + " graphs"));
  report.criteria.push_back(make_result(
      4, "psi_invariance", worst_of(&GraphOutcome::psi_spread),
      kInvarianceTolerance, "10 psi values per graph"));
  report.criteria.push_back(max_entanglement(outcomes, cfg));
  report.criteria.push_back(initial_state_optimality());
  report.criteria.push_back(make_result(
      7, "per_vertex_law", worst_of(&GraphOutcome::per_vertex_gap),
      kPerVertexTolerance));
  report.criteria.push_back(gate_correctness(cfg));
  report.criteria.push_back(kernel_cross_validation(cfg));
  report.criteria.push_back(pauli_closed_forms(cfg));

  if (!errors.empty()) {
    for (auto& c : report.criteria) {
      if (c.id <= 5 || c.id == 7) {
        c.passed = false;
        c.detail += " errors: " + errors;
      }
    }
  }
  return report;
}

}  // namespace dged
