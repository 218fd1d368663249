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

#include "dged/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dged {

namespace {

double bloch_length_squared(const PureState& state, std::size_t qubit) {
  const double r2 = pauli_expectation(state, qubit).norm_squared();
  if (r2 > 1.0 + kNormTolerance) {
    throw Error(ErrorCode::KernelInvariant,
                "Bloch vector of qubit " + std::to_string(qubit) +
                    " has squared length " + std::to_string(r2));
  }
  return r2;
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double ed_per_vertex(const PureState& state, std::size_t qubit) {
  return clamp_unit(1.0 - bloch_length_squared(state, qubit));
}

double ed_total(const PureState& state) {
  const std::size_t m = state.num_qubits();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) sum += bloch_length_squared(state, i);
  return clamp_unit(1.0 - sum / static_cast<double>(m));
}

double ed_vertex_closed_form(std::size_t degree, double theta) {
  return 1.0 - std::pow(std::cos(theta), 2.0 * static_cast<double>(degree));
}

double ed_closed_form(const DirectedGraph& g, double theta) {
  validate(g, AntiparallelPolicy::Allow);
  if (has_antiparallel_pair(g)) {
    throw Error(ErrorCode::PolicyViolation,
                "closed form does not cover antiparallel edge pairs");
  }
  const double c = std::cos(theta);
  double sum = 0.0;
  for (const DegreeRecord& d : degrees(g)) {
    sum += std::pow(c, 2.0 * static_cast<double>(d.total));
  }
  return 1.0 - sum / static_cast<double>(g.num_vertices());
}

PauliVector pauli_vector_closed_form(std::size_t d_out, std::size_t d_in,
                                     const GateParams& gp) {
  const double amplitude = std::pow(std::cos(gp.theta()),
                                    static_cast<double>(d_out + d_in));
  const double phi = static_cast<double>(d_out) * gp.psi() +
                     static_cast<double>(d_in) * gp.theta();
  return {amplitude * std::cos(phi), -amplitude * std::sin(phi), 0.0};
}

double hs_distance(const DensityMatrix1Q& rho) {
  const double d00 = rho.rho00.real() - 0.5;
  const double d11 = rho.rho11.real() - 0.5;
  const double sum = d00 * d00 + d11 * d11 + std::norm(rho.rho01) +
                     std::norm(rho.rho10) + rho.rho00.imag() * rho.rho00.imag() +
                     rho.rho11.imag() * rho.rho11.imag();
  return std::sqrt(0.5 * sum);
}

double von_neumann_entropy(const DensityMatrix1Q& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda < -1e-10) {
      throw Error(ErrorCode::NegativeEigenvalue, std::to_string(lambda));
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return std::max(s, 0.0);
}

EDReport verify_graph(const DirectedGraph& g, const GateParams& gp,
                      AntiparallelPolicy policy, std::size_t max_qubits) {
  const Amplitude plus{std::numbers::sqrt2 / 2.0, 0.0};
  const PureState state =
      build_graph_state(g, gp, plus, plus, policy, max_qubits);

  EDReport report;
  report.gp = gp;
  report.policy = policy;
  report.graph_hash = graph_hash(g);
  const std::size_t m = g.num_vertices();
  report.per_vertex.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    report.per_vertex.push_back(ed_per_vertex(state, i));
  }
  report.total_statevector = ed_total(state);
  if (!has_antiparallel_pair(g)) {
    report.total_closed_form = ed_closed_form(g, gp.theta());
    report.discrepancy =
        std::abs(report.total_statevector - *report.total_closed_form);
  }
  return report;
}

SweepResult alpha_sweep(const GateParams& gp, std::size_t grid) {
  if (grid < 3) {
    throw Error(ErrorCode::BadGrid, "alpha sweep needs at least 3 points");
  }
  const DirectedGraph single_edge = make_graph(2, {{0, 1}});
  SweepResult out;
  out.axis = SweepAxis::Alpha;
  out.samples.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(grid - 1);
    const PureState state = build_graph_state(
        single_edge, gp, Amplitude{std::sqrt(t), 0.0},
        Amplitude{std::sqrt(1.0 - t), 0.0});
    const DensityMatrix1Q rho = reduced_density_1q(state, 0);
    out.samples.push_back(
        {t, ed_total(state), von_neumann_entropy(rho), hs_distance(rho)});
  }

  const auto& s = out.samples;
  auto best_ed = s.begin();
  auto best_entropy = s.begin();
  auto best_hs = s.begin();
  double min_ed = s.front().ed;
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it->ed > best_ed->ed) best_ed = it;
    if (it->entropy > best_entropy->entropy) best_entropy = it;
    if (it->hs < best_hs->hs) best_hs = it;
    min_ed = std::min(min_ed, it->ed);
  }
  out.argmax_ed = best_ed->parameter;
  out.argmax_entropy = best_entropy->parameter;
  out.argmin_hs = best_hs->parameter;
  out.degenerate = best_ed->ed - min_ed <= 1e-15;
  return out;
}

std::vector<ThetaSweepRow> theta_sweep(const DirectedGraph& g, double psi,
                                       std::size_t grid,
                                       AntiparallelPolicy policy,
                                       std::size_t max_qubits) {
  if (grid < 2) {
    throw Error(ErrorCode::BadGrid, "theta sweep needs at least 2 points");
  }
  validate(g, policy);
  const bool closed_form_allowed = !has_antiparallel_pair(g);
  const Amplitude plus{std::numbers::sqrt2 / 2.0, 0.0};
  std::vector<ThetaSweepRow> rows;
  rows.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double theta =
        std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid - 1);
    const PureState state = build_graph_state(g, GateParams(theta, psi), plus,
                                              plus, policy, max_qubits);
    ThetaSweepRow row;
    row.theta = theta;
    row.ed_statevector = ed_total(state);
    if (closed_form_allowed) {
      row.ed_closed_form = ed_closed_form(g, theta);
      row.discrepancy = std::abs(row.ed_statevector - *row.ed_closed_form);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dged
