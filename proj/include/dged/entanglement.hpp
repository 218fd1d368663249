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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dged/digraph.hpp"
#include "dged/statevector.hpp"

namespace dged {

/// Maximum |E_sv - E_cf| accepted by `verify_graph`. Looser than machine
/// epsilon because the statevector path sums 2^M terms.
inline constexpr double kTheoremTolerance = 1e-10;

/// Single-qubit ED contribution 1 - |<sigma^(i)>|^2, clamped to [0, 1].
double ed_per_vertex(const PureState& state, std::size_t qubit);

/// Entanglement distance per qubit: 1 - (1/M) sum_i |<sigma^(i)>|^2.
double ed_total(const PureState& state);

/// Closed form of the ED of a directed graph state:
///   1 - (1/M) sum_i cos(theta)^(2 d(i))
/// with d(i) the total degree. Independent of psi and of orientation.
/// Throws PolicyViolation for graphs containing antiparallel pairs, which
/// the closed form does not cover.
double ed_closed_form(const DirectedGraph& g, double theta);

/// 1 - cos(theta)^(2 d).
double ed_vertex_closed_form(std::size_t degree, double theta);

/// Bloch vector of a vertex with `d_out` outgoing and `d_in` incoming edges
/// (no antiparallel pairs), starting from |+>^M:
///   cos(theta)^(d_out + d_in) * (cos phi, -sin phi, 0),
///   phi = d_out * psi + d_in * theta.
PauliVector pauli_vector_closed_form(std::size_t d_out, std::size_t d_in,
                                     const GateParams& gp);

/// sqrt(tr[(rho - I/2)^2] / 2).
double hs_distance(const DensityMatrix1Q& rho);

/// -tr[rho ln rho] in nats. Throws NegativeEigenvalue if an eigenvalue is
/// below -1e-10.
double von_neumann_entropy(const DensityMatrix1Q& rho);

struct EDReport {
  std::vector<double> per_vertex;
  double total_statevector = 0.0;
  std::optional<double> total_closed_form;
  std::optional<double> discrepancy;
  std::string graph_hash;
  GateParams gp;
  AntiparallelPolicy policy = AntiparallelPolicy::Reject;
  std::string seed_info;
};

/// Builds |G> from |+>^M, computes the ED per vertex and in total, and
/// compares against `ed_closed_form` when the graph has no antiparallel
/// pairs.
EDReport verify_graph(const DirectedGraph& g, const GateParams& gp,
                      AntiparallelPolicy policy = AntiparallelPolicy::Reject,
                      std::size_t max_qubits = kDefaultMaxQubits);

enum class SweepAxis { Theta, Psi, Alpha };

struct SweepSample {
  double parameter = 0.0;
  double ed = 0.0;
  double entropy = 0.0;
  double hs = 0.0;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::Alpha;
  std::vector<SweepSample> samples;
  double argmax_ed = 0.0;
  double argmax_entropy = 0.0;
  double argmin_hs = 0.0;
  /// All ED samples equal: no entanglement generated, extrema meaningless.
  bool degenerate = false;
};

/// Two-qubit single-edge graph (0 -> 1) from the product state with
/// alpha0 = sqrt(t), alpha1 = sqrt(1 - t), t on a uniform grid over [0, 1].
/// Records the total ED plus entropy and HS distance of qubit 0. Extrema are
/// the first grid point attaining them. Throws BadGrid for grid < 3.
SweepResult alpha_sweep(const GateParams& gp, std::size_t grid);

struct ThetaSweepRow {
  double theta = 0.0;
  double ed_statevector = 0.0;
  std::optional<double> ed_closed_form;
  std::optional<double> discrepancy;
};

/// theta on a uniform grid over [0, pi] with `grid` points (>= 2).
std::vector<ThetaSweepRow> theta_sweep(
    const DirectedGraph& g, double psi, std::size_t grid,
    AntiparallelPolicy policy = AntiparallelPolicy::Reject,
    std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace dged
