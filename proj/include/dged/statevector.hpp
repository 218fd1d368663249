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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dged/digraph.hpp"
#include "dged/kernels.hpp"

namespace dged {

using Amplitude = std::complex<double>;

/// Default ceiling on qubit count: 2^24 amplitudes = 256 MiB.
inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Tolerance on |<psi|psi> - 1| before a state is considered corrupt.
inline constexpr double kNormTolerance = 1e-9;

/// Angles of the single-qubit diagonal unitary
///   Ubar = exp(-i psi) * diag(exp(i theta), exp(-i theta))
/// applied to the target of a controlled edge gate. Both angles are wrapped
/// into [-pi, pi) on construction.
class GateParams {
 public:
  GateParams() = default;
  GateParams(double theta, double psi);

  double theta() const noexcept { return theta_; }
  double psi() const noexcept { return psi_; }

  /// Ubar diagonal entry for target bit 0: exp(i (theta - psi)).
  Amplitude phase_target0() const noexcept;
  /// Ubar diagonal entry for target bit 1: exp(-i (theta + psi)).
  Amplitude phase_target1() const noexcept;

 private:
  double theta_ = 0.0;
  double psi_ = 0.0;
};

/// Wraps an angle into [-pi, pi).
double canonical_angle(double radians);

/// Normalized pure state on M qubits. Immutable; operations return new
/// states. Qubit q is bit q of the amplitude index.
class PureState {
 public:
  /// Throws NotNormalized if the norm deviates from 1 by more than
  /// `kNormTolerance`, and BadParams if the length is not 2^M.
  PureState(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::size_t k) const { return amps_[k]; }

  /// Releases the amplitude buffer for in-place kernels.
  std::vector<Amplitude> release() && { return std::move(amps_); }

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

struct PauliVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_squared() const noexcept { return x * x + y * y + z * z; }
};

struct DensityMatrix1Q {
  Amplitude rho00, rho01, rho10, rho11;

  /// Eigenvalues in ascending order (Hermitian 2x2 closed form).
  std::array<double, 2> eigenvalues() const;
};

using Matrix4 = std::array<std::array<Amplitude, 4>, 4>;

/// Every amplitude is the product over qubits of alpha0 (bit clear) or
/// alpha1 (bit set). Throws NotNormalized if |alpha0|^2 + |alpha1|^2 differs
/// from 1 by more than 1e-12, CapabilityExceeded above `max_qubits`.
PureState init_product_state(std::size_t num_qubits, Amplitude alpha0,
                             Amplitude alpha1,
                             std::size_t max_qubits = kDefaultMaxQubits);

/// Controlled-Ubar with `edge.from` as control and `edge.to` as target.
/// Diagonal, so this is a per-amplitude phase multiply.
PureState apply_edge_gate(PureState state, Edge edge, const GateParams& gp,
                          const kernels::KernelTable& k = kernels::active());

/// 4x4 matrix of the edge gate in the basis |c t>, row/column index
/// 2*c + t for control bit c and target bit t.
Matrix4 edge_gate_matrix(const GateParams& gp);

/// Generic dense two-qubit path: applies `u` (basis as in
/// `edge_gate_matrix`) to qubits (control, target). Used to cross-check the
/// diagonal kernel.
PureState apply_two_qubit_dense(PureState state, Edge edge, const Matrix4& u);

/// Product state (alpha0|0> + alpha1|1>)^{M} followed by one edge gate per
/// edge of `g`. Gates are diagonal, so edge order does not matter.
PureState build_graph_state(
    const DirectedGraph& g, const GateParams& gp, Amplitude alpha0,
    Amplitude alpha1, AntiparallelPolicy policy = AntiparallelPolicy::Reject,
    std::size_t max_qubits = kDefaultMaxQubits,
    const kernels::KernelTable& k = kernels::active());

/// (<sigma_x>, <sigma_y>, <sigma_z>) on `qubit`, with sigma_y|0> = i|1>.
PauliVector pauli_expectation(const PureState& state, std::size_t qubit,
                              const kernels::KernelTable& k = kernels::active());

/// Partial trace over every qubit except `qubit`, summed directly from the
/// amplitudes.
DensityMatrix1Q reduced_density_1q(const PureState& state, std::size_t qubit);

/// (I + x sigma_x + y sigma_y + z sigma_z) / 2.
DensityMatrix1Q density_from_bloch(const PauliVector& r);

/// Largest entry magnitude over the pairwise commutators of U_01, U_12 and
/// U_02 built as dense 8x8 three-qubit operators.
double commutation_check(const GateParams& gp);

/// Amplitudes as a JSON array of [re, im] pairs in index order.
std::string amplitudes_to_json(const PureState& state);

}  // namespace dged
