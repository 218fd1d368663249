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

#include "dged/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace dged {

double canonical_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (radians >= -std::numbers::pi && radians < std::numbers::pi) {
    return radians;
  }
  double wrapped =
      radians - two_pi * std::floor((radians + std::numbers::pi) / two_pi);
  if (wrapped >= std::numbers::pi) wrapped -= two_pi;
  return wrapped;
}

GateParams::GateParams(double theta, double psi) {
  if (!std::isfinite(theta) || !std::isfinite(psi)) {
    throw Error(ErrorCode::BadParams, "gate angles must be finite");
  }
  theta_ = canonical_angle(theta);
  psi_ = canonical_angle(psi);
}

Amplitude GateParams::phase_target0() const noexcept {
  return std::polar(1.0, theta_ - psi_);
}

Amplitude GateParams::phase_target1() const noexcept {
  return std::polar(1.0, -theta_ - psi_);
}

PureState::PureState(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits_ == 0 || num_qubits_ >= 63 ||
      amps_.size() != (std::size_t{1} << num_qubits_)) {
    throw Error(ErrorCode::BadParams,
                "amplitude count " + std::to_string(amps_.size()) +
                    " is not 2^" + std::to_string(num_qubits_));
  }
  const double n2 = kernels::active().norm_squared(amps_);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw Error(ErrorCode::NotNormalized,
                "squared norm " + std::to_string(n2));
  }
}

std::array<double, 2> DensityMatrix1Q::eigenvalues() const {
  const double mean = 0.5 * (rho00.real() + rho11.real());
  const double half_diff = 0.5 * (rho00.real() - rho11.real());
  const double radius = std::hypot(half_diff, std::abs(rho01));
  return {mean - radius, mean + radius};
}

namespace {

void check_capacity(std::size_t num_qubits, std::size_t max_qubits) {
  if (num_qubits == 0) {
    throw Error(ErrorCode::BadParams, "need at least one qubit");
  }
  if (num_qubits > max_qubits) {
    throw Error(ErrorCode::CapabilityExceeded,
                std::to_string(num_qubits) + " qubits exceeds cap of " +
                    std::to_string(max_qubits));
  }
}

void check_edge(const Edge& e, std::size_t num_qubits) {
  if (e.from >= num_qubits || e.to >= num_qubits) {
    throw Error(ErrorCode::IndexOutOfRange,
                "edge (" + std::to_string(e.from) + "," +
                    std::to_string(e.to) + ") on " +
                    std::to_string(num_qubits) + " qubits");
  }
  if (e.from == e.to) {
    throw Error(ErrorCode::SelfLoop, std::to_string(e.from));
  }
}

void check_qubit(std::size_t qubit, std::size_t num_qubits) {
  if (qubit >= num_qubits) {
    throw Error(ErrorCode::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " of " +
                    std::to_string(num_qubits));
  }
}

}  // namespace

PureState init_product_state(std::size_t num_qubits, Amplitude alpha0,
                             Amplitude alpha1, std::size_t max_qubits) {
  check_capacity(num_qubits, max_qubits);
  const double n2 = std::norm(alpha0) + std::norm(alpha1);
  if (!(std::abs(n2 - 1.0) <= 1e-12)) {
    throw Error(ErrorCode::NotNormalized,
                "|alpha0|^2 + |alpha1|^2 = " + std::to_string(n2));
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Amplitude> amps(dim);
  // Powers alpha0^(M-w) alpha1^w by Hamming weight w, so every index with
  // the same weight gets a bit-identical amplitude.
  std::vector<Amplitude> by_weight(num_qubits + 1);
  for (std::size_t w = 0; w <= num_qubits; ++w) {
    Amplitude a{1.0, 0.0};
    for (std::size_t q = 0; q < num_qubits; ++q) a *= (q < w) ? alpha1 : alpha0;
    by_weight[w] = a;
  }
  for (std::size_t k = 0; k < dim; ++k) {
    amps[k] = by_weight[static_cast<std::size_t>(std::popcount(k))];
  }
  return PureState(num_qubits, std::move(amps));
}

PureState apply_edge_gate(PureState state, Edge edge, const GateParams& gp,
                          const kernels::KernelTable& k) {
  const std::size_t m = state.num_qubits();
  check_edge(edge, m);
  std::vector<Amplitude> amps = std::move(state).release();
  k.apply_controlled_diag(amps, edge.from, edge.to, gp.phase_target0(),
                          gp.phase_target1());
  return PureState(m, std::move(amps));
}

Matrix4 edge_gate_matrix(const GateParams& gp) {
  Matrix4 u{};
  u[0][0] = 1.0;
  u[1][1] = 1.0;
  u[2][2] = gp.phase_target0();
  u[3][3] = gp.phase_target1();
  return u;
}

PureState apply_two_qubit_dense(PureState state, Edge edge, const Matrix4& u) {
  const std::size_t m = state.num_qubits();
  check_edge(edge, m);
  const std::size_t cmask = std::size_t{1} << edge.from;
  const std::size_t tmask = std::size_t{1} << edge.to;
  std::vector<Amplitude> amps = std::move(state).release();
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if (base & (cmask | tmask)) continue;
    const std::array<std::size_t, 4> idx{base, base | tmask, base | cmask,
                                         base | cmask | tmask};
    std::array<Amplitude, 4> in{};
    for (std::size_t r = 0; r < 4; ++r) in[r] = amps[idx[r]];
    for (std::size_t r = 0; r < 4; ++r) {
      Amplitude acc{0.0, 0.0};
      for (std::size_t c = 0; c < 4; ++c) acc += u[r][c] * in[c];
      amps[idx[r]] = acc;
    }
  }
  return PureState(m, std::move(amps));
}

PureState build_graph_state(const DirectedGraph& g, const GateParams& gp,
                            Amplitude alpha0, Amplitude alpha1,
                            AntiparallelPolicy policy, std::size_t max_qubits,
                            const kernels::KernelTable& k) {
  validate(g, policy);
  check_capacity(g.num_vertices(), max_qubits);
  const std::size_t m = g.num_vertices();
  std::vector<Amplitude> amps =
      init_product_state(m, alpha0, alpha1, max_qubits).release();
  const Amplitude p0 = gp.phase_target0();
  const Amplitude p1 = gp.phase_target1();
  for (const Edge& e : g.edges()) {
    k.apply_controlled_diag(amps, e.from, e.to, p0, p1);
  }
  const double n2 = k.norm_squared(amps);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw Error(ErrorCode::KernelInvariant,
                "norm drifted to " + std::to_string(n2));
  }
  return PureState(m, std::move(amps));
}

PauliVector pauli_expectation(const PureState& state, std::size_t qubit,
                              const kernels::KernelTable& k) {
  check_qubit(qubit, state.num_qubits());
  const kernels::PauliSums s =
      k.pauli_sums(state.amplitudes(), static_cast<unsigned>(qubit));
  return {2.0 * s.cross.real(), 2.0 * s.cross.imag(), s.z};
}

DensityMatrix1Q reduced_density_1q(const PureState& state, std::size_t qubit) {
  check_qubit(qubit, state.num_qubits());
  const std::size_t mask = std::size_t{1} << qubit;
  const auto amps = state.amplitudes();
  double p0 = 0.0;
  double p1 = 0.0;
  Amplitude off{0.0, 0.0};
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if (k & mask) continue;
    const Amplitude a0 = amps[k];
    const Amplitude a1 = amps[k | mask];
    p0 += std::norm(a0);
    p1 += std::norm(a1);
    off += a0 * std::conj(a1);
  }
  return {p0, off, std::conj(off), p1};
}

DensityMatrix1Q density_from_bloch(const PauliVector& r) {
  return {0.5 * (1.0 + r.z), Amplitude{0.5 * r.x, -0.5 * r.y},
          Amplitude{0.5 * r.x, 0.5 * r.y}, 0.5 * (1.0 - r.z)};
}

namespace {

using Matrix8 = std::array<std::array<Amplitude, 8>, 8>;

Matrix8 embed_three_qubit(const Matrix4& u, unsigned control, unsigned target) {
  Matrix8 out{};
  for (std::size_t row = 0; row < 8; ++row) {
    for (std::size_t col = 0; col < 8; ++col) {
      // Spectator qubit must agree between row and column.
      const std::size_t spectator_mask =
          7U & ~((1U << control) | (1U << target));
      if ((row & spectator_mask) != (col & spectator_mask)) continue;
      const std::size_t r = 2 * ((row >> control) & 1U) + ((row >> target) & 1U);
      const std::size_t c = 2 * ((col >> control) & 1U) + ((col >> target) & 1U);
      out[row][col] = u[r][c];
    }
  }
  return out;
}

Matrix8 multiply(const Matrix8& a, const Matrix8& b) {
  Matrix8 out{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t k = 0; k < 8; ++k) {
      for (std::size_t j = 0; j < 8; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

double max_commutator_entry(const Matrix8& a, const Matrix8& b) {
  const Matrix8 ab = multiply(a, b);
  const Matrix8 ba = multiply(b, a);
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      worst = std::max(worst, std::abs(ab[i][j] - ba[i][j]));
    }
  }
  return worst;
}

}  // namespace

double commutation_check(const GateParams& gp) {
  const Matrix4 u = edge_gate_matrix(gp);
  const Matrix8 u01 = embed_three_qubit(u, 0, 1);
  const Matrix8 u12 = embed_three_qubit(u, 1, 2);
  const Matrix8 u02 = embed_three_qubit(u, 0, 2);
  return std::max({max_commutator_entry(u01, u12),
                   max_commutator_entry(u12, u02),
                   max_commutator_entry(u01, u02)});
}

std::string amplitudes_to_json(const PureState& state) {
  std::string out = "[";
  char buf[64];
  bool first = true;
  for (const Amplitude& a : state.amplitudes()) {
    std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", first ? "" : ",",
                  a.real(), a.imag());
    out += buf;
    first = false;
  }
  out += "]";
  return out;
}

}  // namespace dged
