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

// Dense-matrix reference computations. Nothing here calls the library's
// kernels: operators are built as explicit 2^M x 2^M matrices with Eigen.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() { Mat m(2, 2); m << 0, cd(0, -1), cd(0, 1), 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }

/// Embeds the single-qubit operator `op` on `qubit` of an M-qubit register
/// where qubit q is bit q of the basis index (so qubit 0 is the rightmost
/// Kronecker factor).
inline Mat embed(const Mat& op, std::size_t qubit, std::size_t m) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t q = m; q-- > 0;) {
    const Mat factor = q == qubit ? op : Mat::Identity(2, 2);
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

/// Pi0^(c) x I + Pi1^(c) x Ubar^(t) assembled from projectors.
inline Mat controlled_ubar(std::size_t control, std::size_t target,
                           std::size_t m, double theta, double psi) {
  Mat pi0(2, 2), pi1(2, 2), ubar(2, 2);
  pi0 << 1, 0, 0, 0;
  pi1 << 0, 0, 0, 1;
  const cd g = std::exp(cd(0, -psi));
  ubar << g * std::exp(cd(0, theta)), 0, 0, g * std::exp(cd(0, -theta));
  return embed(pi0, control, m) +
         embed(pi1, control, m) * embed(ubar, target, m);
}

inline Vec product_state(std::size_t m, cd a0, cd a1) {
  Vec phi(2);
  phi << a0, a1;
  Vec out = Vec::Ones(1);
  for (std::size_t q = 0; q < m; ++q) {
    out = Eigen::kroneckerProduct(phi, out).eval();
  }
  return out;
}

inline Vec graph_state(std::size_t m,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       double theta, double psi) {
  const double h = 1.0 / std::sqrt(2.0);
  Vec s = product_state(m, h, h);
  for (auto [a, b] : edges) s = controlled_ubar(a, b, m, theta, psi) * s;
  return s;
}

inline double expectation(const Vec& s, const Mat& op) {
  return (s.adjoint() * op * s)(0, 0).real();
}

/// Bloch vector by explicit <s| sigma^(q) |s>.
inline std::array<double, 3> bloch(const Vec& s, std::size_t qubit) {
  const std::size_t m = static_cast<std::size_t>(std::log2(s.size()) + 0.5);
  return {expectation(s, embed(pauli_x(), qubit, m)),
          expectation(s, embed(pauli_y(), qubit, m)),
          expectation(s, embed(pauli_z(), qubit, m))};
}

inline double ed(const Vec& s) {
  const std::size_t m = static_cast<std::size_t>(std::log2(s.size()) + 0.5);
  double sum = 0.0;
  for (std::size_t q = 0; q < m; ++q) {
    const auto r = bloch(s, q);
    sum += r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  }
  return 1.0 - sum / static_cast<double>(m);
}

/// Entropy from a numerical eigendecomposition of a 2x2 density matrix.
inline double entropy(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double l = solver.eigenvalues()[k];
    if (l > 1e-300) s -= l * std::log(l);
  }
  return s;
}

inline std::vector<cd> random_state(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  std::vector<cd> v(std::size_t{1} << m);
  double norm2 = 0.0;
  for (auto& a : v) {
    a = {n(rng), n(rng)};
    norm2 += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm2);
  return v;
}

inline Vec to_vec(const std::vector<cd>& v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace oracle
