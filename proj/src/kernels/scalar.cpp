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

#include "dged/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace dged::kernels {

namespace {

// Written on real and imaginary parts; std::complex operator* carries
// NaN recovery branches that block vectorization and change nothing here.
inline Amplitude mul(Amplitude a, Amplitude b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.imag() * b.real() + a.real() * b.imag()};
}

void apply_controlled_diag(std::span<Amplitude> amps, unsigned control,
                           unsigned target, Amplitude phase_target0,
                           Amplitude phase_target1) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if ((k & cmask) == 0) continue;
    amps[k] = mul(amps[k], (k & tmask) ? phase_target1 : phase_target0);
  }
}

PauliSums pauli_sums(std::span<const Amplitude> amps, unsigned qubit) {
  const std::size_t mask = std::size_t{1} << qubit;
  PauliSums out;
  double cross_re = 0.0;
  double cross_im = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if (k & mask) continue;
    const Amplitude a0 = amps[k];
    const Amplitude a1 = amps[k | mask];
    out.z += std::norm(a0) - std::norm(a1);
    // conj(a0) * a1
    cross_re += a0.real() * a1.real() + a0.imag() * a1.imag();
    cross_im += a0.real() * a1.imag() - a0.imag() * a1.real();
  }
  out.cross = {cross_re, cross_im};
  return out;
}

double norm_squared(std::span<const Amplitude> amps) {
  double sum = 0.0;
  for (const Amplitude& a : amps) sum += a.real() * a.real() + a.imag() * a.imag();
  return sum;
}

constexpr KernelTable kScalar{Isa::Scalar, &apply_controlled_diag,
                              &pauli_sums, &norm_squared};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace dged::kernels
