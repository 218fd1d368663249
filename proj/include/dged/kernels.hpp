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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Inner loops over the 2^M amplitude array. Every kernel has a scalar
// reference implementation and, where the target supports it, an AVX2
// variant. `active()` picks the best variant the running CPU supports;
// the environment variable DIGRAPH_ED_KERNEL=scalar forces the reference.
//
// Amplitude index k encodes qubit q as bit q of k.

namespace dged::kernels {

using Amplitude = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Per-qubit sums from which the Bloch vector is formed:
///   z     = sum_k |a_k|^2 * (bit_q(k) ? -1 : +1)
///   cross = sum_{k : bit_q(k)=0} conj(a_k) * a_{k | 2^q}
struct PauliSums {
  double z = 0.0;
  Amplitude cross{0.0, 0.0};
};

struct KernelTable {
  Isa isa;

  /// Multiplies a_k by `phase_target0` when bit `control` is set and bit
  /// `target` clear, and by `phase_target1` when both are set.
  void (*apply_controlled_diag)(std::span<Amplitude> amps, unsigned control,
                                unsigned target, Amplitude phase_target0,
                                Amplitude phase_target1);

  PauliSums (*pauli_sums)(std::span<const Amplitude> amps, unsigned qubit);

  double (*norm_squared)(std::span<const Amplitude> amps);
};

const KernelTable& scalar_table() noexcept;

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

const KernelTable& table(Isa isa);

const KernelTable& active() noexcept;

bool available(Isa isa) noexcept;

}  // namespace dged::kernels
