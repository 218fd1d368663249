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

#include <immintrin.h>

#include "dged/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace dged::kernels {

namespace {

// Two complex doubles per register, laid out [re0, im0, re1, im1].

inline __m256d load2(const Amplitude* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Amplitude* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

inline __m256d set2(Amplitude lane0, Amplitude lane1) {
  return _mm256_setr_pd(lane0.real(), lane0.imag(), lane1.real(),
                        lane1.imag());
}

// Lane-wise complex product. mul + addsub rather than fmaddsub so the
// rounding matches the scalar reference operation for operation.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a, b_re), _mm256_mul_pd(a_swap, b_im));
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void apply_controlled_diag(std::span<Amplitude> amps, unsigned control,
                           unsigned target, Amplitude phase_target0,
                           Amplitude phase_target1) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  auto lane_phase = [&](std::size_t idx) -> Amplitude {
    if ((idx & cmask) == 0) return {1.0, 0.0};
    return (idx & tmask) ? phase_target1 : phase_target0;
  };
  // Phase pair for a chunk {k, k+1} depends only on the control and target
  // bits of the even base k; precompute all four combinations.
  __m256d chunk_phase[2][2];
  bool chunk_identity[2][2];
  for (std::size_t bc = 0; bc < 2; ++bc) {
    for (std::size_t bt = 0; bt < 2; ++bt) {
      std::size_t base = 0;
      if (bc && control != 0) base |= cmask;
      if (bt && target != 0) base |= tmask;
      const Amplitude p0 = lane_phase(base);
      const Amplitude p1 = lane_phase(base | 1);
      chunk_phase[bc][bt] = set2(p0, p1);
      chunk_identity[bc][bt] = control != 0 && bc == 0;
    }
  }
  Amplitude* data = amps.data();
  const std::size_t n = amps.size();
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    const std::size_t bc = (k & cmask) ? 1 : 0;
    const std::size_t bt = (k & tmask) ? 1 : 0;
    if (chunk_identity[bc][bt]) continue;
    store2(data + k, cmul(load2(data + k), chunk_phase[bc][bt]));
  }
}

PauliSums pauli_sums(std::span<const Amplitude> amps, unsigned qubit) {
  const std::size_t n = amps.size();
  if (n < 4) return scalar_table().pauli_sums(amps, qubit);

  const Amplitude* data = amps.data();
  __m256d acc_z = _mm256_setzero_pd();
  __m256d acc_re = _mm256_setzero_pd();  // [r0*r1, i0*i1, ...]
  __m256d acc_im = _mm256_setzero_pd();  // [r0*i1, i0*r1, ...]

  auto accumulate = [&](__m256d lo, __m256d hi) {
    acc_z = _mm256_add_pd(acc_z, _mm256_sub_pd(_mm256_mul_pd(lo, lo),
                                               _mm256_mul_pd(hi, hi)));
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(lo, hi));
    acc_im = _mm256_add_pd(acc_im,
                           _mm256_mul_pd(lo, _mm256_permute_pd(hi, 0x5)));
  };

  if (qubit == 0) {
    for (std::size_t k = 0; k + 3 < n; k += 4) {
      const __m256d v0 = load2(data + k);
      const __m256d v1 = load2(data + k + 2);
      accumulate(_mm256_permute2f128_pd(v0, v1, 0x20),
                 _mm256_permute2f128_pd(v0, v1, 0x31));
    }
  } else {
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t j = 0; j < stride; j += 2) {
        accumulate(load2(data + base + j), load2(data + base + stride + j));
      }
    }
  }

  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, acc_im);
  PauliSums out;
  out.z = hsum(acc_z);
  out.cross = {hsum(acc_re),
               (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3])};
  return out;
}

double norm_squared(std::span<const Amplitude> amps) {
  const std::size_t n = amps.size();
  const Amplitude* data = amps.data();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 1 < n; k += 2) {
    const __m256d v = load2(data + k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double sum = hsum(acc);
  for (; k < n; ++k) sum += std::norm(data[k]);
  return sum;
}

constexpr KernelTable kAvx2{Isa::Avx2, &apply_controlled_diag, &pauli_sums,
                            &norm_squared};

}  // namespace

namespace detail {
const KernelTable& avx2_table_unchecked() noexcept { return kAvx2; }
}  // namespace detail

}  // namespace dged::kernels
