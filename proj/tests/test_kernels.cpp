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

#include <doctest.h>

#include <random>

#include "dged/error.hpp"
#include "dged/kernels.hpp"
#include "oracles.hpp"

using namespace dged::kernels;

namespace {

std::vector<const KernelTable*> simd_tables() {
  std::vector<const KernelTable*> out;
  if (const auto* t = avx2_table()) out.push_back(t);
  return out;
}

double max_gap(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  double w = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) w = std::max(w, std::abs(a[k] - b[k]));
  return w;
}

}  // namespace

TEST_CASE("dispatch") {
  CHECK(scalar_table().isa == Isa::Scalar);
  CHECK(available(Isa::Scalar));
  CHECK(table(Isa::Scalar).isa == Isa::Scalar);
  if (available(Isa::Avx2)) {
    CHECK(table(Isa::Avx2).isa == Isa::Avx2);
  } else {
    CHECK_THROWS_AS(table(Isa::Avx2), dged::Error);
  }
  MESSAGE("active kernel: " << to_string(active().isa));
}

TEST_CASE("scalar controlled-diag reference against bit rule") {
  std::mt19937_64 rng(1);
  const std::size_t m = 4;
  auto amps = oracle::random_state(m, rng);
  const auto before = amps;
  const Amplitude p0 = std::polar(1.0, 0.3);
  const Amplitude p1 = std::polar(1.0, -1.1);
  scalar_table().apply_controlled_diag(amps, 2, 0, p0, p1);
  for (std::size_t k = 0; k < amps.size(); ++k) {
    Amplitude expect = before[k];
    if (k & 4U) expect *= (k & 1U) ? p1 : p0;
    CHECK(std::abs(amps[k] - expect) < 1e-15);
  }
}

TEST_CASE("SIMD kernels match the scalar reference") {
  const auto tables = simd_tables();
  if (tables.empty()) {
    MESSAGE("no SIMD variant available; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(77);
  for (const KernelTable* simd : tables) {
    CAPTURE(to_string(simd->isa));
    for (std::size_t m = 1; m <= 10; ++m) {
      const auto state = oracle::random_state(m, rng);

      // Norm.
      CHECK(std::abs(simd->norm_squared(state) -
                     scalar_table().norm_squared(state)) < 1e-14);

      for (unsigned q = 0; q < m; ++q) {
        const PauliSums a = scalar_table().pauli_sums(state, q);
        const PauliSums b = simd->pauli_sums(state, q);
        CHECK(std::abs(a.z - b.z) < 1e-14);
        CHECK(std::abs(a.cross - b.cross) < 1e-14);
      }

      for (unsigned c = 0; c < m; ++c) {
        for (unsigned t = 0; t < m; ++t) {
          if (c == t) continue;
          const Amplitude p0 = std::polar(1.0, 2.0 * static_cast<double>(rng() % 1000) / 1000.0);
          const Amplitude p1 = std::polar(1.0, -0.7 * static_cast<double>(rng() % 1000) / 1000.0);
          auto ref = state;
          auto fast = state;
          scalar_table().apply_controlled_diag(ref, c, t, p0, p1);
          simd->apply_controlled_diag(fast, c, t, p0, p1);
          CAPTURE(m);
          CAPTURE(c);
          CAPTURE(t);
          // Same operation sequence per element, so results are bitwise equal.
          CHECK(max_gap(ref, fast) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("SIMD kernels are deterministic across calls") {
  for (const KernelTable* simd : simd_tables()) {
    std::mt19937_64 rng(5);
    const auto state = oracle::random_state(9, rng);
    const PauliSums a = simd->pauli_sums(state, 3);
    const PauliSums b = simd->pauli_sums(state, 3);
    CHECK(a.z == b.z);
    CHECK(a.cross == b.cross);
  }
}
