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

#include <cstdlib>
#include <string>

#include "dged/error.hpp"
#include "dged/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace dged::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable* avx2_table() noexcept {
#if defined(DGED_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

bool available(Isa isa) noexcept {
  return isa == Isa::Scalar || (isa == Isa::Avx2 && avx2_table() != nullptr);
}

const KernelTable& table(Isa isa) {
  if (isa == Isa::Scalar) return scalar_table();
  if (const KernelTable* t = avx2_table()) return *t;
  throw Error(ErrorCode::CapabilityExceeded,
              "kernel variant " + std::string(to_string(isa)) +
                  " not available on this CPU/build");
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* forced = std::getenv("DIGRAPH_ED_KERNEL");
    if (forced != nullptr && std::string(forced) == "scalar") {
      return scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace dged::kernels
