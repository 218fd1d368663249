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

#include "dged/error.hpp"

namespace dged {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::AntiparallelPair: return "AntiparallelPair";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::CapabilityExceeded: return "CapabilityExceeded";
    case ErrorCode::PolicyViolation: return "PolicyViolation";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::KernelInvariant: return "KernelInvariant";
  }
  return "Unknown";
}

}  // namespace dged
