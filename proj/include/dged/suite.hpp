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
#include <cstdint>
#include <string>
#include <vector>

namespace dged {

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::size_t graphs = 200;
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 12;
  /// Graphs used for the orientation and relabeling checks.
  std::size_t transform_graphs = 50;
  /// Added to every closed-form value the battery compares against. Zero in
  /// normal runs; nonzero only to prove the battery detects a wrong formula.
  double closed_form_perturbation = 0.0;
  /// 0 means std::thread::hardware_concurrency().
  std::size_t workers = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Worst observed deviation (or 0/1 for exact checks).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;

  bool passed() const;
  /// One "[PASS]"/"[FAIL]" line per criterion.
  std::string summary() const;
};

/// Seeded battery of property and oracle checks on random directed graphs:
/// theorem agreement, orientation/relabeling/psi invariance, maximal
/// entanglement, initial-state optimality, the per-vertex law, gate and
/// commutation checks, kernel cross-validation and Pauli-vector closed forms.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace dged
