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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dged::cli {

enum class Command { Gen, Ed, Verify, SweepTheta, SweepAlpha, Suite };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCapability = 64;

inline constexpr std::size_t kDefaultCliMaxQubits = 20;

struct RunConfig {
  Command command = Command::Ed;
  std::optional<std::string> graph_path;
  std::optional<std::string> kind;
  std::optional<std::size_t> num_vertices;
  std::optional<double> p;
  std::uint64_t seed = 0;
  /// Radians; `--deg` is converted while parsing.
  std::optional<double> theta;
  double psi = 0.0;
  std::optional<std::size_t> grid;
  std::optional<std::string> out_path;
  Format format = Format::Csv;
  bool format_given = false;
  bool allow_antiparallel = false;
  std::size_t max_qubits = kDefaultCliMaxQubits;

  // suite
  std::size_t suite_graphs = 200;
  std::size_t suite_max_vertices = 12;
  double closed_form_perturbation = 0.0;
};

/// Executes one command. Artifacts go to `out_path` when set, else `out`;
/// diagnostics go to `err`. Returns 0, 1 (invariant violation), 2 (bad
/// input) or 64 (qubit cap exceeded).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. The qubit cap defaults to 20,
/// then DIGRAPH_ED_MAX_QUBITS, then --max-qubits.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dged::cli
