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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dged/digraph.hpp"
#include "dged/entanglement.hpp"

namespace dged::io {

/// Parses {"M": int, "edges": [[a, b], ...], "labels_base": 0|1}. Labels are
/// 0-based unless labels_base is 1. The result is validated under `policy`.
/// Malformed input throws ParseError naming the offending field.
DirectedGraph parse_graph_json(
    std::string_view text,
    AntiparallelPolicy policy = AntiparallelPolicy::Reject);

DirectedGraph parse_graph_file(
    const std::filesystem::path& path,
    AntiparallelPolicy policy = AntiparallelPolicy::Reject);

/// Always 0-based, no labels_base key.
std::string graph_to_json(const DirectedGraph& g);

/// 17 significant digits ("%.17g").
std::string format_double(double v);

/// Keys: per_vertex, total_sv, total_cf, discrepancy, theta, psi,
/// graph_hash, policy. total_cf and discrepancy are null when the closed
/// form was refused.
std::string report_to_json(const EDReport& report);

/// Header `theta,E_sv,E_cf,discrepancy`; closed-form columns left empty when
/// refused.
std::string theta_sweep_csv(const std::vector<ThetaSweepRow>& rows);
std::string theta_sweep_json(const std::vector<ThetaSweepRow>& rows);

/// Header `t,E,S_nats,D_HS`.
std::string alpha_sweep_csv(const SweepResult& sweep);
std::string alpha_sweep_json(const SweepResult& sweep);

std::string_view to_string(AntiparallelPolicy policy) noexcept;

}  // namespace dged::io
