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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dged/error.hpp"

namespace dged {

using Vertex = std::uint32_t;

struct Edge {
  Vertex from;
  Vertex to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Whether both (a,b) and (b,a) may appear in the same graph.
enum class AntiparallelPolicy { Reject, Allow };

struct DegreeRecord {
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
  std::size_t total = 0;

  friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

/// Directed graph on vertices {0, ..., M-1} with an ordered edge list.
///
/// A `DirectedGraph` is a plain value; construction does not validate. Use
/// `validate` (or `make_graph`) to enforce the invariants: no self-loops, no
/// duplicate edges, endpoints in range and, under the default policy, no
/// antiparallel pairs.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t num_vertices, std::vector<Edge> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {}

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Throws `Error` with the first violated invariant.
void validate(const DirectedGraph& g,
              AntiparallelPolicy policy = AntiparallelPolicy::Reject);

/// Constructs and validates in one step.
DirectedGraph make_graph(std::size_t num_vertices, std::vector<Edge> edges,
                         AntiparallelPolicy policy = AntiparallelPolicy::Reject);

bool has_antiparallel_pair(const DirectedGraph& g);

std::vector<DegreeRecord> degrees(const DirectedGraph& g);

/// Sorted multiset of total degrees.
std::vector<std::size_t> degree_multiset(const DirectedGraph& g);

enum class GraphKind { Path, Cycle, StarOut, StarIn, CompleteDag, ErdosRenyi };

std::string_view to_string(GraphKind kind) noexcept;
GraphKind parse_graph_kind(std::string_view name);

using GeneratorParams = std::map<std::string, double, std::less<>>;

/// Deterministic in (kind, M, params, seed). Only `erdos_renyi` consumes the
/// seed; it reads the edge probability from `params["p"]`.
DirectedGraph generate(GraphKind kind, std::size_t num_vertices,
                       const GeneratorParams& params, std::uint64_t seed,
                       AntiparallelPolicy policy = AntiparallelPolicy::Reject);

/// Maps every edge (a,b) to (perm[a], perm[b]).
DirectedGraph permute(const DirectedGraph& g, std::span<const Vertex> perm);

/// Flips the edges at the given indices. The result is validated under
/// `policy`.
DirectedGraph reverse_edges(
    const DirectedGraph& g, std::span<const std::size_t> edge_indices,
    AntiparallelPolicy policy = AntiparallelPolicy::Reject);

/// 64-bit FNV-1a digest over M and the ordered edge list, as 16 hex digits.
std::string graph_hash(const DirectedGraph& g);

}  // namespace dged
