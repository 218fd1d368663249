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

#include "dged/digraph.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

namespace dged {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

}  // namespace

void validate(const DirectedGraph& g, AntiparallelPolicy policy) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::BadParams, "graph must have at least one vertex");
  }
  std::set<Edge> seen;
  for (const Edge& e : g.edges()) {
    if (e.from >= g.num_vertices() || e.to >= g.num_vertices()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + edge_text(e) + " outside [0, " +
                      std::to_string(g.num_vertices()) + ")");
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::SelfLoop, std::to_string(e.from));
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge, edge_text(e));
    }
  }
  if (policy == AntiparallelPolicy::Reject) {
    for (const Edge& e : g.edges()) {
      if (e.from < e.to && seen.contains(Edge{e.to, e.from})) {
        throw Error(ErrorCode::AntiparallelPair,
                    "(" + std::to_string(e.from) + "," +
                        std::to_string(e.to) + ")");
      }
    }
  }
}

DirectedGraph make_graph(std::size_t num_vertices, std::vector<Edge> edges,
                         AntiparallelPolicy policy) {
  DirectedGraph g(num_vertices, std::move(edges));
  validate(g, policy);
  return g;
}

bool has_antiparallel_pair(const DirectedGraph& g) {
  std::set<Edge> seen(g.edges().begin(), g.edges().end());
  return std::any_of(seen.begin(), seen.end(), [&](const Edge& e) {
    return seen.contains(Edge{e.to, e.from});
  });
}

std::vector<DegreeRecord> degrees(const DirectedGraph& g) {
  std::vector<DegreeRecord> out(g.num_vertices());
  for (const Edge& e : g.edges()) {
    ++out[e.from].out_degree;
    ++out[e.to].in_degree;
  }
  for (auto& r : out) r.total = r.out_degree + r.in_degree;
  return out;
}

std::vector<std::size_t> degree_multiset(const DirectedGraph& g) {
  std::vector<std::size_t> totals;
  totals.reserve(g.num_vertices());
  for (const auto& r : degrees(g)) totals.push_back(r.total);
  std::sort(totals.begin(), totals.end());
  return totals;
}

std::string_view to_string(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::Path: return "path";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::StarOut: return "star_out";
    case GraphKind::StarIn: return "star_in";
    case GraphKind::CompleteDag: return "complete_dag";
    case GraphKind::ErdosRenyi: return "erdos_renyi";
  }
  return "unknown";
}

GraphKind parse_graph_kind(std::string_view name) {
  for (GraphKind k : {GraphKind::Path, GraphKind::Cycle, GraphKind::StarOut,
                      GraphKind::StarIn, GraphKind::CompleteDag,
                      GraphKind::ErdosRenyi}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::UnsupportedKind, std::string(name));
}

namespace {

// 53 random mantissa bits; identical across standard libraries, unlike
// std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DirectedGraph erdos_renyi(std::size_t m, double p, std::uint64_t seed,
                          AntiparallelPolicy policy) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::set<Edge> chosen;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = 0; b < m; ++b) {
      if (a == b) continue;
      // One draw per ordered pair, consumed even when the pair is skipped,
      // so the stream position never depends on earlier outcomes.
      const bool hit = unit_uniform(rng) < p;
      if (!hit) continue;
      if (policy == AntiparallelPolicy::Reject && chosen.contains(Edge{b, a})) {
        continue;
      }
      chosen.insert(Edge{a, b});
      edges.push_back(Edge{a, b});
    }
  }
  return DirectedGraph(m, std::move(edges));
}

}  // namespace

DirectedGraph generate(GraphKind kind, std::size_t m,
                       const GeneratorParams& params, std::uint64_t seed,
                       AntiparallelPolicy policy) {
  if (m == 0) throw Error(ErrorCode::BadParams, "M must be >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Path:
      for (Vertex i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
      break;
    case GraphKind::Cycle:
      if (m < 3) throw Error(ErrorCode::BadParams, "cycle needs M >= 3");
      for (Vertex i = 0; i < m; ++i) {
        edges.push_back({i, static_cast<Vertex>((i + 1) % m)});
      }
      break;
    case GraphKind::StarOut:
      for (Vertex i = 1; i < m; ++i) edges.push_back({0, i});
      break;
    case GraphKind::StarIn:
      for (Vertex i = 1; i < m; ++i) edges.push_back({i, 0});
      break;
    case GraphKind::CompleteDag:
      for (Vertex a = 0; a < m; ++a) {
        for (Vertex b = a + 1; b < m; ++b) edges.push_back({a, b});
      }
      break;
    case GraphKind::ErdosRenyi: {
      auto it = params.find("p");
      if (it == params.end()) {
        throw Error(ErrorCode::BadParams, "erdos_renyi requires p");
      }
      const double p = it->second;
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::BadParams, "p must lie in [0, 1]");
      }
      auto g = erdos_renyi(m, p, seed, policy);
      validate(g, policy);
      return g;
    }
  }
  return make_graph(m, std::move(edges), policy);
}

DirectedGraph permute(const DirectedGraph& g, std::span<const Vertex> perm) {
  const std::size_t m = g.num_vertices();
  if (perm.size() != m) {
    throw Error(ErrorCode::NotABijection,
                "permutation has " + std::to_string(perm.size()) +
                    " entries, expected " + std::to_string(m));
  }
  std::vector<bool> hit(m, false);
  for (Vertex v : perm) {
    if (v >= m || hit[v]) {
      throw Error(ErrorCode::NotABijection,
                  "image " + std::to_string(v) + " repeated or out of range");
    }
    hit[v] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.from], perm[e.to]});
  return DirectedGraph(m, std::move(edges));
}

DirectedGraph reverse_edges(const DirectedGraph& g,
                            std::span<const std::size_t> edge_indices,
                            AntiparallelPolicy policy) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<bool> flip(edges.size(), false);
  for (std::size_t idx : edge_indices) {
    if (idx >= edges.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge index " + std::to_string(idx));
    }
    flip[idx] = true;
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (flip[k]) std::swap(edges[k].from, edges[k].to);
  }
  return make_graph(g.num_vertices(), std::move(edges), policy);
}

std::string graph_hash(const DirectedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.num_vertices());
  for (const Edge& e : g.edges()) {
    mix(e.from);
    mix(e.to);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dged
