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

#include "dged/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace dged::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::uint64_t read_index(const json& node, const std::string& field) {
  if (!node.is_number_integer()) {
    parse_fail("field '" + field + "': expected an integer, got " +
               node.dump());
  }
  const auto v = node.get<std::int64_t>();
  if (v < 0) parse_fail("field '" + field + "': negative value " + node.dump());
  return static_cast<std::uint64_t>(v);
}

}  // namespace

DirectedGraph parse_graph_json(std::string_view text,
                               AntiparallelPolicy policy) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (!doc.contains("M")) parse_fail("missing field 'M'");
  if (!doc.contains("edges")) parse_fail("missing field 'edges'");

  const std::uint64_t m = read_index(doc["M"], "M");
  if (m == 0) parse_fail("field 'M': must be positive");

  std::uint64_t base = 0;
  if (doc.contains("labels_base")) {
    base = read_index(doc["labels_base"], "labels_base");
    if (base > 1) parse_fail("field 'labels_base': must be 0 or 1");
  }

  const json& edges_node = doc["edges"];
  if (!edges_node.is_array()) parse_fail("field 'edges': expected an array");
  std::vector<Edge> edges;
  edges.reserve(edges_node.size());
  for (std::size_t k = 0; k < edges_node.size(); ++k) {
    const json& pair = edges_node[k];
    const std::string field = "edges[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      parse_fail("field '" + field + "': expected [a, b], got " + pair.dump());
    }
    std::uint64_t a = read_index(pair[0], field + "[0]");
    std::uint64_t b = read_index(pair[1], field + "[1]");
    if (base == 1) {
      if (a == 0 || b == 0) {
        parse_fail("field '" + field + "': label 0 with labels_base 1");
      }
      --a;
      --b;
    }
    if (a >= m || b >= m) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "field '" + field + "': vertex outside [0, " +
                      std::to_string(m) + ")");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return make_graph(static_cast<std::size_t>(m), std::move(edges), policy);
}

DirectedGraph parse_graph_file(const std::filesystem::path& path,
                               AntiparallelPolicy policy) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_graph_json(text.str(), policy);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    parse_fail(path.string() + ": " + e.detail());
  }
}

std::string graph_to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
  json doc;
  doc["M"] = g.num_vertices();
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view to_string(AntiparallelPolicy policy) noexcept {
  return policy == AntiparallelPolicy::Reject ? "reject_antiparallel"
                                              : "allow_antiparallel";
}

namespace {

// nlohmann/json prints shortest round-trip doubles; the output contract is
// fixed 17 significant digits, so numbers are written by hand.
std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

std::string json_optional(const std::optional<double>& v) {
  return v ? json_number(*v) : "null";
}

std::string json_string(std::string_view s) { return json(s).dump(); }

}  // namespace

std::string report_to_json(const EDReport& r) {
  std::string out = "{\"per_vertex\":[";
  for (std::size_t i = 0; i < r.per_vertex.size(); ++i) {
    if (i) out += ",";
    out += json_number(r.per_vertex[i]);
  }
  out += "],\"total_sv\":" + json_number(r.total_statevector);
  out += ",\"total_cf\":" + json_optional(r.total_closed_form);
  out += ",\"discrepancy\":" + json_optional(r.discrepancy);
  out += ",\"theta\":" + json_number(r.gp.theta());
  out += ",\"psi\":" + json_number(r.gp.psi());
  out += ",\"graph_hash\":" + json_string(r.graph_hash);
  out += ",\"policy\":" + json_string(to_string(r.policy));
  out += "}\n";
  return out;
}

std::string theta_sweep_csv(const std::vector<ThetaSweepRow>& rows) {
  std::string out = "theta,E_sv,E_cf,discrepancy\n";
  for (const auto& row : rows) {
    out += format_double(row.theta) + "," + format_double(row.ed_statevector) +
           "," + (row.ed_closed_form ? format_double(*row.ed_closed_form) : "") +
           "," + (row.discrepancy ? format_double(*row.discrepancy) : "") + "\n";
  }
  return out;
}

std::string theta_sweep_json(const std::vector<ThetaSweepRow>& rows) {
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    if (k) out += ",";
    out += "{\"theta\":" + json_number(row.theta) +
           ",\"E_sv\":" + json_number(row.ed_statevector) +
           ",\"E_cf\":" + json_optional(row.ed_closed_form) +
           ",\"discrepancy\":" + json_optional(row.discrepancy) + "}";
  }
  out += "]\n";
  return out;
}

std::string alpha_sweep_csv(const SweepResult& sweep) {
  std::string out = "t,E,S_nats,D_HS\n";
  for (const auto& s : sweep.samples) {
    out += format_double(s.parameter) + "," + format_double(s.ed) + "," +
           format_double(s.entropy) + "," + format_double(s.hs) + "\n";
  }
  return out;
}

std::string alpha_sweep_json(const SweepResult& sweep) {
  std::string out = "{\"samples\":[";
  for (std::size_t k = 0; k < sweep.samples.size(); ++k) {
    const auto& s = sweep.samples[k];
    if (k) out += ",";
    out += "{\"t\":" + json_number(s.parameter) + ",\"E\":" +
           json_number(s.ed) + ",\"S_nats\":" + json_number(s.entropy) +
           ",\"D_HS\":" + json_number(s.hs) + "}";
  }
  out += "],\"argmax_E\":" + json_number(sweep.argmax_ed) +
         ",\"argmax_S\":" + json_number(sweep.argmax_entropy) +
         ",\"argmin_DHS\":" + json_number(sweep.argmin_hs) +
         ",\"degenerate\":" + (sweep.degenerate ? "true" : "false") + "}\n";
  return out;
}

}  // namespace dged::io
