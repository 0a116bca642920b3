// Copyright 2026 The wgs Authors
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

#include "wgs/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wgs {

namespace {

using nlohmann::json;

int vertex_ref(const WeightedGraph& g, const json& j) {
  if (j.is_string()) return g.index_of(j.get<std::string>());
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorKind::InvalidGraph, "vertex index " + std::to_string(v) + " out of range");
    }
    return v;
  }
  throw Error(ErrorKind::InvalidInput, "vertex reference must be a label or an index");
}

std::string vertex_label(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::InvalidInput, "vertex ids must be strings or integers");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDocument parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "graph document needs a \"vertices\" array");
  }
  GraphDocument out;
  for (const auto& v : doc["vertices"]) out.graph.add_vertex(vertex_label(v));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::InvalidInput, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("chi") ||
          !e["chi"].is_number()) {
        throw Error(ErrorKind::InvalidInput, "each edge needs \"a\", \"b\" and numeric \"chi\"");
      }
      const int a = vertex_ref(out.graph, e["a"]);
      const int b = vertex_ref(out.graph, e["b"]);
      const Real chi = e["chi"].get<Real>();
      if (!std::isfinite(chi)) throw Error(ErrorKind::InvalidInput, "non-finite edge weight");
      const Real w = normalize_angle(chi);
      const std::string name = out.graph.label(a) + "-" + out.graph.label(b);
      if (std::abs(w) < 1e-14) {
        out.warnings.push_back("edge " + name + " has zero weight and was dropped");
        continue;
      }
      if (w != chi) {
        out.warnings.push_back("edge " + name + " weight " + std::to_string(chi) +
                               " normalized to " + std::to_string(w));
      }
      out.graph.add_edge(a, b, w);
    }
  }
  if (doc.contains("logical_pairs")) {
    for (const auto& p : doc["logical_pairs"]) {
      if (!p.is_array() || p.size() != 2) {
        throw Error(ErrorKind::InvalidInput, "logical pairs are two-element arrays");
      }
      out.logical_pairs.emplace_back(vertex_ref(out.graph, p[0]), vertex_ref(out.graph, p[1]));
    }
  }
  return out;
}

GraphDocument load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string dump_graph(const WeightedGraph& graph,
                       const std::vector<std::pair<int, int>>& logical_pairs) {
  json doc;
  doc["vertices"] = graph.vertices();
  doc["edges"] = json::array();
  for (const auto& e : graph.edges()) {
    doc["edges"].push_back({{"a", graph.label(e.a)}, {"b", graph.label(e.b)}, {"chi", e.chi}});
  }
  if (!logical_pairs.empty()) {
    doc["logical_pairs"] = json::array();
    for (auto [a, b] : logical_pairs) doc["logical_pairs"].push_back({graph.label(a), graph.label(b)});
  }
  return doc.dump(2);
}

}  // namespace wgs
