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

/// JSON documents for graphs:
///   {"vertices": ["a", ...], "edges": [{"a": "a", "b": "b", "chi": 1.57}],
///    "logical_pairs": [["a", "e"]]}        (logical_pairs optional)
/// Edge endpoints may be given as vertex labels or as integer indices.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wgs/graph_state.hpp"

namespace wgs {

struct GraphDocument {
  WeightedGraph graph;
  std::vector<std::pair<int, int>> logical_pairs;
  std::vector<std::string> warnings;
};

/// Parses a graph document. Weights outside (-pi, pi] are normalized and
/// zero weights dropped, each with a warning. Malformed input throws
/// InvalidInput; structural violations throw InvalidGraph.
GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph(const std::string& path);

std::string dump_graph(const WeightedGraph& graph,
                       const std::vector<std::pair<int, int>>& logical_pairs = {});

std::string read_text_file(const std::string& path);

}  // namespace wgs
