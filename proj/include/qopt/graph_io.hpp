// Copyright 2026 qopt contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "qopt/graph.hpp"
#include "qopt/parse_error.hpp"

namespace qopt {

// Edge-list text format: first line "n m", then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// DIMACS coloring format: "p edge n m" header, "e u v" edges, 1-based.
// Vertex labels are normalized to 0-based on load.
Graph read_dimacs(std::istream& in);
Graph load_dimacs(const std::filesystem::path& path);

// Dispatches on extension: ".col" -> DIMACS, anything else -> edge list.
Graph load_graph(const std::filesystem::path& path);

}  // namespace qopt
