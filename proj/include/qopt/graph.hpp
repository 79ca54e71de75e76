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

#include <cstdint>
#include <utility>
#include <vector>

namespace qopt {

// Simple undirected graph on vertices 0..n-1. No self loops, no parallel
// edges, no weights. Immutable once constructed; every operation that
// modifies structure returns a new graph.
class Graph {
 public:
    Graph() = default;

    explicit Graph(int num_vertices);

    // Duplicate edges collapse; self loops and out-of-range endpoints throw.
    Graph(int num_vertices, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const;

    // Normalized (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    int degree(int v) const;
    int max_degree() const noexcept;

    // BFS two-coloring over all components.
    bool is_bipartite() const;

    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

 private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Erdos-Renyi G(n, p): one coin flip per vertex pair, iterated in fixed
// (i, j) order so a seed pins the graph exactly.
Graph random_graph(int n, double p, std::uint64_t seed);

struct EdgeContraction {
    Graph graph;
    // Original label -> label in the contracted graph. Both endpoints of the
    // contracted edge map to the same label.
    std::vector<int> vertex_map;
};

// Contracts edge (u, v): the merged vertex takes label min(u, v), labels are
// compacted to stay dense, parallel edges collapse. Absent edge throws.
EdgeContraction contract_edge(const Graph& g, int u, int v);

}  // namespace qopt
