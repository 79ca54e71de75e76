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

#include "qopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "qopt/rng.hpp"

namespace qopt {

Graph::Graph(int num_vertices) : n_(num_vertices), adj_(static_cast<std::size_t>(std::max(num_vertices, 0))) {
    if (num_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edge_list)
    : Graph(num_vertices) {
    std::set<std::pair<int, int>> normalized;
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("Graph: self loop");
        normalized.emplace(std::min(a, b), std::max(a, b));
    }
    edges_.assign(normalized.begin(), normalized.end());
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
    return best;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    std::deque<int> queue;
    for (int start = 0; start < n_; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n_; ++u) {
        const auto& row = adj_[static_cast<std::size_t>(u)];
        std::size_t at = 0;
        for (int v = u + 1; v < n_; ++v) {
            while (at < row.size() && row[at] < v) ++at;
            if (at < row.size() && row[at] == v) continue;
            missing.emplace_back(u, v);
        }
    }
    return Graph(n_, missing);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

EdgeContraction contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: edge absent");
    const int n = g.num_vertices();
    const int keep = std::min(u, v);
    const int drop = std::max(u, v);

    std::vector<int> map(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        const int base = (w == drop) ? keep : w;
        map[static_cast<std::size_t>(w)] = base - (base > drop ? 1 : 0);
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges()) {
        const int x = map[static_cast<std::size_t>(a)];
        const int y = map[static_cast<std::size_t>(b)];
        if (x != y) edges.emplace_back(x, y);
    }
    return EdgeContraction{Graph(n - 1, edges), std::move(map)};
}

}  // namespace qopt
