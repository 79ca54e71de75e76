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

#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "qopt/graph.hpp"
#include "qopt/rng.hpp"

using qopt::Graph;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction and queries") {
    const Graph k4 = complete(4);
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(k4.has_edge(0, 3));
    CHECK(k4.has_edge(3, 0));
    CHECK_FALSE(k4.has_edge(1, 1));
    CHECK(k4.degree(2) == 3);
    CHECK(k4.max_degree() == 3);
    CHECK(k4.neighbors(0) == std::vector<int>{1, 2, 3});

    const Graph empty(3);
    CHECK(empty.num_edges() == 0);
    CHECK(empty.max_degree() == 0);

    // star with 5 leaves
    const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(star.max_degree() == 5);

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(k4.neighbors(4), std::out_of_range);

    // duplicate edges collapse, orientation normalized
    const Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.num_edges() == 1);
    CHECK(dup.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("degree sum equals twice the edge count") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = qopt::random_graph(40, 0.3, seed);
        long long sum = 0;
        for (int v = 0; v < g.num_vertices(); ++v) sum += g.degree(v);
        CHECK(sum == 2LL * g.num_edges());
    }
}

TEST_CASE("random_graph endpoints and determinism") {
    CHECK(qopt::random_graph(4, 0.0, 7).num_edges() == 0);
    CHECK(qopt::random_graph(4, 1.0, 7).num_edges() == 6);
    CHECK(qopt::random_graph(0, 0.5, 7).num_vertices() == 0);

    const Graph a = qopt::random_graph(30, 0.5, 11);
    const Graph b = qopt::random_graph(30, 0.5, 11);
    CHECK(a == b);
    const Graph c = qopt::random_graph(30, 0.5, 12);
    CHECK_FALSE(a == c);

    CHECK_THROWS_AS(qopt::random_graph(3, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(qopt::random_graph(3, 1.1, 1), std::invalid_argument);
}

TEST_CASE("random_graph edge count stays near the binomial mean") {
    // Bin(124750, 0.3): mean 37425, sigma ~161.7; three sigma is ~485.
    const Graph g = qopt::random_graph(500, 0.3, 20260818);
    const double mean = 124750 * 0.3;
    const double sigma = std::sqrt(124750 * 0.3 * 0.7);
    CHECK(std::abs(g.num_edges() - mean) <= 3.0 * sigma);
}

TEST_CASE("complement") {
    CHECK(complete(4).complement().num_edges() == 0);

    const Graph c4 = cycle(4);
    const Graph diag = c4.complement();
    CHECK(diag.num_edges() == 2);
    CHECK(diag.has_edge(0, 2));
    CHECK(diag.has_edge(1, 3));

    const Graph g = qopt::random_graph(45, 0.4, 3);
    CHECK(g.complement().num_edges() == 990 - g.num_edges());
    CHECK(g.complement().complement() == g);
}

TEST_CASE("contract_edge") {
    const Graph c4 = cycle(4);
    const auto tri = qopt::contract_edge(c4, 0, 1);
    CHECK(tri.graph.num_vertices() == 3);
    CHECK(tri.graph.num_edges() == 3);
    CHECK_FALSE(tri.graph.is_bipartite());
    // merged vertex keeps label min(u, v); both originals map to it
    CHECK(tri.vertex_map[0] == tri.vertex_map[1]);
    CHECK(tri.vertex_map[0] == 0);

    const auto edge = qopt::contract_edge(path(3), 0, 1);
    CHECK(edge.graph.num_vertices() == 2);
    CHECK(edge.graph.num_edges() == 1);

    CHECK_THROWS_AS(qopt::contract_edge(path(3), 0, 2), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Graph g = qopt::random_graph(12, 0.4, seed);
        if (g.num_edges() == 0) continue;
        const auto [u, v] = g.edges().front();
        const auto contracted = qopt::contract_edge(g, u, v);
        CHECK(contracted.graph.num_vertices() == g.num_vertices() - 1);
        CHECK(contracted.graph.num_edges() <= g.num_edges());
        CHECK(static_cast<int>(contracted.vertex_map.size()) == g.num_vertices());
    }
}

TEST_CASE("is_bipartite") {
    CHECK(cycle(4).is_bipartite());
    CHECK_FALSE(cycle(5).is_bipartite());
    CHECK_FALSE(complete(3).is_bipartite());
    CHECK(path(6).is_bipartite());
    CHECK(Graph(4).is_bipartite());
    // disconnected graph with one odd component
    CHECK_FALSE(Graph(7, {{0, 1}, {2, 3}, {3, 4}, {4, 2}}).is_bipartite());
}

TEST_CASE("rng basics") {
    qopt::Rng a(5);
    qopt::Rng b(5);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    qopt::Rng r(99);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const int x = r.uniform_int(3, 7);
        CHECK(x >= 3);
        CHECK(x <= 7);
    }
    CHECK(qopt::mix_seed(1, 2) != qopt::mix_seed(1, 3));
    CHECK(qopt::mix_seed(1, 2) == qopt::mix_seed(1, 2));
}
