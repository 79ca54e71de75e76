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

#include <stdexcept>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/maxclique.hpp"
#include "qopt/rng.hpp"

#include "support/oracles.hpp"

namespace {

qopt::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return qopt::Graph(n, e);
}

qopt::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return qopt::Graph(n, e);
}

bool is_clique(const qopt::Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("make_clique_result validates membership") {
    const auto k4 = complete(4);
    const auto r = qopt::make_clique_result(k4, {2, 0, 3});
    CHECK(r.vertices == std::vector<int>{0, 2, 3});  // sorted on construction
    CHECK(r.size() == 3);

    CHECK_THROWS_AS(qopt::make_clique_result(k4, {0, 4}), std::out_of_range);
    CHECK_THROWS_AS(qopt::make_clique_result(k4, {1, 1}), std::invalid_argument);
    const auto c4 = cycle(4);
    CHECK_THROWS_AS(qopt::make_clique_result(c4, {0, 2}), std::invalid_argument);
}

TEST_CASE("exact_clique on closed-form graphs") {
    CHECK(qopt::exact_clique(complete(4)).size() == 4);
    CHECK(qopt::exact_clique(cycle(5)).size() == 2);
    CHECK(qopt::exact_clique(qopt::Graph(5, {})).size() == 1);
    CHECK(qopt::exact_clique(cycle(3)).size() == 3);

    const auto r = qopt::exact_clique(complete(6));
    CHECK(is_clique(complete(6), r.vertices));
    CHECK(r.branch_nodes > 0);
}

TEST_CASE("exact_clique guard") {
    const auto g = qopt::random_graph(25, 0.4, 1);
    CHECK_THROWS_AS(qopt::exact_clique(g, 20), std::length_error);
    CHECK_NOTHROW(qopt::exact_clique(g, 25));
}

TEST_CASE("exact_clique matches exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const double p = 0.2 + 0.06 * static_cast<double>(seed % 10);
        const auto g = qopt::random_graph(n, p, seed);
        const auto r = qopt::exact_clique(g);
        CHECK(is_clique(g, r.vertices));
        CHECK(r.size() == oracles::max_clique_size(g));
    }
}

TEST_CASE("greedy_clique always returns a clique") {
    CHECK(qopt::greedy_clique(complete(4), 1).size() == 4);
    CHECK(qopt::greedy_clique(cycle(4), 1).size() == 2);
    CHECK(qopt::greedy_clique(qopt::Graph(5, {}), 1).size() == 1);
    CHECK_THROWS_AS(qopt::greedy_clique(qopt::Graph(0, {}), 1), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = qopt::random_graph(30, 0.5, seed);
        const auto r = qopt::greedy_clique(g, seed);
        CHECK(is_clique(g, r.vertices));
        CHECK(r.size() >= 1);
        CHECK(r.size() <= oracles::max_clique_size(g));
        // same seed, same answer
        CHECK(qopt::greedy_clique(g, seed).vertices == r.vertices);
    }
}

TEST_CASE("sa_clique finds easy cliques and never loses to greedy") {
    CHECK(qopt::sa_clique(complete(5), 0.999, 1).size() == 5);
    CHECK(qopt::sa_clique(cycle(3), 0.999, 2).size() == 3);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto g = qopt::random_graph(30, 0.5, seed);
        qopt::SaCliqueOptions opt;
        opt.alpha = 0.999;
        opt.seed = seed;
        const auto r = qopt::sa_clique(g, opt);
        CHECK(is_clique(g, r.vertices));
        CHECK(r.size() >= qopt::greedy_clique(g, seed).size());
        CHECK(r.size() <= oracles::max_clique_size(g));
    }

    qopt::SaCliqueOptions bad;
    bad.alpha = 1.0;
    CHECK_THROWS_AS(qopt::sa_clique(complete(3), bad), std::invalid_argument);
    bad.alpha = 0.5;
    bad.t_min = 0.0;
    CHECK_THROWS_AS(qopt::sa_clique(complete(3), bad), std::invalid_argument);
    bad.t_min = 1e-2;
    bad.step_scale = 0;
    CHECK_THROWS_AS(qopt::sa_clique(complete(3), bad), std::invalid_argument);
}

TEST_CASE("split_solve") {
    const auto exact_sub = [](const qopt::Graph& sub) { return qopt::exact_clique(sub, 200); };

    SUBCASE("small graphs go to the subsolver in one call") {
        const auto g = qopt::random_graph(20, 0.5, 3);
        const auto r = qopt::split_solve(g, 45, exact_sub);
        CHECK(r.solver_calls == 1);
        CHECK(r.size() == oracles::max_clique_size(g));
    }

    SUBCASE("a complete graph larger than the limit is still solved exactly") {
        const auto g = complete(50);
        const auto r = qopt::split_solve(g, 45, exact_sub);
        CHECK(r.size() == 50);
        CHECK(is_clique(g, r.vertices));
        CHECK(r.solver_calls >= 1);
    }

    SUBCASE("matches exact_clique on mid-sized random graphs") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto g = qopt::random_graph(80, 0.3, seed);
            const auto split = qopt::split_solve(g, 45, exact_sub);
            const auto whole = qopt::exact_clique(g, 200);
            CHECK(split.size() == whole.size());
            CHECK(is_clique(g, split.vertices));
            CHECK(split.solver_calls >= 1);
        }
    }

    SUBCASE("argument validation") {
        const auto g = complete(4);
        CHECK_THROWS_AS(qopt::split_solve(g, 1, exact_sub), std::invalid_argument);
        CHECK_THROWS_AS(qopt::split_solve(g, 45, nullptr), std::invalid_argument);
    }
}

TEST_CASE("size_limit_for_qubits") {
    // 12x12 cells of 8 qubits embed a 49-clique.
    CHECK(qopt::size_limit_for_qubits(1152) == 49);
    // One cell embeds a 5-clique.
    CHECK(qopt::size_limit_for_qubits(8) == 5);
    CHECK_THROWS_AS(qopt::size_limit_for_qubits(7), std::invalid_argument);

    SUBCASE("doubling the budget grows the limit by about sqrt(2)") {
        std::int64_t qubits = 1152;
        int prev = qopt::size_limit_for_qubits(qubits);
        for (int round = 0; round < 8; ++round) {
            qubits *= 2;
            const int cur = qopt::size_limit_for_qubits(qubits);
            const double ratio = static_cast<double>(cur - 1) / static_cast<double>(prev - 1);
            CHECK(ratio >= 1.3);
            CHECK(ratio <= 1.45);
            prev = cur;
        }
    }
}
