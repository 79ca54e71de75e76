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
#include <functional>
#include <vector>

#include "qopt/graph.hpp"

namespace qopt {

// A verified clique: construction checks pairwise adjacency.
struct CliqueResult {
    std::vector<int> vertices;       // sorted ascending
    std::uint64_t solver_calls = 0;  // leaf subproblems (split_solve)
    std::uint64_t branch_nodes = 0;  // search tree nodes
    std::uint64_t seed = 0;

    int size() const noexcept { return static_cast<int>(vertices.size()); }
};

CliqueResult make_clique_result(const Graph& g, std::vector<int> vertices);

// Exact branch and bound with a greedy-coloring upper bound. The guard
// rejects inputs that are clearly out of scope for exhaustive search.
CliqueResult exact_clique(const Graph& g, int guard = 200);

// Repeatedly adds the highest-degree vertex within the shrinking candidate
// set; degree ties are broken by seed.
CliqueResult greedy_clique(const Graph& g, std::uint64_t seed);

struct SaCliqueOptions {
    double alpha = 0.9996;   // geometric cooling rate, 0 < alpha < 1
    double t_min = 1e-2;     // probe freeze temperature
    int step_scale = 20;     // per-probe floor of step_scale * n * m moves
    std::uint64_t seed = 0;
};

// Annealed clique search: for a trial size m, anneal over vertex subsets of
// size m with single-swap moves, energy m(m-1)/2 minus induced edges, start
// temperature m, geometric cooling. A probe succeeds when energy reaches
// zero. The returned clique is the largest probe success found by binary
// search between the greedy lower bound and a coloring upper bound, so the
// result never falls below greedy_clique on the same seed.
CliqueResult sa_clique(const Graph& g, const SaCliqueOptions& options);
CliqueResult sa_clique(const Graph& g, double alpha, std::uint64_t seed);

// Divide and conquer around a highest-degree pivot v:
//
//   maxclique(G) = max(1 + maxclique(G[N(v)]), maxclique(G - v))
//
// recursing until subproblems have at most size_limit vertices, which are
// handed to the subsolver (counted in solver_calls). Branches whose vertex
// count cannot beat the best known clique are abandoned. Exact whenever the
// subsolver is exact.
CliqueResult split_solve(const Graph& g, int size_limit,
                         const std::function<CliqueResult(const Graph&)>& subsolver);

// Largest complete graph with a chain embedding on a square-cell chimera
// budget: K = 4M + 1 with M the nearest integer to sqrt(qubits / 8).
// Doubling the qubit budget grows K - 1 by a factor near sqrt(2).
int size_limit_for_qubits(std::int64_t qubits);

}  // namespace qopt
