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

// Independent enumeration oracles for the test suites. Everything here is
// deliberately written from scratch against the definitions, not by calling
// the library's solvers, so the two sides can check each other.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qopt/graph.hpp"

namespace oracles {

inline std::vector<std::uint64_t> adjacency_masks(const qopt::Graph& g) {
    const int n = g.num_vertices();
    if (n > 63) throw std::invalid_argument("oracle: graph too large for bitmask");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

// Maximum clique size by branch enumeration over candidate bitmasks.
inline int max_clique_size(const qopt::Graph& g) {
    const int n = g.num_vertices();
    const auto adj = adjacency_masks(g);
    int best = 0;
    const auto go = [&](auto&& self, int size, std::uint64_t cand) -> void {
        if (size + __builtin_popcountll(cand) <= best) return;
        if (cand == 0) {
            if (size > best) best = size;
            return;
        }
        const int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        self(self, size + 1, cand & adj[static_cast<std::size_t>(v)]);
        self(self, size, cand);
    };
    const std::uint64_t all =
        n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    go(go, 0, all);
    return best;
}

inline int max_independent_set_size(const qopt::Graph& g) {
    return max_clique_size(g.complement());
}

inline long long cut_of_assignment(const qopt::Graph& g, const std::vector<int>& parts) {
    long long cut = 0;
    for (const auto& [u, v] : g.edges())
        if (parts[static_cast<std::size_t>(u)] != parts[static_cast<std::size_t>(v)]) ++cut;
    return cut;
}

// Minimum cut over exactly-balanced 2-partitions; n must be even.
inline long long min_bisection_cut(const qopt::Graph& g) {
    const int n = g.num_vertices();
    if (n % 2 != 0) throw std::invalid_argument("oracle: bisection needs even n");
    if (n > 30) throw std::invalid_argument("oracle: bisection graph too large");
    long long best = -1;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != n / 2) continue;
        for (int v = 0; v < n; ++v)
            parts[static_cast<std::size_t>(v)] = (mask >> v) & 1 ? 1 : 0;
        const long long cut = cut_of_assignment(g, parts);
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

// Minimum cut over k-way partitions whose part sizes all lie in
// {floor(n/k), ceil(n/k)}.
inline long long min_balanced_kway_cut(const qopt::Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 1) throw std::invalid_argument("oracle: part count must be positive");
    const int lo = n / k;
    const int hi = (n + k - 1) / k;
    long long best = -1;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    const auto go = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (int i = 0; i < k; ++i)
                if (sizes[static_cast<std::size_t>(i)] < lo ||
                    sizes[static_cast<std::size_t>(i)] > hi)
                    return;
            const long long cut = cut_of_assignment(g, parts);
            if (best < 0 || cut < best) best = cut;
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (sizes[static_cast<std::size_t>(i)] == hi) continue;
            parts[static_cast<std::size_t>(v)] = i;
            ++sizes[static_cast<std::size_t>(i)];
            self(self, v + 1);
            --sizes[static_cast<std::size_t>(i)];
        }
    };
    go(go, 0);
    return best;
}

// Core-halo cost of a core assignment, computed from the definition:
// cost = sum over parts of (|part| + |outside vertices adjacent to part|)^2.
inline long long ch_cost_of_assignment(const qopt::Graph& g, const std::vector<int>& parts,
                                       int k) {
    const int n = g.num_vertices();
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        long long core = 0;
        long long halo = 0;
        for (int v = 0; v < n; ++v) {
            if (parts[static_cast<std::size_t>(v)] == i) {
                ++core;
                continue;
            }
            for (int w : g.neighbors(v)) {
                if (parts[static_cast<std::size_t>(w)] == i) {
                    ++halo;
                    break;
                }
            }
        }
        total += (core + halo) * (core + halo);
    }
    return total;
}

// Minimum core-halo cost over all k^n core assignments (no balance constraint).
inline long long min_ch_cost(const qopt::Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 1) throw std::invalid_argument("oracle: part count must be positive");
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    long long best = ch_cost_of_assignment(g, parts, k);
    while (true) {
        int pos = 0;
        while (pos < n && parts[static_cast<std::size_t>(pos)] == k - 1)
            parts[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++parts[static_cast<std::size_t>(pos)];
        const long long cost = ch_cost_of_assignment(g, parts, k);
        if (cost < best) best = cost;
    }
    return best;
}

}  // namespace oracles
