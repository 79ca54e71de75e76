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
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/solvers.hpp"

namespace qopt {

// Assignment of each vertex to one of k parts. parts[v] in [0, k).
struct Partition {
    int k = 0;
    std::vector<int> parts;

    int size_of(int part) const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// Number of edges with endpoints in different parts.
int edge_cut(const Graph& g, const Partition& p);

// Core-halo cost. For part i, core_sizes[i] is the number of assigned
// vertices and halo_sizes[i] counts outside vertices adjacent to the part.
// total = sum_i (core + halo)^2: the squared per-part storage footprint when
// every part keeps its own vertices plus a one-deep boundary copy.
struct ChMetrics {
    std::vector<int> core_sizes;
    std::vector<int> halo_sizes;
    long long total = 0;
};

ChMetrics ch_cost(const Graph& g, const Partition& p);

// Three-phase multilevel edge-cut partitioner: coarsening by randomized
// heavy-edge matching, an initial partition of the coarsest graph (exhaustive
// below a size cutoff, greedy region growing above it), then uncoarsening
// with boundary refinement passes. Returned part sizes are within
// {floor(n/k), ceil(n/k)}. Requires 2 <= k <= n.
Partition multilevel_partition(const Graph& g, int k, std::uint64_t seed);

// Simulated annealing over single-vertex reassignments of boundary vertices,
// objective ch_cost().total. Balance is unconstrained; parts may empty.
// Returns the best partition seen (never worse than start).
Partition refine_ch_sa(const Graph& g, const Partition& start,
                       const AnnealSchedule& schedule, std::uint64_t seed);

// Text format: one line "v part" per vertex.
void write_partition(const Partition& p, std::ostream& out);
Partition read_partition(std::istream& in);
void save_partition(const Partition& p, const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path);

}  // namespace qopt
