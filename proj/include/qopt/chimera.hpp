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
#include <map>
#include <set>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/model.hpp"
#include "qopt/solvers.hpp"

namespace qopt {

// An M x N grid of complete bipartite K_{L,L} cells. Within a cell every
// left-side vertex couples to every right-side vertex; across cells,
// left-side vertices couple vertically (same column, same slot) and
// right-side vertices horizontally (same row, same slot). Missing vertices
// model fabrication defects: they stay in the label space but appear in no
// edge.
struct ChimeraSpec {
    int m = 12;
    int n = 12;
    int l = 4;
    std::set<int> missing;

    int total_vertices() const noexcept { return 2 * l * m * n; }
    int operational_vertices() const noexcept {
        return total_vertices() - static_cast<int>(missing.size());
    }

    // side 0 = left (vertical couplers), side 1 = right (horizontal).
    int vertex_index(int row, int col, int side, int slot) const;
};

// Full (M, N, L) yield has L^2*M*N + L*N*(M-1) + L*M*(N-1) edges.
Graph chimera_graph(const ChimeraSpec& spec);

// Marks remove_count additional uniformly chosen operational vertices as
// missing.
ChimeraSpec degrade(const ChimeraSpec& spec, int remove_count, std::uint64_t seed);

// Chains of physical vertices, one per logical variable.
struct Embedding {
    std::map<int, std::vector<int>> chains;
};

struct EmbeddingCheck {
    bool valid = false;
    std::string diagnostic;  // first violation, empty when valid
};

// Valid iff chains are nonempty, pairwise disjoint, each induces a connected
// subgraph of the physical graph, and every logical edge has at least one
// physical edge between its two chains.
EmbeddingCheck verify_embedding(const Embedding& e, const Graph& physical,
                                const Graph& logical);

// Graph minor obtained from m successive uniformly random edge contractions
// of the operational chimera graph, plus the embedding given by the merge
// groups (every logical edge of the minor is realized by construction).
// Contracting inside a cell creates odd cycles, so these minors are
// generally not bipartite.
struct ChimeraMinor {
    Graph graph;
    Embedding embedding;
};

ChimeraMinor contract_random_edges(const ChimeraSpec& spec, int m, std::uint64_t seed);

// Chain embedding of the complete graph K_{4M+1} (generally K_{LM+1}) on a
// square full-yield grid: per column-block b and slot k, an L-shaped chain
// running down column b from the diagonal and left along row b to column 0;
// one extra logical vertex occupies the superdiagonal cells. With missing
// vertices, every chain that is hit gets dropped and the surviving complete
// sub-embedding is returned. Fewer than two surviving chains is an error.
Embedding clique_embedding(const ChimeraSpec& spec);

// Maps a logical Ising model onto the physical graph through an embedding:
// fields split equally across chain members, logical couplers split equally
// across the physical edges joining the two chains, intra-chain edges get
// coupler -chain_strength, and the offset absorbs chain_strength per chain
// edge so unbroken physical states reproduce logical energies exactly.
IsingModel embed_model(const IsingModel& logical, const Embedding& e,
                       const Graph& physical, double chain_strength);

enum class UnembedStrategy {
    majority_vote,     // per chain; ties resolved toward lower logical energy
    minimize_energy,   // per broken chain, largest first, greedy spin choice
    discard_broken,    // drop samples containing any broken chain
};

// Collapses physical samples back to logical assignments. Energies are
// re-evaluated against the logical model and each record's broken_chains
// counts chains whose members disagreed.
SampleSet unembed(const SampleSet& physical_samples, const Embedding& e,
                  const IsingModel& logical, UnembedStrategy strategy);

// Text format: one line per logical variable, "k: v1 v2 ...".
void write_embedding(const Embedding& e, std::ostream& out);
Embedding read_embedding(std::istream& in);
void save_embedding(const Embedding& e, const std::filesystem::path& path);
Embedding load_embedding(const std::filesystem::path& path);

}  // namespace qopt
