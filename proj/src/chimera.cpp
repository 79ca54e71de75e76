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

#include "qopt/chimera.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qopt/parse_error.hpp"
#include "qopt/rng.hpp"

namespace qopt {

namespace {

void check_dimensions(const ChimeraSpec& spec) {
    if (spec.m < 1 || spec.n < 1 || spec.l < 1)
        throw std::invalid_argument("chimera: grid dimensions must be positive");
    for (int v : spec.missing)
        if (v < 0 || v >= spec.total_vertices())
            throw std::out_of_range("chimera: missing vertex " + std::to_string(v) +
                                    " outside the label space");
}

}  // namespace

int ChimeraSpec::vertex_index(int row, int col, int side, int slot) const {
    if (row < 0 || row >= m || col < 0 || col >= n || side < 0 || side > 1 || slot < 0 ||
        slot >= l)
        throw std::out_of_range("ChimeraSpec: cell coordinate out of range");
    return ((row * n + col) * 2 + side) * l + slot;
}

Graph chimera_graph(const ChimeraSpec& spec) {
    check_dimensions(spec);
    const auto alive = [&spec](int v) { return spec.missing.count(v) == 0; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < spec.m; ++r) {
        for (int c = 0; c < spec.n; ++c) {
            for (int i = 0; i < spec.l; ++i) {
                const int left = spec.vertex_index(r, c, 0, i);
                const int right = spec.vertex_index(r, c, 1, i);
                if (alive(left))
                    for (int j = 0; j < spec.l; ++j) {
                        const int rj = spec.vertex_index(r, c, 1, j);
                        if (alive(rj)) edges.emplace_back(left, rj);
                    }
                if (r + 1 < spec.m && alive(left)) {
                    const int below = spec.vertex_index(r + 1, c, 0, i);
                    if (alive(below)) edges.emplace_back(left, below);
                }
                if (c + 1 < spec.n && alive(right)) {
                    const int beside = spec.vertex_index(r, c + 1, 1, i);
                    if (alive(beside)) edges.emplace_back(right, beside);
                }
            }
        }
    }
    return Graph(spec.total_vertices(), edges);
}

ChimeraSpec degrade(const ChimeraSpec& spec, int remove_count, std::uint64_t seed) {
    check_dimensions(spec);
    std::vector<int> operational;
    operational.reserve(static_cast<std::size_t>(spec.operational_vertices()));
    for (int v = 0; v < spec.total_vertices(); ++v)
        if (spec.missing.count(v) == 0) operational.push_back(v);
    if (remove_count < 0 || remove_count > static_cast<int>(operational.size()))
        throw std::invalid_argument("degrade: remove_count exceeds operational vertices");
    Rng rng(seed);
    rng.shuffle(operational);
    ChimeraSpec out = spec;
    out.missing.insert(operational.begin(), operational.begin() + remove_count);
    return out;
}

EmbeddingCheck verify_embedding(const Embedding& e, const Graph& physical,
                                const Graph& logical) {
    EmbeddingCheck out;
    for (int i = 0; i < logical.num_vertices(); ++i) {
        const auto it = e.chains.find(i);
        if (it == e.chains.end() || it->second.empty()) {
            out.diagnostic = "logical vertex " + std::to_string(i) + " has no chain";
            return out;
        }
    }
    std::vector<int> owner(static_cast<std::size_t>(physical.num_vertices()),
                           std::numeric_limits<int>::min());
    for (const auto& [k, chain] : e.chains) {
        for (int p : chain) {
            if (p < 0 || p >= physical.num_vertices()) {
                out.diagnostic = "chain " + std::to_string(k) + " uses physical vertex " +
                                 std::to_string(p) + ", outside the physical graph";
                return out;
            }
            if (owner[static_cast<std::size_t>(p)] != std::numeric_limits<int>::min()) {
                out.diagnostic = "physical vertex " + std::to_string(p) + " is in chain " +
                                 std::to_string(owner[static_cast<std::size_t>(p)]) +
                                 " and chain " + std::to_string(k);
                return out;
            }
            owner[static_cast<std::size_t>(p)] = k;
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(physical.num_vertices()), 0);
    for (const auto& [k, chain] : e.chains) {
        if (chain.size() <= 1) continue;
        std::queue<int> frontier;
        frontier.push(chain.front());
        seen[static_cast<std::size_t>(chain.front())] = 1;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const int p = frontier.front();
            frontier.pop();
            for (int q : physical.neighbors(p)) {
                if (seen[static_cast<std::size_t>(q)] ||
                    owner[static_cast<std::size_t>(q)] != k)
                    continue;
                seen[static_cast<std::size_t>(q)] = 1;
                ++reached;
                frontier.push(q);
            }
        }
        for (int p : chain) seen[static_cast<std::size_t>(p)] = 0;
        if (reached != chain.size()) {
            out.diagnostic = "chain " + std::to_string(k) + " is disconnected";
            return out;
        }
    }
    for (const auto& [a, b] : logical.edges()) {
        bool joined = false;
        for (int p : e.chains.at(a)) {
            for (int q : e.chains.at(b)) {
                if (physical.has_edge(p, q)) {
                    joined = true;
                    break;
                }
            }
            if (joined) break;
        }
        if (!joined) {
            out.diagnostic = "logical edge (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") has no physical edge between its chains";
            return out;
        }
    }
    out.valid = true;
    return out;
}

ChimeraMinor contract_random_edges(const ChimeraSpec& spec, int m, std::uint64_t seed) {
    const Graph full = chimera_graph(spec);
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(spec.operational_vertices()));
    for (int v = 0; v < full.num_vertices(); ++v)
        if (spec.missing.count(v) == 0) keep.push_back(v);
    if (m < 0 || m >= static_cast<int>(keep.size()))
        throw std::invalid_argument(
            "contract_random_edges: m must be below the operational vertex count");

    std::vector<int> to_new(static_cast<std::size_t>(full.num_vertices()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(full.num_edges()));
    for (const auto& [u, v] : full.edges())
        edges.emplace_back(to_new[static_cast<std::size_t>(u)],
                           to_new[static_cast<std::size_t>(v)]);

    Graph cur(static_cast<int>(keep.size()), edges);
    std::vector<std::vector<int>> groups(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) groups[i] = {keep[i]};

    Rng rng(seed);
    for (int step = 0; step < m; ++step) {
        if (cur.num_edges() == 0)
            throw std::runtime_error("contract_random_edges: no edges left to contract at step " +
                                     std::to_string(step));
        const auto& [u, v] = cur.edges()[static_cast<std::size_t>(
            rng.uniform_int(0, cur.num_edges() - 1))];
        EdgeContraction contracted = contract_edge(cur, u, v);
        std::vector<std::vector<int>> next(groups.size() - 1);
        for (std::size_t w = 0; w < groups.size(); ++w) {
            auto& dst = next[static_cast<std::size_t>(contracted.vertex_map[w])];
            dst.insert(dst.end(), groups[w].begin(), groups[w].end());
        }
        groups = std::move(next);
        cur = std::move(contracted.graph);
    }

    ChimeraMinor out;
    out.graph = std::move(cur);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        std::sort(groups[i].begin(), groups[i].end());
        out.embedding.chains[static_cast<int>(i)] = std::move(groups[i]);
    }
    return out;
}

// Complete-graph chains on the S x S top-left subgrid (S = min(M, N)). Chain
// (b, k) runs down column b on the left side from the diagonal, then left
// along row b on the right side, meeting in diagonal cell (b, b); two chains
// always share a cell, where an intra-cell edge couples them. A final
// logical vertex occupies the otherwise unused superdiagonal cells, whose
// left halves couple down to the column chain starts and right halves couple
// left to the row chain ends; slot-0 stepping stones in cells (d-1, d+1) keep
// it connected. One cell grids instead pair off the two halves directly.
Embedding clique_embedding(const ChimeraSpec& spec) {
    check_dimensions(spec);
    const int s = std::min(spec.m, spec.n);
    std::vector<std::vector<int>> chains;
    if (s == 1) {
        chains.push_back({spec.vertex_index(0, 0, 0, 0)});
        chains.push_back({spec.vertex_index(0, 0, 1, 0)});
        for (int k = 1; k < spec.l; ++k)
            chains.push_back({spec.vertex_index(0, 0, 0, k), spec.vertex_index(0, 0, 1, k)});
    } else {
        for (int b = 0; b < s; ++b) {
            for (int k = 0; k < spec.l; ++k) {
                std::vector<int> chain;
                chain.reserve(static_cast<std::size_t>(s) + 1);
                for (int r = b; r < s; ++r) chain.push_back(spec.vertex_index(r, b, 0, k));
                for (int c = 0; c <= b; ++c) chain.push_back(spec.vertex_index(b, c, 1, k));
                chains.push_back(std::move(chain));
            }
        }
        std::vector<int> extra;
        for (int d = 1; d < s; ++d) {
            for (int k = 0; k < spec.l; ++k) {
                extra.push_back(spec.vertex_index(d - 1, d, 0, k));
                extra.push_back(spec.vertex_index(d - 1, d, 1, k));
            }
        }
        for (int d = 1; d + 1 < s; ++d) {
            extra.push_back(spec.vertex_index(d - 1, d + 1, 1, 0));
            extra.push_back(spec.vertex_index(d - 1, d + 1, 0, 0));
        }
        chains.push_back(std::move(extra));
    }

    Embedding out;
    int next = 0;
    for (auto& chain : chains) {
        const bool hit = std::any_of(chain.begin(), chain.end(), [&spec](int v) {
            return spec.missing.count(v) != 0;
        });
        if (hit) continue;
        std::sort(chain.begin(), chain.end());
        out.chains[next++] = std::move(chain);
    }
    if (next < 2)
        throw std::runtime_error(
            "clique_embedding: fewer than two chains survive the missing vertices");
    return out;
}

IsingModel embed_model(const IsingModel& logical, const Embedding& e,
                       const Graph& physical, double chain_strength) {
    if (chain_strength < 0.0)
        throw std::invalid_argument("embed_model: chain_strength must be nonnegative");
    std::vector<std::pair<int, int>> logical_edges;
    for (const auto& [key, w] : logical.couplers())
        if (w != 0.0) logical_edges.push_back(key);
    const Graph coupler_graph(logical.num_variables(), logical_edges);
    const EmbeddingCheck check = verify_embedding(e, physical, coupler_graph);
    if (!check.valid) throw std::invalid_argument("embed_model: " + check.diagnostic);

    IsingModel phys(physical.num_vertices(), logical.offset());
    for (int i = 0; i < logical.num_variables(); ++i) {
        const auto& chain = e.chains.at(i);
        const double share = logical.field(i) / static_cast<double>(chain.size());
        for (int p : chain) phys.add_field(p, share);
    }
    for (const auto& [key, w] : logical.couplers()) {
        if (w == 0.0) continue;
        std::vector<std::pair<int, int>> joints;
        for (int p : e.chains.at(key.first))
            for (int q : e.chains.at(key.second))
                if (physical.has_edge(p, q)) joints.emplace_back(p, q);
        const double share = w / static_cast<double>(joints.size());
        for (const auto& [p, q] : joints) phys.add_coupler(p, q, share);
    }
    if (chain_strength > 0.0) {
        std::uint64_t chain_edges = 0;
        for (int i = 0; i < logical.num_variables(); ++i) {
            const auto& chain = e.chains.at(i);
            for (std::size_t a = 0; a < chain.size(); ++a) {
                for (std::size_t b = a + 1; b < chain.size(); ++b) {
                    if (!physical.has_edge(chain[a], chain[b])) continue;
                    phys.add_coupler(chain[a], chain[b], -chain_strength);
                    ++chain_edges;
                }
            }
        }
        // An unbroken chain contributes -strength per chain edge; the offset
        // cancels it so physical energies reproduce logical energies.
        phys.add_offset(static_cast<double>(chain_edges) * chain_strength);
    }
    return phys;
}

SampleSet unembed(const SampleSet& physical_samples, const Embedding& e,
                  const IsingModel& logical, UnembedStrategy strategy) {
    const int n = logical.num_variables();
    for (int i = 0; i < n; ++i) {
        const auto it = e.chains.find(i);
        if (it == e.chains.end() || it->second.empty())
            throw std::invalid_argument("unembed: logical variable " + std::to_string(i) +
                                        " has no chain");
    }
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    for (const auto& [key, w] : logical.couplers()) {
        adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, w);
        adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, w);
    }

    SampleSet out;
    out.stats() = physical_samples.stats();
    for (const SampleRecord& rec : physical_samples.records()) {
        const Assignment& phys = rec.assignment;
        if (phys.domain != Domain::spin)
            throw std::invalid_argument("unembed: physical samples must be spin assignments");
        std::vector<int> sums(static_cast<std::size_t>(n), 0);
        std::vector<char> broken(static_cast<std::size_t>(n), 0);
        int broken_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& chain = e.chains.at(i);
            int sum = 0;
            for (int p : chain) {
                if (p < 0 || p >= phys.size())
                    throw std::out_of_range("unembed: chain member beyond sample length");
                sum += phys.values[static_cast<std::size_t>(p)];
            }
            sums[static_cast<std::size_t>(i)] = sum;
            if (std::abs(sum) != static_cast<int>(chain.size())) {
                broken[static_cast<std::size_t>(i)] = 1;
                ++broken_count;
            }
        }
        if (strategy == UnembedStrategy::discard_broken && broken_count > 0) continue;

        std::vector<std::int8_t> values(static_cast<std::size_t>(n), 0);
        if (strategy == UnembedStrategy::minimize_energy) {
            std::vector<int> pending;
            for (int i = 0; i < n; ++i) {
                if (broken[static_cast<std::size_t>(i)])
                    pending.push_back(i);
                else
                    values[static_cast<std::size_t>(i)] =
                        sums[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
            }
            // largest chain first; unresolved neighbors contribute nothing yet
            std::stable_sort(pending.begin(), pending.end(), [&e](int a, int b) {
                return e.chains.at(a).size() > e.chains.at(b).size();
            });
            std::vector<char> fixed(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                fixed[static_cast<std::size_t>(i)] = !broken[static_cast<std::size_t>(i)];
            for (int i : pending) {
                double field = logical.field(i);
                for (const auto& [j, w] : adj[static_cast<std::size_t>(i)])
                    if (fixed[static_cast<std::size_t>(j)])
                        field += w * values[static_cast<std::size_t>(j)];
                values[static_cast<std::size_t>(i)] = field > 0.0 ? -1 : 1;
                fixed[static_cast<std::size_t>(i)] = 1;
            }
        } else {
            std::vector<int> tied;
            for (int i = 0; i < n; ++i) {
                const int sum = sums[static_cast<std::size_t>(i)];
                if (sum > 0)
                    values[static_cast<std::size_t>(i)] = 1;
                else if (sum < 0)
                    values[static_cast<std::size_t>(i)] = -1;
                else
                    tied.push_back(i);
            }
            for (int i : tied) values[static_cast<std::size_t>(i)] = 1;
            for (int i : tied) {
                Assignment candidate = spin_assignment(values);
                candidate.values[static_cast<std::size_t>(i)] = 1;
                const double with_plus = ising_energy(logical, candidate);
                candidate.values[static_cast<std::size_t>(i)] = -1;
                const double with_minus = ising_energy(logical, candidate);
                values[static_cast<std::size_t>(i)] = with_plus <= with_minus ? 1 : -1;
            }
        }

        SampleRecord resolved;
        resolved.assignment = spin_assignment(std::move(values));
        resolved.energy = ising_energy(logical, resolved.assignment);
        resolved.feasible = rec.feasible;
        resolved.broken_chains = broken_count;
        out.push(std::move(resolved));
    }
    return out;
}

void write_embedding(const Embedding& e, std::ostream& out) {
    for (const auto& [k, chain] : e.chains) {
        out << k << ':';
        for (int v : chain) out << ' ' << v;
        out << '\n';
    }
}

Embedding read_embedding(std::istream& in) {
    Embedding e;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("embedding line is missing ':'", line_no);
        std::istringstream head(line.substr(0, colon));
        int key = 0;
        if (!(head >> key) || !(head >> std::ws).eof())
            throw ParseError("bad logical variable before ':'", line_no);
        if (e.chains.count(key))
            throw ParseError("duplicate chain for logical variable " + std::to_string(key),
                             line_no);
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> chain;
        int v = 0;
        while (rest >> v) chain.push_back(v);
        if (!rest.eof()) throw ParseError("bad chain member", line_no);
        if (chain.empty()) throw ParseError("empty chain", line_no);
        e.chains.emplace(key, std::move(chain));
    }
    return e;
}

void save_embedding(const Embedding& e, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_embedding(e, out);
    if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

Embedding load_embedding(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_embedding(in);
}

}  // namespace qopt
