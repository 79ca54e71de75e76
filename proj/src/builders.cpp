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

#include "qopt/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qopt {

namespace {

void check_binary(const Assignment& x, int expected, const char* what) {
    if (x.domain != Domain::binary)
        throw std::invalid_argument(std::string(what) + ": assignment must be binary");
    if (x.size() != expected)
        throw std::invalid_argument(std::string(what) + ": assignment length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(expected));
}

}  // namespace

QuboModel build_mis_qubo(const Graph& g, double linear_weight, double penalty) {
    // An edge penalty must beat the vertex bonus or violating pairs win.
    if (!(penalty > -linear_weight) || !(-linear_weight > 0.0))
        throw std::invalid_argument(
            "build_mis_qubo: weights must satisfy penalty > -linear_weight > 0");
    QuboModel q(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) q.add_linear(v, linear_weight);
    for (const auto& [u, v] : g.edges()) q.add_quadratic(u, v, penalty);
    return q;
}

QuboModel build_clique_kfixed_qubo(const Graph& g, int k, double a, double b) {
    if (k < 1) throw std::invalid_argument("build_clique_kfixed_qubo: k must be positive");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("build_clique_kfixed_qubo: weights must be positive");
    const int n = g.num_vertices();
    QuboModel q(n, a * k * k + b * k * (k - 1) / 2.0);
    for (int v = 0; v < n; ++v) q.add_linear(v, a * (1.0 - 2.0 * k));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) q.add_quadratic(i, j, 2.0 * a);
    for (const auto& [u, v] : g.edges()) q.add_quadratic(u, v, -b);
    return q;
}

QuboModel build_clique_kfixed_qubo(const Graph& g, int k) {
    return build_clique_kfixed_qubo(g, k, k + 1.0, 1.0);
}

IsingModel build_bisection_ising(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("build_bisection_ising: need at least 2 vertices");
    const double b = 1.0;
    const double a = g.max_degree() / 4.0 + 1.0;
    IsingModel m(n, a * n + b * g.num_edges() / 2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.add_coupler(i, j, 2.0 * a);
    for (const auto& [u, v] : g.edges()) m.add_coupler(u, v, -b / 2.0);
    return m;
}

KwayVarIndex::KwayVarIndex(int num_vertices, int k) : n_(num_vertices), k_(k) {
    if (num_vertices < 0) throw std::invalid_argument("KwayVarIndex: negative vertex count");
    if (k < 1) throw std::invalid_argument("KwayVarIndex: part count must be positive");
}

int KwayVarIndex::index(int v, int part) const {
    if (v < 0 || v >= n_) throw std::out_of_range("KwayVarIndex: vertex out of range");
    if (part < 0 || part >= k_) throw std::out_of_range("KwayVarIndex: part out of range");
    return v * k_ + part;
}

std::pair<int, int> KwayVarIndex::vertex_part(int index) const {
    if (index < 0 || index >= num_variables())
        throw std::out_of_range("KwayVarIndex: variable index out of range");
    return {index / k_, index % k_};
}

std::pair<QuboModel, KwayVarIndex> build_kway_qubo(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("build_kway_qubo: need k >= 2");
    const int n = g.num_vertices();
    const KwayVarIndex idx(n, k);
    const double a = n / 2.0 + 1.0;
    const double b = a;
    const double c = 1.0;
    const double target = static_cast<double>(n) / k;

    QuboModel q(idx.num_variables(),
                a * n + b * target * n + c * k * g.num_edges());
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i)
            q.add_linear(idx.index(v, i), -a + b * (1.0 - 2.0 * target));
    // one part per vertex
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                q.add_quadratic(idx.index(v, i), idx.index(v, j), 2.0 * a);
    // balance within each part
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                q.add_quadratic(idx.index(v, i), idx.index(w, i), 2.0 * b);
    // reward for keeping an edge inside one part
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i < k; ++i)
            q.add_quadratic(idx.index(u, i), idx.index(v, i), -c);
    return {std::move(q), idx};
}

ChVarIndex::ChVarIndex(const Graph& g, int k) : n_(g.num_vertices()), k_(k) {
    if (k < 1) throw std::invalid_argument("ChVarIndex: part count must be positive");
    pair_base_.reserve(static_cast<std::size_t>(n_) + 1);
    for (int v = 0; v < n_; ++v) {
        pair_base_.push_back(static_cast<int>(pairs_.size()));
        pairs_.emplace_back(v, v);
        for (int w : g.neighbors(v)) pairs_.emplace_back(v, w);
    }
    pair_base_.push_back(static_cast<int>(pairs_.size()));
}

int ChVarIndex::num_variables() const noexcept {
    return k_ * (2 * n_ + static_cast<int>(pairs_.size()));
}

int ChVarIndex::core_index(int v, int part) const {
    if (v < 0 || v >= n_) throw std::out_of_range("ChVarIndex: vertex out of range");
    if (part < 0 || part >= k_) throw std::out_of_range("ChVarIndex: part out of range");
    return v * k_ + part;
}

int ChVarIndex::halo_index(int v, int part) const {
    return n_ * k_ + core_index(v, part);
}

int ChVarIndex::slack_index(int v, int w, int part) const {
    if (v < 0 || v >= n_) throw std::out_of_range("ChVarIndex: vertex out of range");
    if (part < 0 || part >= k_) throw std::out_of_range("ChVarIndex: part out of range");
    for (int slot = pair_base_[static_cast<std::size_t>(v)];
         slot < pair_base_[static_cast<std::size_t>(v) + 1]; ++slot) {
        if (pairs_[static_cast<std::size_t>(slot)].second == w)
            return 2 * n_ * k_ + slot * k_ + part;
    }
    throw std::invalid_argument("ChVarIndex: " + std::to_string(w) + " is not " +
                                std::to_string(v) + " or one of its neighbors");
}

std::pair<QuboModel, ChVarIndex> build_ch_qubo(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("build_ch_qubo: need k >= 1");
    const int n = g.num_vertices();
    const ChVarIndex idx(g, k);
    const double a = static_cast<double>(n) * n + 1.0;
    const double b = 2.0 * n + 1.0;
    const double c = 1.0;

    QuboModel q(idx.num_variables(), a * n);
    // one core part per vertex: A sum_v (sum_i c_vi - 1)^2
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            q.add_linear(idx.core_index(v, i), -a);
            for (int j = i + 1; j < k; ++j)
                q.add_quadratic(idx.core_index(v, i), idx.core_index(v, j), 2.0 * a);
        }
    }
    // consistency: B (h_vi - c_wi - z_vwi)^2 per neighborhood pair per part
    for (const auto& [v, w] : idx.pairs()) {
        for (int i = 0; i < k; ++i) {
            const int h = idx.halo_index(v, i);
            const int cw = idx.core_index(w, i);
            const int z = idx.slack_index(v, w, i);
            q.add_linear(h, b);
            q.add_linear(cw, b);
            q.add_linear(z, b);
            q.add_quadratic(h, cw, -2.0 * b);
            q.add_quadratic(h, z, -2.0 * b);
            q.add_quadratic(cw, z, 2.0 * b);
        }
    }
    // storage cost: C sum_i (sum_v h_vi)^2
    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < n; ++v) {
            q.add_linear(idx.halo_index(v, i), c);
            for (int w = v + 1; w < n; ++w)
                q.add_quadratic(idx.halo_index(v, i), idx.halo_index(w, i), 2.0 * c);
        }
    }
    return {std::move(q), idx};
}

MisDecode decode_mis(const Graph& g, const Assignment& x) {
    check_binary(x, g.num_vertices(), "decode_mis");
    MisDecode out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (x.values[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
    out.feasible = true;
    for (const auto& [u, v] : g.edges()) {
        if (x.values[static_cast<std::size_t>(u)] && x.values[static_cast<std::size_t>(v)]) {
            out.feasible = false;
            break;
        }
    }
    return out;
}

KwayDecode decode_kway(const KwayVarIndex& index, const Assignment& x) {
    check_binary(x, index.num_variables(), "decode_kway");
    KwayDecode out;
    std::vector<int> parts(static_cast<std::size_t>(index.num_vertices()), -1);
    for (int v = 0; v < index.num_vertices(); ++v) {
        int hits = 0;
        for (int i = 0; i < index.k(); ++i) {
            if (x.values[static_cast<std::size_t>(index.index(v, i))]) {
                ++hits;
                parts[static_cast<std::size_t>(v)] = i;
            }
        }
        if (hits != 1) out.bad_vertices.push_back(v);
    }
    out.feasible = out.bad_vertices.empty();
    if (out.feasible) out.partition = Partition{index.k(), std::move(parts)};
    return out;
}

ChDecode decode_ch(const ChVarIndex& index, const Graph&, const Assignment& x) {
    check_binary(x, index.num_variables(), "decode_ch");
    ChDecode out;
    out.halos.assign(static_cast<std::size_t>(index.k()), {});
    for (int i = 0; i < index.k(); ++i)
        for (int v = 0; v < index.num_vertices(); ++v)
            if (x.values[static_cast<std::size_t>(index.halo_index(v, i))])
                out.halos[static_cast<std::size_t>(i)].push_back(v);

    std::vector<int> parts(static_cast<std::size_t>(index.num_vertices()), -1);
    bool one_hot = true;
    for (int v = 0; v < index.num_vertices() && out.diagnostic.empty(); ++v) {
        int hits = 0;
        for (int i = 0; i < index.k(); ++i) {
            if (x.values[static_cast<std::size_t>(index.core_index(v, i))]) {
                ++hits;
                parts[static_cast<std::size_t>(v)] = i;
            }
        }
        if (hits != 1) {
            one_hot = false;
            out.diagnostic = "core row for vertex " + std::to_string(v) + " has " +
                             std::to_string(hits) + " parts set";
        }
    }
    if (one_hot) out.cores = Partition{index.k(), parts};

    for (const auto& [v, w] : index.pairs()) {
        if (!out.diagnostic.empty()) break;
        for (int i = 0; i < index.k(); ++i) {
            const int h = x.values[static_cast<std::size_t>(index.halo_index(v, i))];
            const int cw = x.values[static_cast<std::size_t>(index.core_index(w, i))];
            const int z = x.values[static_cast<std::size_t>(index.slack_index(v, w, i))];
            if (h - cw - z != 0) {
                out.diagnostic = "consistency violated for (v=" + std::to_string(v) +
                                 ", w=" + std::to_string(w) + ", part " + std::to_string(i) +
                                 "): h=" + std::to_string(h) + ", c=" + std::to_string(cw) +
                                 ", z=" + std::to_string(z);
                break;
            }
        }
    }
    out.feasible = out.diagnostic.empty();
    return out;
}

Assignment encode_kway(const KwayVarIndex& index, const Partition& p) {
    if (p.k != index.k() ||
        static_cast<int>(p.parts.size()) != index.num_vertices())
        throw std::invalid_argument("encode_kway: partition shape mismatch");
    std::vector<std::int8_t> x(static_cast<std::size_t>(index.num_variables()), 0);
    for (int v = 0; v < index.num_vertices(); ++v) {
        const int part = p.parts[static_cast<std::size_t>(v)];
        x[static_cast<std::size_t>(index.index(v, part))] = 1;
    }
    return binary_assignment(std::move(x));
}

Assignment encode_ch(const ChVarIndex& index, const Graph& g, const Partition& cores) {
    if (cores.k != index.k() ||
        static_cast<int>(cores.parts.size()) != index.num_vertices())
        throw std::invalid_argument("encode_ch: partition shape mismatch");
    std::vector<std::int8_t> x(static_cast<std::size_t>(index.num_variables()), 0);
    for (int v = 0; v < index.num_vertices(); ++v)
        x[static_cast<std::size_t>(
            index.core_index(v, cores.parts[static_cast<std::size_t>(v)]))] = 1;
    // h_vi = 1 iff v or one of its neighbors has its core in part i; then
    // z_vwi = h_vi - c_wi is the unique choice that zeroes every penalty.
    for (int v = 0; v < index.num_vertices(); ++v) {
        for (int i = 0; i < index.k(); ++i) {
            bool stored = cores.parts[static_cast<std::size_t>(v)] == i;
            for (int w : g.neighbors(v))
                stored = stored || cores.parts[static_cast<std::size_t>(w)] == i;
            if (stored) x[static_cast<std::size_t>(index.halo_index(v, i))] = 1;
        }
    }
    for (const auto& [v, w] : index.pairs()) {
        for (int i = 0; i < index.k(); ++i) {
            const int h = x[static_cast<std::size_t>(index.halo_index(v, i))];
            const int cw = x[static_cast<std::size_t>(index.core_index(w, i))];
            x[static_cast<std::size_t>(index.slack_index(v, w, i))] =
                static_cast<std::int8_t>(h - cw);
        }
    }
    return binary_assignment(std::move(x));
}

}  // namespace qopt
