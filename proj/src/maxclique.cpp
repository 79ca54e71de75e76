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

#include "qopt/maxclique.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qopt/rng.hpp"

namespace qopt {

namespace {

class Bits {
 public:
    Bits() = default;
    explicit Bits(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= word(i); }
    void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~word(i); }
    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] & word(i)) != 0;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Lowest set bit, -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    Bits& operator&=(const Bits& rhs) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= rhs.words_[k];
        return *this;
    }

    void and_not(const Bits& rhs) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~rhs.words_[k];
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

 private:
    static std::uint64_t word(int i) { return std::uint64_t{1} << (i & 63); }

    std::vector<std::uint64_t> words_;
};

std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> adj(static_cast<std::size_t>(g.num_vertices()),
                          Bits(g.num_vertices()));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
    }
    return adj;
}

// Branch and bound of the Tomita style: candidates are greedily colored and
// visited in descending color order, so color is a per-vertex bound on how
// much the clique can still grow.
struct ExactSearch {
    const std::vector<Bits>& adj;
    std::vector<int> best;
    std::vector<int> current;
    std::uint64_t branch_nodes = 0;

    void color_sort(const Bits& p, std::vector<int>& order, std::vector<int>& colors) {
        order.clear();
        colors.clear();
        Bits uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bits q = uncolored;
            for (int v = q.first(); v >= 0; v = q.first()) {
                q.reset(v);
                uncolored.reset(v);
                q.and_not(adj[static_cast<std::size_t>(v)]);
                order.push_back(v);
                colors.push_back(color);
            }
        }
    }

    void expand(Bits p) {
        ++branch_nodes;
        if (!p.any()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<int> order;
        std::vector<int> colors;
        color_sort(p, order, colors);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + static_cast<std::size_t>(colors[static_cast<std::size_t>(i)]) <=
                best.size())
                return;
            const int v = order[static_cast<std::size_t>(i)];
            Bits next = p;
            next &= adj[static_cast<std::size_t>(v)];
            current.push_back(v);
            expand(std::move(next));
            current.pop_back();
            p.reset(v);
        }
    }
};

// Steps a geometric schedule takes to cool t0 below t_min.
std::uint64_t freeze_steps(double t0, double alpha, double t_min) {
    if (!(t0 > t_min)) return 0;
    const double k = std::log(t_min / t0) / std::log(alpha);
    return static_cast<std::uint64_t>(k) + 1;
}

struct SplitSearch {
    const Graph& g;
    const std::vector<Bits>& adj;
    int size_limit;
    const std::function<CliqueResult(const Graph&)>& subsolver;
    std::vector<int> committed;
    std::vector<int> best;
    std::uint64_t solver_calls = 0;
    std::uint64_t branch_nodes = 0;

    void solve(Bits candidates) {
        ++branch_nodes;
        const int count = candidates.count();
        if (committed.size() + static_cast<std::size_t>(count) <= best.size()) return;
        if (count <= size_limit) {
            std::vector<int> vertices;
            vertices.reserve(static_cast<std::size_t>(count));
            candidates.for_each([&vertices](int v) { vertices.push_back(v); });
            std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
            for (std::size_t i = 0; i < vertices.size(); ++i)
                local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                for (int w : g.neighbors(vertices[i])) {
                    const int lw = local[static_cast<std::size_t>(w)];
                    if (lw > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), lw);
                }
            }
            const CliqueResult sub = subsolver(Graph(count, edges));
            ++solver_calls;
            branch_nodes += sub.branch_nodes;
            if (committed.size() + sub.vertices.size() > best.size()) {
                best = committed;
                for (int lv : sub.vertices)
                    best.push_back(vertices[static_cast<std::size_t>(lv)]);
            }
            return;
        }
        int pivot = -1;
        int pivot_degree = -1;
        candidates.for_each([&](int v) {
            Bits overlap = adj[static_cast<std::size_t>(v)];
            overlap &= candidates;
            const int d = overlap.count();
            if (d > pivot_degree) {
                pivot_degree = d;
                pivot = v;
            }
        });
        Bits with_pivot = candidates;
        with_pivot &= adj[static_cast<std::size_t>(pivot)];
        committed.push_back(pivot);
        solve(std::move(with_pivot));
        committed.pop_back();
        candidates.reset(pivot);
        solve(std::move(candidates));
    }
};

}  // namespace

CliqueResult make_clique_result(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.num_vertices())
            throw std::out_of_range("make_clique_result: vertex out of range");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw std::invalid_argument("make_clique_result: duplicate vertex");
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j]))
                throw std::invalid_argument(
                    "make_clique_result: vertices " + std::to_string(vertices[i]) + " and " +
                    std::to_string(vertices[j]) + " are not adjacent");
    }
    CliqueResult out;
    out.vertices = std::move(vertices);
    return out;
}

CliqueResult exact_clique(const Graph& g, int guard) {
    if (g.num_vertices() > guard)
        throw std::length_error("exact_clique: graph exceeds the " + std::to_string(guard) +
                                " vertex guard");
    const std::vector<Bits> adj = adjacency_bits(g);
    ExactSearch search{adj, {}, {}, 0};
    Bits all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all.set(v);
    search.expand(std::move(all));
    CliqueResult out = make_clique_result(g, std::move(search.best));
    out.branch_nodes = search.branch_nodes;
    return out;
}

CliqueResult greedy_clique(const Graph& g, std::uint64_t seed) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("greedy_clique: empty graph");
    Rng rng(seed);
    const std::vector<Bits> adj = adjacency_bits(g);
    Bits candidates(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) candidates.set(v);
    std::vector<int> clique;
    while (candidates.any()) {
        int best_degree = -1;
        std::vector<int> tied;
        candidates.for_each([&](int v) {
            Bits overlap = adj[static_cast<std::size_t>(v)];
            overlap &= candidates;
            const int d = overlap.count();
            if (d > best_degree) {
                best_degree = d;
                tied.assign(1, v);
            } else if (d == best_degree) {
                tied.push_back(v);
            }
        });
        const int pick =
            tied[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(tied.size()) - 1))];
        clique.push_back(pick);
        candidates &= adj[static_cast<std::size_t>(pick)];
    }
    CliqueResult out = make_clique_result(g, std::move(clique));
    out.seed = seed;
    return out;
}

CliqueResult sa_clique(const Graph& g, const SaCliqueOptions& options) {
    if (!(options.alpha > 0.0) || !(options.alpha < 1.0))
        throw std::invalid_argument("sa_clique: alpha must be in (0, 1)");
    if (!(options.t_min > 0.0))
        throw std::invalid_argument("sa_clique: t_min must be positive");
    if (options.step_scale < 1)
        throw std::invalid_argument("sa_clique: step_scale must be positive");

    const int n = g.num_vertices();
    const CliqueResult greedy = greedy_clique(g, options.seed);

    // Sequential coloring of the whole graph upper-bounds the clique number.
    const std::vector<Bits> adj = adjacency_bits(g);
    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    ExactSearch colorer{adj, {}, {}, 0};
    std::vector<int> order;
    std::vector<int> colors;
    colorer.color_sort(all, order, colors);
    const int color_bound = colors.empty() ? 0 : colors.back();

    // One annealing run at fixed subset size m; success means zero energy.
    std::uint64_t probes = 0;
    auto probe = [&](int m, std::vector<int>& witness) -> bool {
        ++probes;
        if (m > n) return false;
        Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(m)));
        std::vector<char> in_s(static_cast<std::size_t>(n), 0);
        std::vector<int> members;
        members.reserve(static_cast<std::size_t>(m));
        for (int v : greedy.vertices) {
            if (static_cast<int>(members.size()) == m) break;
            in_s[static_cast<std::size_t>(v)] = 1;
            members.push_back(v);
        }
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        rng.shuffle(pool);
        for (int v : pool) {
            if (static_cast<int>(members.size()) == m) break;
            if (in_s[static_cast<std::size_t>(v)]) continue;
            in_s[static_cast<std::size_t>(v)] = 1;
            members.push_back(v);
        }
        std::vector<int> outside;
        outside.reserve(static_cast<std::size_t>(n - m));
        for (int v = 0; v < n; ++v)
            if (!in_s[static_cast<std::size_t>(v)]) outside.push_back(v);

        std::vector<int> deg_s(static_cast<std::size_t>(n), 0);
        long long inside = 0;
        for (int u : members) {
            for (int w : g.neighbors(u)) {
                ++deg_s[static_cast<std::size_t>(w)];
                if (in_s[static_cast<std::size_t>(w)] && w > u) ++inside;
            }
        }
        long long energy = static_cast<long long>(m) * (m - 1) / 2 - inside;
        if (energy == 0) {
            witness = members;
            return true;
        }
        if (outside.empty()) return false;

        double temp = static_cast<double>(m);
        const std::uint64_t budget = std::max(
            freeze_steps(temp, options.alpha, options.t_min),
            static_cast<std::uint64_t>(options.step_scale) * static_cast<std::uint64_t>(n) *
                static_cast<std::uint64_t>(m));
        for (std::uint64_t step = 0; step < budget; ++step, temp *= options.alpha) {
            const int iu = rng.uniform_int(0, m - 1);
            const int iw = rng.uniform_int(0, static_cast<int>(outside.size()) - 1);
            const int u = members[static_cast<std::size_t>(iu)];
            const int w = outside[static_cast<std::size_t>(iw)];
            const long long delta = deg_s[static_cast<std::size_t>(u)] -
                                    (deg_s[static_cast<std::size_t>(w)] -
                                     (g.has_edge(u, w) ? 1 : 0));
            bool accept = delta <= 0;
            if (!accept)
                accept = rng.uniform01() <
                         std::exp(-static_cast<double>(delta) / temp);
            if (!accept) continue;
            members[static_cast<std::size_t>(iu)] = w;
            outside[static_cast<std::size_t>(iw)] = u;
            in_s[static_cast<std::size_t>(u)] = 0;
            in_s[static_cast<std::size_t>(w)] = 1;
            for (int x : g.neighbors(u)) --deg_s[static_cast<std::size_t>(x)];
            for (int x : g.neighbors(w)) ++deg_s[static_cast<std::size_t>(x)];
            energy += delta;
            if (energy == 0) {
                witness = members;
                return true;
            }
        }
        return false;
    };

    std::vector<int> best_witness = greedy.vertices;
    int lo = greedy.size();
    int hi = std::max(color_bound, lo);
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        std::vector<int> witness;
        if (probe(mid, witness)) {
            best_witness = witness;
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    CliqueResult out = make_clique_result(g, std::move(best_witness));
    out.seed = options.seed;
    out.branch_nodes = probes;
    return out;
}

CliqueResult sa_clique(const Graph& g, double alpha, std::uint64_t seed) {
    SaCliqueOptions options;
    options.alpha = alpha;
    options.seed = seed;
    return sa_clique(g, options);
}

CliqueResult split_solve(const Graph& g, int size_limit,
                         const std::function<CliqueResult(const Graph&)>& subsolver) {
    if (size_limit < 2)
        throw std::invalid_argument("split_solve: size_limit must be at least 2");
    if (!subsolver) throw std::invalid_argument("split_solve: subsolver is empty");
    const std::vector<Bits> adj = adjacency_bits(g);
    SplitSearch search{g, adj, size_limit, subsolver, {}, {}, 0, 0};
    Bits all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all.set(v);
    search.solve(std::move(all));
    CliqueResult out = make_clique_result(g, std::move(search.best));
    out.solver_calls = search.solver_calls;
    out.branch_nodes = search.branch_nodes;
    return out;
}

int size_limit_for_qubits(std::int64_t qubits) {
    if (qubits < 8)
        throw std::invalid_argument("size_limit_for_qubits: need at least 8 qubits");
    // Square-cell chimera C(M,M,4) has 8M^2 qubits; invert and take the
    // nearest grid, then the complete graph limit K = 4M + 1.
    const auto m = std::llround(std::sqrt(static_cast<double>(qubits) / 8.0));
    return static_cast<int>(4 * std::max<long long>(m, 1) + 1);
}

}  // namespace qopt
