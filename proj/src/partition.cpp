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

#include "qopt/partition.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "qopt/parse_error.hpp"
#include "qopt/rng.hpp"

namespace qopt {

namespace {

void check_partition(const Graph& g, const Partition& p) {
    if (p.k < 1) throw std::invalid_argument("partition: k must be positive");
    if (static_cast<int>(p.parts.size()) != g.num_vertices())
        throw std::invalid_argument("partition: parts size != vertex count");
    for (int x : p.parts)
        if (x < 0 || x >= p.k)
            throw std::invalid_argument("partition: part id out of range");
}

// ---------------------------------------------------------------------------
// Multilevel machinery. Coarsening produces weighted multinode graphs: vertex
// weights count the original vertices merged in, edge weights accumulate the
// collapsed parallel edges, so cuts measured on any level equal cuts on the
// original graph.

struct Level {
    int n = 0;
    std::vector<std::tuple<int, int, long long>> edges;  // u < v
    std::vector<std::vector<std::pair<int, long long>>> adj;
    std::vector<long long> vweight;
};

void build_adj(Level& lv) {
    lv.adj.assign(static_cast<std::size_t>(lv.n), {});
    for (const auto& [u, v, w] : lv.edges) {
        lv.adj[static_cast<std::size_t>(u)].emplace_back(v, w);
        lv.adj[static_cast<std::size_t>(v)].emplace_back(u, w);
    }
}

Level level_from_graph(const Graph& g) {
    Level lv;
    lv.n = g.num_vertices();
    lv.vweight.assign(static_cast<std::size_t>(lv.n), 1);
    lv.edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) lv.edges.emplace_back(u, v, 1);
    build_adj(lv);
    return lv;
}

// Randomized heavy-edge matching followed by contraction of the matched
// pairs. Returns the old->new vertex map, or an empty map when nothing
// matched (isolated vertices only), which ends the coarsening phase.
std::vector<int> coarsen(const Level& lv, Level& out, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(lv.n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    std::vector<int> match(static_cast<std::size_t>(lv.n), -1);
    int merged = 0;
    for (int v : order) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        int best = -1;
        long long best_w = 0;
        for (const auto& [u, w] : lv.adj[static_cast<std::size_t>(v)]) {
            if (match[static_cast<std::size_t>(u)] == -1 && w > best_w) {
                best_w = w;
                best = u;
            }
        }
        if (best != -1) {
            match[static_cast<std::size_t>(v)] = best;
            match[static_cast<std::size_t>(best)] = v;
            ++merged;
        }
    }
    if (merged == 0) return {};

    std::vector<int> map(static_cast<std::size_t>(lv.n), -1);
    int next = 0;
    for (int v = 0; v < lv.n; ++v) {
        if (map[static_cast<std::size_t>(v)] != -1) continue;
        map[static_cast<std::size_t>(v)] = next;
        const int m = match[static_cast<std::size_t>(v)];
        if (m != -1) map[static_cast<std::size_t>(m)] = next;
        ++next;
    }

    out.n = next;
    out.vweight.assign(static_cast<std::size_t>(next), 0);
    for (int v = 0; v < lv.n; ++v)
        out.vweight[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] +=
            lv.vweight[static_cast<std::size_t>(v)];

    std::map<std::pair<int, int>, long long> acc;
    for (const auto& [u, v, w] : lv.edges) {
        int a = map[static_cast<std::size_t>(u)];
        int b = map[static_cast<std::size_t>(v)];
        if (a == b) continue;  // internal to a multinode
        if (a > b) std::swap(a, b);
        acc[{a, b}] += w;
    }
    out.edges.clear();
    out.edges.reserve(acc.size());
    for (const auto& [e, w] : acc) out.edges.emplace_back(e.first, e.second, w);
    build_adj(out);
    return map;
}

// Incremental bookkeeping for single-vertex moves: weighted edge mass from
// each vertex into each part, per-part vertex weight, and the running cut.
struct MoveState {
    int k = 0;
    std::vector<long long> cnt;  // [v * k + p]
    std::vector<long long> pw;
    long long cut = 0;

    long long& at(int v, int p) {
        return cnt[static_cast<std::size_t>(v) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(p)];
    }
};

MoveState make_state(const Level& lv, const std::vector<int>& parts, int k) {
    MoveState st;
    st.k = k;
    st.cnt.assign(static_cast<std::size_t>(lv.n) * static_cast<std::size_t>(k), 0);
    st.pw.assign(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < lv.n; ++v)
        st.pw[static_cast<std::size_t>(parts[static_cast<std::size_t>(v)])] +=
            lv.vweight[static_cast<std::size_t>(v)];
    for (const auto& [u, v, w] : lv.edges) {
        st.at(u, parts[static_cast<std::size_t>(v)]) += w;
        st.at(v, parts[static_cast<std::size_t>(u)]) += w;
        if (parts[static_cast<std::size_t>(u)] != parts[static_cast<std::size_t>(v)])
            st.cut += w;
    }
    return st;
}

void apply_move(const Level& lv, std::vector<int>& parts, MoveState& st, int v, int b) {
    const int a = parts[static_cast<std::size_t>(v)];
    st.cut += st.at(v, a) - st.at(v, b);
    st.pw[static_cast<std::size_t>(a)] -= lv.vweight[static_cast<std::size_t>(v)];
    st.pw[static_cast<std::size_t>(b)] += lv.vweight[static_cast<std::size_t>(v)];
    parts[static_cast<std::size_t>(v)] = b;
    for (const auto& [u, w] : lv.adj[static_cast<std::size_t>(v)]) {
        st.at(u, a) -= w;
        st.at(u, b) += w;
    }
}

// Greedy repair: while some part weight violates [lo, cap], move the vertex
// that most reduces the violation from the heaviest part to the lightest,
// breaking ties toward the smallest cut increase. With unit vertex weights
// (the finest level) this always reaches zero violation; on coarse levels a
// lumpy multinode can stall it, and the finer levels finish the job.
void repair_balance(const Level& lv, std::vector<int>& parts, MoveState& st,
                    long long lo, long long cap) {
    const int k = st.k;
    const auto part_violation = [lo, cap](long long w) {
        return std::max(0LL, w - cap) + std::max(0LL, lo - w);
    };
    long long cur = 0;
    for (int p = 0; p < k; ++p) cur += part_violation(st.pw[static_cast<std::size_t>(p)]);
    while (cur > 0) {
        int a = 0, b = 0;
        for (int p = 1; p < k; ++p) {
            if (st.pw[static_cast<std::size_t>(p)] > st.pw[static_cast<std::size_t>(a)]) a = p;
            if (st.pw[static_cast<std::size_t>(p)] < st.pw[static_cast<std::size_t>(b)]) b = p;
        }
        if (a == b) break;
        int best_v = -1;
        long long best_after = cur;
        long long best_d = 0;
        const long long va = part_violation(st.pw[static_cast<std::size_t>(a)]);
        const long long vb = part_violation(st.pw[static_cast<std::size_t>(b)]);
        for (int v = 0; v < lv.n; ++v) {
            if (parts[static_cast<std::size_t>(v)] != a) continue;
            const long long w = lv.vweight[static_cast<std::size_t>(v)];
            const long long after = cur - va - vb +
                part_violation(st.pw[static_cast<std::size_t>(a)] - w) +
                part_violation(st.pw[static_cast<std::size_t>(b)] + w);
            const long long d = st.at(v, a) - st.at(v, b);
            if (after < best_after || (after == best_after && best_v != -1 && d < best_d)) {
                best_after = after;
                best_d = d;
                best_v = v;
            }
        }
        if (best_v == -1) break;  // no move improves; lumpy weights
        apply_move(lv, parts, st, best_v, b);
        cur = best_after;
    }
}

// One pass of greedy cut-reducing moves. A move is legal when the source
// part keeps at least lo weight and the target stays at or under cap, so a
// balanced partition stays balanced.
bool move_pass(const Level& lv, std::vector<int>& parts, MoveState& st,
               long long lo, long long cap, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(lv.n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    bool any = false;
    std::vector<int> cand;
    for (int v : order) {
        const int a = parts[static_cast<std::size_t>(v)];
        const long long w = lv.vweight[static_cast<std::size_t>(v)];
        if (st.pw[static_cast<std::size_t>(a)] - w < lo) continue;
        cand.clear();
        for (const auto& [u, ew] : lv.adj[static_cast<std::size_t>(v)]) {
            (void)ew;
            const int p = parts[static_cast<std::size_t>(u)];
            if (p != a && std::find(cand.begin(), cand.end(), p) == cand.end())
                cand.push_back(p);
        }
        int best = -1;
        long long best_d = 0;  // strict improvement only
        for (int p : cand) {
            if (st.pw[static_cast<std::size_t>(p)] + w > cap) continue;
            const long long d = st.at(v, a) - st.at(v, p);
            if (d < best_d) {
                best_d = d;
                best = p;
            }
        }
        if (best != -1) {
            apply_move(lv, parts, st, v, best);
            any = true;
        }
    }
    return any;
}

// One pass of endpoint swaps over cut edges. Swaps keep part weights intact
// when the two vertex weights agree; otherwise both new weights are checked.
bool swap_pass(const Level& lv, std::vector<int>& parts, MoveState& st,
               long long lo, long long cap, Rng& rng) {
    std::vector<int> order(lv.edges.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    bool any = false;
    for (int ei : order) {
        const auto& [u, v, w] = lv.edges[static_cast<std::size_t>(ei)];
        const int a = parts[static_cast<std::size_t>(u)];
        const int b = parts[static_cast<std::size_t>(v)];
        if (a == b) continue;
        const long long wu = lv.vweight[static_cast<std::size_t>(u)];
        const long long wv = lv.vweight[static_cast<std::size_t>(v)];
        if (wu != wv) {
            const long long na = st.pw[static_cast<std::size_t>(a)] - wu + wv;
            const long long nb = st.pw[static_cast<std::size_t>(b)] - wv + wu;
            if (na < lo || na > cap || nb < lo || nb > cap) continue;
        }
        const long long d = (st.at(u, a) - st.at(u, b)) +
                            (st.at(v, b) - st.at(v, a)) + 2 * w;
        if (d < 0) {
            apply_move(lv, parts, st, u, b);
            apply_move(lv, parts, st, v, a);
            any = true;
        }
    }
    return any;
}

constexpr int kRefinePasses = 8;

void refine_level(const Level& lv, std::vector<int>& parts, int k,
                  long long lo, long long cap, Rng& rng) {
    MoveState st = make_state(lv, parts, k);
    repair_balance(lv, parts, st, lo, cap);
    for (int pass = 0; pass < kRefinePasses; ++pass) {
        const bool moved = move_pass(lv, parts, st, lo, cap, rng);
        const bool swapped = swap_pass(lv, parts, st, lo, cap, rng);
        if (!moved && !swapped) break;
    }
}

// Exhaustive initial partition. Restricted-growth assignment (vertex v may
// open at most one new part) quotients out part relabelings; partial weights
// bound the balance violation from below, partial cut only grows, so the
// lexicographic (violation, cut) prune is sound.
std::vector<int> initial_exhaustive(const Level& lv, int k, long long lo, long long cap) {
    const int n = lv.n;
    std::vector<int> parts(static_cast<std::size_t>(n), -1);
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    long long best_viol = LLONG_MAX;
    long long best_cut = LLONG_MAX;
    std::vector<long long> pw(static_cast<std::size_t>(k), 0);
    long long rem = 0;
    for (long long w : lv.vweight) rem += w;
    long long cut = 0;

    std::function<void(int, int)> go = [&](int v, int used) {
        long long over = 0, need = 0;
        for (int p = 0; p < k; ++p) {
            over += std::max(0LL, pw[static_cast<std::size_t>(p)] - cap);
            need += std::max(0LL, lo - pw[static_cast<std::size_t>(p)]);
        }
        if (v == n) {
            const long long viol = over + need;
            if (viol < best_viol || (viol == best_viol && cut < best_cut)) {
                best_viol = viol;
                best_cut = cut;
                best = parts;
            }
            return;
        }
        const long long lb = over + std::max(0LL, need - rem);
        if (lb > best_viol || (lb == best_viol && cut >= best_cut)) return;
        const long long w = lv.vweight[static_cast<std::size_t>(v)];
        const int maxp = std::min(used, k - 1);
        for (int p = 0; p <= maxp; ++p) {
            long long dcut = 0;
            for (const auto& [u, ew] : lv.adj[static_cast<std::size_t>(v)])
                if (u < v && parts[static_cast<std::size_t>(u)] != p) dcut += ew;
            parts[static_cast<std::size_t>(v)] = p;
            pw[static_cast<std::size_t>(p)] += w;
            cut += dcut;
            rem -= w;
            go(v + 1, p == used ? used + 1 : used);
            parts[static_cast<std::size_t>(v)] = -1;
            pw[static_cast<std::size_t>(p)] -= w;
            cut -= dcut;
            rem += w;
        }
    };
    go(0, 0);
    return best;
}

// Greedy region growing: BFS-grow each part from a random seed, always taking
// the unassigned frontier vertex best connected to the growing part, until
// the part reaches its weight share. The last part takes the remainder.
std::vector<int> initial_region_growing(const Level& lv, int k, long long total_weight,
                                        Rng& rng) {
    const int n = lv.n;
    std::vector<int> parts(static_cast<std::size_t>(n), -1);
    std::vector<char> in_frontier(static_cast<std::size_t>(n), 0);
    int assigned = 0;
    for (int p = 0; p + 1 < k; ++p) {
        const long long target =
            total_weight * (p + 1) / k - total_weight * p / k;
        long long w = 0;
        std::vector<int> frontier;
        std::fill(in_frontier.begin(), in_frontier.end(), 0);
        while (w < target && assigned < n) {
            int v = -1;
            long long best_c = -1;
            std::size_t keep = 0;
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                const int u = frontier[i];
                if (parts[static_cast<std::size_t>(u)] != -1) continue;
                frontier[keep++] = u;
                long long c = 0;
                for (const auto& [x, ew] : lv.adj[static_cast<std::size_t>(u)])
                    if (parts[static_cast<std::size_t>(x)] == p) c += ew;
                if (c > best_c) {
                    best_c = c;
                    v = u;
                }
            }
            frontier.resize(keep);
            if (v == -1) {
                int pick = rng.uniform_int(0, n - assigned - 1);
                for (int u = 0; u < n; ++u) {
                    if (parts[static_cast<std::size_t>(u)] == -1 && pick-- == 0) {
                        v = u;
                        break;
                    }
                }
            }
            parts[static_cast<std::size_t>(v)] = p;
            w += lv.vweight[static_cast<std::size_t>(v)];
            ++assigned;
            for (const auto& [x, ew] : lv.adj[static_cast<std::size_t>(v)]) {
                (void)ew;
                if (parts[static_cast<std::size_t>(x)] == -1 &&
                    !in_frontier[static_cast<std::size_t>(x)]) {
                    in_frontier[static_cast<std::size_t>(x)] = 1;
                    frontier.push_back(x);
                }
            }
        }
    }
    for (int u = 0; u < n; ++u)
        if (parts[static_cast<std::size_t>(u)] == -1) parts[static_cast<std::size_t>(u)] = k - 1;
    return parts;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

int Partition::size_of(int part) const {
    if (part < 0 || part >= k) throw std::out_of_range("Partition::size_of: part out of range");
    int count = 0;
    for (int x : parts) count += (x == part);
    return count;
}

int edge_cut(const Graph& g, const Partition& p) {
    check_partition(g, p);
    int cut = 0;
    for (const auto& [u, v] : g.edges())
        cut += (p.parts[static_cast<std::size_t>(u)] != p.parts[static_cast<std::size_t>(v)]);
    return cut;
}

ChMetrics ch_cost(const Graph& g, const Partition& p) {
    check_partition(g, p);
    const int n = g.num_vertices();
    ChMetrics m;
    m.core_sizes.assign(static_cast<std::size_t>(p.k), 0);
    m.halo_sizes.assign(static_cast<std::size_t>(p.k), 0);
    for (int v = 0; v < n; ++v) ++m.core_sizes[static_cast<std::size_t>(p.parts[static_cast<std::size_t>(v)])];
    // v is a halo vertex of part i when v lies outside i and touches it; the
    // seen marker counts each (v, i) once.
    std::vector<int> seen(static_cast<std::size_t>(p.k), -1);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            const int pu = p.parts[static_cast<std::size_t>(u)];
            if (pu != p.parts[static_cast<std::size_t>(v)] && seen[static_cast<std::size_t>(pu)] != v) {
                seen[static_cast<std::size_t>(pu)] = v;
                ++m.halo_sizes[static_cast<std::size_t>(pu)];
            }
        }
    }
    m.total = 0;
    for (int i = 0; i < p.k; ++i) {
        const long long s = m.core_sizes[static_cast<std::size_t>(i)] +
                            m.halo_sizes[static_cast<std::size_t>(i)];
        m.total += s * s;
    }
    return m;
}

Partition multilevel_partition(const Graph& g, int k, std::uint64_t seed) {
    const int n = g.num_vertices();
    if (k < 2) throw std::invalid_argument("multilevel_partition: need k >= 2");
    if (n < k) throw std::invalid_argument("multilevel_partition: fewer vertices than parts");
    Rng rng(seed);

    std::vector<Level> levels;
    levels.push_back(level_from_graph(g));
    std::vector<std::vector<int>> maps;  // maps[i]: level i vertex -> level i+1 vertex
    const int coarse_limit = std::max(100, 4 * k);
    while (levels.back().n > coarse_limit) {
        Level next;
        std::vector<int> map = coarsen(levels.back(), next, rng);
        if (map.empty()) break;
        maps.push_back(std::move(map));
        levels.push_back(std::move(next));
    }

    const long long lo = n / k;
    const long long cap = (n + k - 1) / k;

    const Level& coarse = levels.back();
    std::vector<int> parts;
    if (coarse.n <= 12 &&
        std::pow(static_cast<double>(k), coarse.n) <= 16'777'216.0)
        parts = initial_exhaustive(coarse, k, lo, cap);
    else
        parts = initial_region_growing(coarse, k, n, rng);

    // Uncoarsen with refinement at every level. Intermediate levels only keep
    // parts nonempty and under cap; the finest level enforces the exact
    // {floor(n/k), ceil(n/k)} bounds, which unit weights make reachable.
    for (int li = static_cast<int>(levels.size()) - 1; li >= 0; --li) {
        const bool finest = (li == 0);
        refine_level(levels[static_cast<std::size_t>(li)], parts, k,
                     finest ? lo : 1, cap, rng);
        if (li > 0) {
            const std::vector<int>& map = maps[static_cast<std::size_t>(li - 1)];
            const Level& finer = levels[static_cast<std::size_t>(li - 1)];
            std::vector<int> projected(static_cast<std::size_t>(finer.n));
            for (int v = 0; v < finer.n; ++v)
                projected[static_cast<std::size_t>(v)] =
                    parts[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])];
            parts = std::move(projected);
        }
    }

    Partition out;
    out.k = k;
    out.parts = std::move(parts);
    return out;
}

Partition refine_ch_sa(const Graph& g, const Partition& start,
                       const AnnealSchedule& schedule, std::uint64_t seed) {
    check_partition(g, start);
    const int n = g.num_vertices();
    const int k = start.k;
    if (n == 0 || k < 2) return start;
    Rng rng(seed);

    std::vector<int> parts = start.parts;
    // cnt[v*k+p]: neighbors of v inside part p. core/halo per part as in
    // ch_cost; the move update below touches only the two parts involved.
    std::vector<int> cnt(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    const auto idx = [k](int v, int p) {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k) +
               static_cast<std::size_t>(p);
    };
    std::vector<int> core(static_cast<std::size_t>(k), 0);
    std::vector<int> halo(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
        ++core[static_cast<std::size_t>(parts[static_cast<std::size_t>(v)])];
        for (int u : g.neighbors(v)) ++cnt[idx(v, parts[static_cast<std::size_t>(u)])];
    }
    for (int v = 0; v < n; ++v)
        for (int p = 0; p < k; ++p)
            if (p != parts[static_cast<std::size_t>(v)] && cnt[idx(v, p)] > 0)
                ++halo[static_cast<std::size_t>(p)];

    const auto foot = [](long long c, long long h) {
        const long long s = c + h;
        return s * s;
    };
    long long total = 0;
    for (int p = 0; p < k; ++p)
        total += foot(core[static_cast<std::size_t>(p)], halo[static_cast<std::size_t>(p)]);

    const auto move = [&](int v, int b) {
        const int a = parts[static_cast<std::size_t>(v)];
        total -= foot(core[static_cast<std::size_t>(a)], halo[static_cast<std::size_t>(a)]) +
                 foot(core[static_cast<std::size_t>(b)], halo[static_cast<std::size_t>(b)]);
        // v itself leaves halo(b) and, if still attached, enters halo(a)
        if (cnt[idx(v, b)] > 0) --halo[static_cast<std::size_t>(b)];
        if (cnt[idx(v, a)] > 0) ++halo[static_cast<std::size_t>(a)];
        --core[static_cast<std::size_t>(a)];
        ++core[static_cast<std::size_t>(b)];
        parts[static_cast<std::size_t>(v)] = b;
        for (int u : g.neighbors(v)) {
            const int pu = parts[static_cast<std::size_t>(u)];
            const bool was_a = pu != a && cnt[idx(u, a)] > 0;
            if (--cnt[idx(u, a)] == 0 && was_a) --halo[static_cast<std::size_t>(a)];
            const bool was_b = pu != b && cnt[idx(u, b)] > 0;
            ++cnt[idx(u, b)];
            if (!was_b && pu != b) ++halo[static_cast<std::size_t>(b)];
        }
        total += foot(core[static_cast<std::size_t>(a)], halo[static_cast<std::size_t>(a)]) +
                 foot(core[static_cast<std::size_t>(b)], halo[static_cast<std::size_t>(b)]);
    };

    std::vector<int> best = parts;
    long long best_total = total;
    std::vector<int> cand;
    for (std::uint64_t t = 0; t < schedule.steps; ++t) {
        const int v = rng.uniform_int(0, n - 1);
        const int a = parts[static_cast<std::size_t>(v)];
        cand.clear();
        for (int u : g.neighbors(v)) {
            const int p = parts[static_cast<std::size_t>(u)];
            if (p != a && std::find(cand.begin(), cand.end(), p) == cand.end())
                cand.push_back(p);
        }
        if (cand.empty()) continue;  // interior vertex; no boundary move
        const int b = cand[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(cand.size()) - 1))];
        const long long before = total;
        move(v, b);
        const long long delta = total - before;
        if (delta > 0) {
            const double temp = schedule.temperature(t);
            if (!(temp > 0.0) ||
                rng.uniform01() >= std::exp(-static_cast<double>(delta) / temp)) {
                move(v, a);  // exact integer revert
                continue;
            }
        }
        if (total < best_total) {
            best_total = total;
            best = parts;
        }
    }

    Partition out;
    out.k = k;
    out.parts = std::move(best);
    return out;
}

void write_partition(const Partition& p, std::ostream& out) {
    for (std::size_t v = 0; v < p.parts.size(); ++v)
        out << v << ' ' << p.parts[v] << '\n';
}

Partition read_partition(std::istream& in) {
    int line_no = 0;
    std::string line;
    std::map<int, int> by_vertex;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;  // blank line
        std::istringstream entry(line);
        int v = 0, part = 0;
        if (!(entry >> v >> part))
            throw ParseError("partition: malformed line, expected 'v part'", line_no);
        if (v < 0) throw ParseError("partition: negative vertex", line_no);
        if (part < 0) throw ParseError("partition: negative part", line_no);
        if (by_vertex.count(v)) throw ParseError("partition: duplicate vertex", line_no);
        by_vertex[v] = part;
    }
    Partition p;
    if (by_vertex.empty()) return p;
    const int n = by_vertex.rbegin()->first + 1;
    if (static_cast<int>(by_vertex.size()) != n)
        throw ParseError("partition: vertex ids not contiguous from 0", std::max(line_no, 1));
    p.parts.assign(static_cast<std::size_t>(n), 0);
    int kmax = 1;
    for (const auto& [v, part] : by_vertex) {
        p.parts[static_cast<std::size_t>(v)] = part;
        kmax = std::max(kmax, part + 1);
    }
    p.k = kmax;
    return p;
}

void save_partition(const Partition& p, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_partition(p, out);
}

Partition load_partition(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_partition(in);
}

}  // namespace qopt
