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
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit code is 0 only when every selected criterion passes. Criteria
// with a stated wall-clock budget fail when they run over it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qopt/builders.hpp"
#include "qopt/chimera.hpp"
#include "qopt/experiments.hpp"
#include "qopt/graph.hpp"
#include "qopt/maxclique.hpp"
#include "qopt/model.hpp"
#include "qopt/partition.hpp"
#include "qopt/rng.hpp"
#include "qopt/solvers.hpp"

#include "support/oracles.hpp"

namespace {

using qopt::Assignment;
using qopt::Graph;
using qopt::IsingModel;
using qopt::Partition;
using qopt::QuboModel;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Assignment bits_from_mask(int n, std::uint64_t mask) {
    std::vector<std::int8_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    return qopt::binary_assignment(std::move(v));
}

Assignment spins_from_mask(int n, std::uint64_t mask) {
    std::vector<std::int8_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = ((mask >> i) & 1) ? 1 : -1;
    return qopt::spin_assignment(std::move(v));
}

// Quarter-integer weights keep every energy a multiple of 1/16 at small
// magnitude, so exactness checks are meaningful rather than lucky.
QuboModel random_qubo(int n, qopt::Rng& rng) {
    QuboModel q(n, rng.uniform_int(-16, 16) / 4.0);
    for (int i = 0; i < n; ++i)
        if (rng.bernoulli(0.8)) q.add_linear(i, rng.uniform_int(-40, 40) / 4.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(0.5)) q.add_quadratic(i, j, rng.uniform_int(-40, 40) / 4.0);
    return q;
}

IsingModel random_ising(int n, qopt::Rng& rng) {
    IsingModel m(n, rng.uniform_int(-16, 16) / 4.0);
    for (int i = 0; i < n; ++i)
        if (rng.bernoulli(0.8)) m.add_field(i, rng.uniform_int(-40, 40) / 4.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(0.5)) m.add_coupler(i, j, rng.uniform_int(-40, 40) / 4.0);
    return m;
}

// --------------------------------------------------------------------------
// 1. Conversion exactness across the binary/spin correspondence.

Outcome criterion_conversions() {
    qopt::Rng rng(2026);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        const std::uint64_t total = std::uint64_t{1} << n;
        if (trial % 2 == 0) {
            const QuboModel q = random_qubo(n, rng);
            const IsingModel m = qopt::qubo_to_ising(q);
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                const double eq = qopt::qubo_energy(q, bits_from_mask(n, mask));
                const double em = qopt::ising_energy(m, spins_from_mask(n, mask));
                worst = std::max(worst, std::abs(eq - em));
            }
            if (!(qopt::ising_to_qubo(m) == q))
                return {false, fmt("model %d: binary round trip altered weights", trial)};
        } else {
            const IsingModel m = random_ising(n, rng);
            const QuboModel q = qopt::ising_to_qubo(m);
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                const double em = qopt::ising_energy(m, spins_from_mask(n, mask));
                const double eq = qopt::qubo_energy(q, bits_from_mask(n, mask));
                worst = std::max(worst, std::abs(em - eq));
            }
            if (!(qopt::qubo_to_ising(q) == m))
                return {false, fmt("model %d: spin round trip altered weights", trial)};
        }
        if (worst > 1e-9)
            return {false, fmt("model %d: energy mismatch %.3g", trial, worst)};
    }
    return {true, fmt("100 models, both directions, max |dE| = %.3g", worst)};
}

// --------------------------------------------------------------------------
// 2. Maximum clique through the independent-set model of the complement.

Outcome criterion_mis_clique() {
    qopt::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const double p = 0.15 + 0.1 * static_cast<double>(trial % 8);
        const Graph g = qopt::random_graph(n, p, rng.next_u64());
        const Graph co = g.complement();
        const QuboModel q = qopt::build_mis_qubo(co);
        const auto res = qopt::brute_force(q);

        const auto decoded = qopt::decode_mis(co, res.best().assignment);
        if (!decoded.feasible)
            return {false, fmt("graph %d: optimum is not an independent set", trial)};
        const int via_model = static_cast<int>(decoded.vertices.size());
        const int direct = qopt::exact_clique(g).size();
        const int oracle = oracles::max_clique_size(g);
        if (via_model != direct || direct != oracle)
            return {false, fmt("graph %d: clique sizes disagree (model %d, search %d, "
                               "enumeration %d)",
                               trial, via_model, direct, oracle)};
        if (res.best().energy != -static_cast<double>(oracle))
            return {false, fmt("graph %d: optimum energy %.17g, expected %d", trial,
                               res.best().energy, -oracle)};
        for (std::size_t i = 0; i + 1 < decoded.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < decoded.vertices.size(); ++j)
                if (!g.has_edge(decoded.vertices[i], decoded.vertices[j]))
                    return {false, fmt("graph %d: decoded set is not a clique", trial)};
    }
    return {true, "200 graphs, model optimum = search = enumeration"};
}

// --------------------------------------------------------------------------
// 3. Penalty soundness: global minimizers of the penalized models are
// feasible, optimal, and single-flip stable.

bool ising_flip_stable(const IsingModel& m, const Assignment& a, double energy) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        Assignment flipped = a;
        flipped.values[i] = static_cast<std::int8_t>(-flipped.values[i]);
        if (qopt::ising_energy(m, flipped) < energy - 1e-12) return false;
    }
    return true;
}

bool qubo_flip_stable(const QuboModel& q, const Assignment& a, double energy) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        Assignment flipped = a;
        flipped.values[i] = static_cast<std::int8_t>(1 - flipped.values[i]);
        if (qopt::qubo_energy(q, flipped) < energy - 1e-12) return false;
    }
    return true;
}

Outcome bisection_soundness() {
    int instances = 0;
    for (int n : {4, 6, 8, 10, 12}) {
        for (double p : {0.3, 0.6}) {
            const Graph g = qopt::random_graph(
                n, p, static_cast<std::uint64_t>(100 * n) + static_cast<std::uint64_t>(p * 10));
            const IsingModel m = qopt::build_bisection_ising(g);
            const int best_cut = oracles::min_bisection_cut(g);
            const auto optima = qopt::brute_force_optima(m);
            if (optima.empty()) return {false, fmt("bisection n=%d: no optima", n)};
            for (const auto& a : optima) {
                int plus = 0;
                for (auto s : a.values) plus += s > 0 ? 1 : 0;
                if (2 * plus != n)
                    return {false, fmt("bisection n=%d: unbalanced minimizer", n)};
                const double e = qopt::ising_energy(m, a);
                if (e != static_cast<double>(best_cut))
                    return {false,
                            fmt("bisection n=%d: energy %.17g, optimal cut %d", n, e, best_cut)};
                if (!ising_flip_stable(m, a, e))
                    return {false, fmt("bisection n=%d: minimizer not flip-stable", n)};
            }
            ++instances;
        }
    }
    return {true, fmt("%d instances", instances)};
}

Outcome kway_soundness() {
    const std::vector<std::pair<int, int>> cases = {
        {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 3}, {3, 4}, {3, 5}, {3, 6},
    };
    int instances = 0;
    for (const auto& [k, n] : cases) {
        for (double p : {0.35, 0.65}) {
            const Graph g = qopt::random_graph(
                n, p, static_cast<std::uint64_t>(1000 * k + 10 * n) +
                          static_cast<std::uint64_t>(p * 100));
            const auto [q, idx] = qopt::build_kway_qubo(g, k);
            const int best_cut = oracles::min_balanced_kway_cut(g, k);
            const auto optima = qopt::brute_force_optima(q, std::size_t{1} << 22);
            if (optima.empty()) return {false, fmt("k-way k=%d n=%d: no optima", k, n)};
            const int lo = n / k;
            const int hi = (n + k - 1) / k;
            for (const auto& a : optima) {
                const auto decoded = qopt::decode_kway(idx, a);
                if (!decoded.feasible)
                    return {false, fmt("k-way k=%d n=%d: infeasible minimizer", k, n)};
                for (int part = 0; part < k; ++part) {
                    const int s = decoded.partition.size_of(part);
                    if (s < lo || s > hi)
                        return {false, fmt("k-way k=%d n=%d: part size %d outside "
                                           "[%d, %d]",
                                           k, n, s, lo, hi)};
                }
                if (qopt::edge_cut(g, decoded.partition) != best_cut)
                    return {false, fmt("k-way k=%d n=%d: cut %d, optimal %d", k, n,
                                       qopt::edge_cut(g, decoded.partition), best_cut)};
                const double e = qopt::qubo_energy(q, a);
                if (!qubo_flip_stable(q, a, e))
                    return {false, fmt("k-way k=%d n=%d: minimizer not flip-stable", k, n)};
            }
            ++instances;
        }
    }
    return {true, fmt("%d instances", instances)};
}

// The h and z blocks of the storage model have a forced optimal completion
// for every core vector c: h must mark exactly the closed neighborhoods of
// the cores (the pair penalty b = 2n+1 beats any storage gain of at most
// 2n-1, and an unforced h costs storage for nothing), and z = h - c is the
// unique zero-penalty slack. Minimizing over c with that completion is
// therefore minimizing the full model; a full enumeration cross-check on the
// smallest instances guards the argument itself.
Outcome ch_soundness() {
    struct Reduced {
        long long best = 0;
        std::vector<std::uint64_t> argmins;  // c-vector masks, bit v*k+i
    };

    const auto reduce = [](const Graph& g, int k, long long a_weight) {
        const int n = g.num_vertices();
        const int vars = n * k;
        Reduced out;
        out.best = -1;
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << vars); ++c) {
            long long h_a = 0;
            for (int v = 0; v < n; ++v) {
                int hits = 0;
                for (int i = 0; i < k; ++i)
                    hits += (c >> (v * k + i)) & 1 ? 1 : 0;
                const long long gap = hits - 1;
                h_a += gap * gap;
            }
            long long h_c = 0;
            for (int i = 0; i < k; ++i) {
                int stored = 0;
                for (int v = 0; v < n; ++v) {
                    bool covered = (c >> (v * k + i)) & 1;
                    for (int w : g.neighbors(v))
                        covered = covered || ((c >> (w * k + i)) & 1);
                    stored += covered ? 1 : 0;
                }
                h_c += static_cast<long long>(stored) * stored;
            }
            const long long total = a_weight * h_a + h_c;
            if (out.best < 0 || total < out.best) {
                out.best = total;
                out.argmins.assign(1, c);
            } else if (total == out.best) {
                out.argmins.push_back(c);
            }
        }
        return out;
    };

    const int k = 2;
    int instances = 0;
    for (int n = 2; n <= 6; ++n) {
        for (double p : {0.4, 0.7}) {
            const Graph g = qopt::random_graph(
                n, p, static_cast<std::uint64_t>(500 + 10 * n) +
                          static_cast<std::uint64_t>(p * 100));
            const auto [q, idx] = qopt::build_ch_qubo(g, k);
            const long long a_weight = static_cast<long long>(n) * n + 1;
            const Reduced red = reduce(g, k, a_weight);
            const long long oracle = oracles::min_ch_cost(g, k);
            if (red.best != oracle)
                return {false, fmt("storage model n=%d: reduced optimum %lld, "
                                   "enumerated %lld",
                                   n, red.best, oracle)};
            for (std::uint64_t c : red.argmins) {
                Partition cores{k, std::vector<int>(static_cast<std::size_t>(n), -1)};
                for (int v = 0; v < n; ++v) {
                    int hits = 0;
                    for (int i = 0; i < k; ++i) {
                        if ((c >> (v * k + i)) & 1) {
                            ++hits;
                            cores.parts[static_cast<std::size_t>(v)] = i;
                        }
                    }
                    if (hits != 1)
                        return {false,
                                fmt("storage model n=%d: minimizer with a non-one-hot row", n)};
                }
                if (qopt::ch_cost(g, cores).total != oracle)
                    return {false, fmt("storage model n=%d: minimizer cost mismatch", n)};
                const Assignment enc = qopt::encode_ch(idx, g, cores);
                const double e = qopt::qubo_energy(q, enc);
                if (e != static_cast<double>(oracle))
                    return {false,
                            fmt("storage model n=%d: encoded energy %.17g != %lld", n, e, oracle)};
                const auto decoded = qopt::decode_ch(idx, g, enc);
                if (!decoded.feasible || !(decoded.cores == cores))
                    return {false, fmt("storage model n=%d: encode/decode mismatch", n)};
                if (!qubo_flip_stable(q, enc, e))
                    return {false, fmt("storage model n=%d: minimizer not flip-stable", n)};
            }
            ++instances;
        }
    }

    // Full-space enumeration on the two smallest shapes validates the
    // completion argument end to end.
    const std::vector<Graph> small = {Graph(2, {{0, 1}}), Graph(3, {{0, 1}, {1, 2}})};
    for (const Graph& g : small) {
        const int n = g.num_vertices();
        const auto [q, idx] = qopt::build_ch_qubo(g, k);
        const long long oracle = oracles::min_ch_cost(g, k);
        const auto optima = qopt::brute_force_optima(q, std::size_t{1} << 10);
        if (optima.empty()) return {false, fmt("storage model n=%d: no full optima", n)};
        const double best = qopt::qubo_energy(q, optima.front());
        if (best != static_cast<double>(oracle))
            return {false,
                    fmt("storage model n=%d: full optimum %.17g != %lld", n, best, oracle)};
        for (const auto& a : optima) {
            const auto decoded = qopt::decode_ch(idx, g, a);
            if (!decoded.feasible)
                return {false, fmt("storage model n=%d: full minimizer infeasible (%s)", n,
                                   decoded.diagnostic.c_str())};
            if (qopt::ch_cost(g, decoded.cores).total != oracle)
                return {false, fmt("storage model n=%d: full minimizer suboptimal", n)};
            if (!qubo_flip_stable(q, a, best))
                return {false, fmt("storage model n=%d: full minimizer not flip-stable", n)};
        }
        ++instances;
    }

    return {true, fmt("%d instances", instances)};
}

Outcome criterion_penalties() {
    const Outcome bisect = bisection_soundness();
    if (!bisect.pass) return bisect;
    const Outcome kway = kway_soundness();
    if (!kway.pass) return kway;
    const Outcome ch = ch_soundness();
    if (!ch.pass) return ch;
    return {true, "bisection " + bisect.detail + ", k-way " + kway.detail +
                      ", storage " + ch.detail};
}

// --------------------------------------------------------------------------
// 4. Closed-form energy identities at feasible encodings.

Outcome criterion_identities() {
    qopt::Rng rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + trial % 2;
        const int n = k * (2 + trial % 3);
        const Graph g = qopt::random_graph(n, 0.2 + 0.15 * (trial % 5), rng.next_u64());
        const auto [q, idx] = qopt::build_kway_qubo(g, k);

        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        rng.shuffle(order);
        Partition p{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (int i = 0; i < n; ++i)
            p.parts[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i % k;

        const double h = qopt::qubo_energy(q, qopt::encode_kway(idx, p));
        const double expected = static_cast<double>((k - 1) * g.num_edges()) +
                                static_cast<double>(qopt::edge_cut(g, p));
        if (h != expected)
            return {false, fmt("k-way pair %d: H = %.17g, (k-1)|E| + cut = %.17g", trial, h,
                               expected)};
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        const int k = 1 + trial % 3;
        const Graph g = qopt::random_graph(n, 0.2 + 0.15 * (trial % 5), rng.next_u64());
        const auto [q, idx] = qopt::build_ch_qubo(g, k);
        Partition p{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
        for (auto& v : p.parts) v = rng.uniform_int(0, k - 1);
        const double h = qopt::qubo_energy(q, qopt::encode_ch(idx, g, p));
        const double expected = static_cast<double>(qopt::ch_cost(g, p).total);
        if (h != expected)
            return {false,
                    fmt("storage pair %d: H = %.17g, cost = %.17g", trial, h, expected)};
    }
    return {true, "100 (graph, partition) pairs, both identities exact"};
}

// --------------------------------------------------------------------------
// 5. 45-vertex clique table: exact medians and annealed match rate.

Outcome criterion_clique_table() {
    qopt::ExperimentConfig cfg;
    cfg.name = "table1-clique";
    cfg.n_values = {45};
    cfg.p_values = {0.3, 0.5, 0.7, 0.9};
    cfg.seeds = 10;
    cfg.reads = 10;
    cfg.alpha = 0.9996;
    const auto result = qopt::run_experiment(cfg);

    const std::vector<double> targets = {5.0, 8.0, 13.0, 20.0};
    const auto& per_p = result.summary.at("per_p");
    if (per_p.size() != targets.size()) return {false, "unexpected density count"};

    std::string medians;
    bool ok = true;
    double matches = 0.0;
    for (std::size_t i = 0; i < per_p.size(); ++i) {
        const double median = per_p[i].at("exact_median").get<double>();
        const double rate = per_p[i].at("match_rate").get<double>();
        matches += rate;
        if (std::abs(median - targets[i]) > 1.0) ok = false;
        medians += fmt("%s%.1f/%.0f", i ? ", " : "", median, targets[i]);
    }
    const double match_rate = matches / static_cast<double>(per_p.size());
    if (match_rate < 0.9) ok = false;
    return {ok, fmt("exact medians vs targets: %s; annealed match rate %.0f%%",
                    medians.c_str(), 100.0 * match_rate)};
}

// --------------------------------------------------------------------------
// 6. Divide-and-conquer call growth across density.

Outcome criterion_call_growth() {
    qopt::ExperimentConfig cfg;
    cfg.name = "density-calls";
    cfg.n_values = {500};
    cfg.p_values = {0.1, 0.2, 0.3, 0.4};
    cfg.seeds = 10;
    cfg.size_limit = 45;
    const auto result = qopt::run_experiment(cfg);

    const bool monotone = result.summary.at("calls_monotone_increasing").get<bool>();
    const double r2 = result.summary.at("log_calls_fit_r2").get<double>();
    std::string meds;
    for (const auto& entry : result.summary.at("per_p"))
        meds += fmt("%s%.0f", meds.empty() ? "" : ", ",
                    entry.at("calls_median").get<double>());
    const bool ok = monotone && r2 >= 0.9;
    return {ok, fmt("median calls [%s], monotone %s, log-linear R^2 = %.3f", meds.c_str(),
                    monotone ? "yes" : "no", r2)};
}

// --------------------------------------------------------------------------
// 7. Square-root scaling of the embeddable order in the qubit budget.

Outcome criterion_qubit_scaling() {
    if (qopt::size_limit_for_qubits(1152) != 49)
        return {false, "1152 qubits should embed a 49-clique"};
    if (qopt::size_limit_for_qubits(8) != 5)
        return {false, "a single cell should embed a 5-clique"};

    std::int64_t qubits = 1152;
    int prev = qopt::size_limit_for_qubits(qubits);
    int first_reaching = -1;
    std::string ratios;
    for (int doubling = 1; doubling <= 8; ++doubling) {
        qubits *= 2;
        const int cur = qopt::size_limit_for_qubits(qubits);
        const double ratio =
            static_cast<double>(cur - 1) / static_cast<double>(prev - 1);
        if (ratio < 1.3 || ratio > 1.45)
            return {false, fmt("doubling %d: (K-1) ratio %.4f outside [1.3, 1.45]",
                               doubling, ratio)};
        if (first_reaching < 0 && cur >= 500) first_reaching = doubling;
        ratios += fmt("%s%.3f", doubling > 1 ? ", " : "", ratio);
        prev = cur;
    }
    if (first_reaching != 7)
        return {false, fmt("limit 500 first reached at doubling %d, expected 7",
                           first_reaching)};
    return {true, fmt("(K-1) ratios [%s]; limit 500 at the 7th doubling", ratios.c_str())};
}

// --------------------------------------------------------------------------
// 8. Hardware-scale cell grid and its complete-graph embeddings.

Outcome criterion_chimera() {
    const qopt::ChimeraSpec spec{12, 12, 4, {}};
    const Graph g = qopt::chimera_graph(spec);
    if (g.num_vertices() != 1152 || g.num_edges() != 3360)
        return {false, fmt("cell grid has %d vertices / %d edges, expected 1152 / 3360",
                           g.num_vertices(), g.num_edges())};

    const auto full = qopt::clique_embedding(spec);
    if (full.chains.size() != 49) return {false, "full yield should embed a 49-clique"};
    const auto full_check = qopt::verify_embedding(full, g, complete(49));
    if (!full_check.valid)
        return {false, "full-yield embedding rejected: " + full_check.diagnostic};

    const auto worn = qopt::degrade(spec, 52, 7);
    if (worn.operational_vertices() != 1100)
        return {false, "degrade should leave 1100 operational vertices"};
    const auto pruned = qopt::clique_embedding(worn);
    const int size = static_cast<int>(pruned.chains.size());
    const auto pruned_check =
        qopt::verify_embedding(pruned, qopt::chimera_graph(worn), complete(size));
    if (!pruned_check.valid)
        return {false, "pruned embedding rejected: " + pruned_check.diagnostic};
    return {true, fmt("K49 at full yield; degraded chip (1100 qubits) embeds K%d", size)};
}

// --------------------------------------------------------------------------
// 9. Contraction minors: counts, certificates, annealed quality, cooling curve.

Outcome criterion_minor_quality() {
    qopt::ExperimentConfig cfg;
    cfg.name = "cm-quality";
    cfg.chimera_m = 4;
    cfg.contraction_counts = {8, 16, 32, 64};
    cfg.seeds = 10;
    const auto result = qopt::run_experiment(cfg);

    const auto& per_m = result.summary.at("per_m");
    if (per_m.size() != 4) return {false, "unexpected contraction count list"};

    bool any_odd_cycle = false;
    std::size_t curve_points = 0;
    std::vector<double> curve_sums;
    for (const auto& entry : per_m) {
        const int m = entry.at("m").get<int>();
        if (entry.at("vertices").get<int>() != 128 - m)
            return {false, fmt("minor m=%d: %d vertices, expected %d", m,
                               entry.at("vertices").get<int>(), 128 - m)};
        if (!entry.at("embedding_valid").get<bool>())
            return {false, fmt("minor m=%d: contraction embedding rejected", m)};
        if (!entry.at("bipartite").get<bool>()) any_odd_cycle = true;
        const double greedy = entry.at("greedy_median").get<double>();
        const double sa = entry.at("sa_median").get<double>();
        if (sa < greedy)
            return {false, fmt("minor m=%d: annealed median %.1f below greedy %.1f", m, sa,
                               greedy)};
        const auto& curve = entry.at("alpha_curve");
        if (curve_sums.empty()) {
            curve_points = curve.size();
            curve_sums.assign(curve_points, 0.0);
        }
        if (curve.size() != curve_points) return {false, "ragged cooling curve"};
        for (std::size_t i = 0; i < curve_points; ++i)
            curve_sums[i] += curve[i].at("success_rate").get<double>();
    }
    if (!any_odd_cycle)
        return {false, "every minor stayed bipartite; expected an intra-cell contraction"};

    // Aggregate success per cooling rate must not decrease as alpha rises.
    std::string curve_text;
    for (std::size_t i = 0; i < curve_points; ++i) {
        curve_sums[i] /= static_cast<double>(per_m.size());
        if (i > 0 && curve_sums[i] < curve_sums[i - 1] - 1e-12)
            return {false, fmt("cooling curve dips at point %zu (%.2f after %.2f)", i,
                               curve_sums[i], curve_sums[i - 1])};
        curve_text += fmt("%s%.2f", i ? ", " : "", curve_sums[i]);
    }
    return {true, fmt("4 minors certified, annealed >= greedy, cooling curve [%s]",
                      curve_text.c_str())};
}

// --------------------------------------------------------------------------
// 10. Broken-chain rate falls as the chain strength rises.

Outcome criterion_chain_strength() {
    qopt::ExperimentConfig cfg;
    cfg.name = "chain-histogram";
    cfg.chimera_m = 4;
    cfg.contraction_counts = {32};
    cfg.chain_strengths = {0.0, 2.0};
    cfg.seeds = 20;
    const auto result = qopt::run_experiment(cfg);

    const auto& per_m = result.summary.at("per_m");
    if (per_m.size() != 1) return {false, "unexpected contraction count list"};
    const auto& per_strength = per_m[0].at("per_strength");
    if (per_strength.size() != 2) return {false, "unexpected strength list"};
    const double loose = per_strength[0].at("broken_rate_median").get<double>();
    const double tight = per_strength[1].at("broken_rate_median").get<double>();
    const bool ok = loose > tight;
    return {ok, fmt("median broken-chain rate %.3f at strength 0 vs %.3f at strength 2",
                    loose, tight)};
}

// --------------------------------------------------------------------------
// 11. Partition solvers against exhaustive ground truth.

Outcome criterion_partition_solvers() {
    qopt::ExperimentConfig ec;
    ec.name = "ec-partition";
    ec.n_values = {6, 8, 10, 12, 14};
    ec.p_values = {0.5};
    ec.seeds = 10;
    const auto cuts = qopt::run_experiment(ec);
    const auto& overall = cuts.summary.at("overall");
    const double ml = overall.at("multilevel_rate").get<double>();
    const double as = overall.at("anneal_swap_rate").get<double>();
    const double tb = overall.at("tabu_rate").get<double>();

    qopt::ExperimentConfig ch;
    ch.name = "ch-partition";
    ch.n_values = {4, 5, 6, 7, 8};
    ch.k = 2;
    ch.seeds = 10;
    const auto storage = qopt::run_experiment(ch);
    const double refine = storage.summary.at("overall_optimum_rate").get<double>();

    const bool ok = ml >= 0.8 && as >= 0.8 && tb >= 0.8 && refine >= 0.8;
    return {ok, fmt("optimal-cut rates: multilevel %.0f%%, pair-swap %.0f%%, tabu %.0f%%; "
                    "storage refinement %.0f%%",
                    100.0 * ml, 100.0 * as, 100.0 * tb, 100.0 * refine)};
}

// --------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;  // 0 = no stated budget
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else if (arg == "--help" || arg == "-h") {
            std::printf("usage: %s [--criterion N]...\n", argv[0]);
            return 0;
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", arg.c_str());
            return 1;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "qubo/ising conversion exactness", 10.0, criterion_conversions},
        {2, "clique via independent-set brute force", 30.0, criterion_mis_clique},
        {3, "penalty soundness and local stability", 300.0, criterion_penalties},
        {4, "closed-form energy identities", 0.0, criterion_identities},
        {5, "45-vertex clique table medians", 300.0, criterion_clique_table},
        {6, "split-solve call growth with density", 1800.0, criterion_call_growth},
        {7, "qubit budget to size-limit scaling", 0.0, criterion_qubit_scaling},
        {8, "chimera counts and clique embeddings", 0.0, criterion_chimera},
        {9, "contraction-minor solution quality", 600.0, criterion_minor_quality},
        {10, "chain strength vs broken chains", 0.0, criterion_chain_strength},
        {11, "partition solvers vs ground truth", 0.0, criterion_partition_solvers},
    };

    bool all_pass = true;
    int ran = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
            outcome.pass = false;
            outcome.detail += fmt(" [over %.0fs budget]", c.budget_seconds);
        }
        all_pass = all_pass && outcome.pass;
        std::printf("%s - criterion %2d: %s (%s) [%.1fs]\n",
                    outcome.pass ? "PASS" : "FAIL", c.id, c.label,
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no matching criteria\n");
        return 1;
    }
    return all_pass ? 0 : 1;
}
