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

#include "qopt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "qopt/builders.hpp"
#include "qopt/chimera.hpp"
#include "qopt/graph.hpp"
#include "qopt/maxclique.hpp"
#include "qopt/partition.hpp"
#include "qopt/rng.hpp"
#include "qopt/solvers.hpp"

namespace qopt {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string istr(long long v) { return std::to_string(v); }
std::string ustr(std::uint64_t v) { return std::to_string(v); }

std::string dstr(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string msstr(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// RFC 4180 quoting. The emitted fields never need it today, but the writer
// stays safe for future free-text columns.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string build_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << csv_field(header[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_field(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

std::vector<double> or_default(const std::vector<double>& v, std::vector<double> fallback) {
    return v.empty() ? std::move(fallback) : v;
}

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> fallback) {
    return v.empty() ? std::move(fallback) : v;
}

void check_probabilities(const std::string& name, const std::vector<double>& ps) {
    for (double p : ps)
        require(p >= 0.0 && p <= 1.0, name + ": probability outside [0, 1]");
}

void check_alpha(const std::string& name, double alpha) {
    require(alpha > 0.0 && alpha < 1.0, name + ": alpha must lie in (0, 1)");
}

// Runs task(0..count-1) across a worker pool. Results must go into
// preallocated per-task slots so output order never depends on scheduling.
void run_tasks(int count, int threads, const std::function<void(int)>& task) {
    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    task(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// R^2 of the least-squares line y = a + b x.
double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) return 1.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    if (denom == 0.0) return 1.0;
    const double b = (dn * sxy - sx * sy) / denom;
    const double a = (sy - b * sx) / dn;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / dn;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = a + b * x[i];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    if (ss_tot == 0.0) return 1.0;
    return 1.0 - ss_res / ss_tot;
}

std::uint64_t task_seed(const ExperimentConfig& cfg, int task_index) {
    return mix_seed(cfg.base_seed, static_cast<std::uint64_t>(task_index) + 1);
}

// ---------------------------------------------------------------------------
// table1-clique: exact vs annealed clique sizes on G(n, p).

ExperimentResult run_table1(const ExperimentConfig& cfg) {
    const int n = cfg.n_values.empty() ? 45 : cfg.n_values.front();
    require(n >= 1, "table1-clique: n must be positive");
    const std::vector<double> ps = or_default(cfg.p_values, {0.3, 0.5, 0.7, 0.9});
    check_probabilities("table1-clique", ps);
    require(cfg.reads >= 1, "table1-clique: reads must be positive");
    check_alpha("table1-clique", cfg.alpha);

    struct Out {
        int exact_size = 0;
        std::uint64_t exact_nodes = 0;
        double exact_ms = 0;
        int sa_size = 0;
        std::uint64_t sa_nodes = 0;
        double sa_ms = 0;
    };
    const int count = static_cast<int>(ps.size()) * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const std::size_t pi = static_cast<std::size_t>(ti / cfg.seeds);
        Out& o = outs[static_cast<std::size_t>(ti)];
        const std::uint64_t gseed = task_seed(cfg, ti);
        const Graph g = random_graph(n, ps[pi], gseed);

        auto t0 = Clock::now();
        const CliqueResult exact = exact_clique(g, std::max(200, n));
        o.exact_ms = ms_since(t0);
        o.exact_size = exact.size();
        o.exact_nodes = exact.branch_nodes;

        t0 = Clock::now();
        for (int r = 0; r < cfg.reads; ++r) {
            SaCliqueOptions opt;
            opt.alpha = cfg.alpha;
            opt.seed = mix_seed(gseed, static_cast<std::uint64_t>(r) + 1);
            const CliqueResult res = sa_clique(g, opt);
            o.sa_size = std::max(o.sa_size, res.size());
            o.sa_nodes += res.branch_nodes;
        }
        o.sa_ms = ms_since(t0);
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[pi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            rows.push_back({istr(n), dstr(ps[pi]), istr(si), "exact",
                            istr(o.exact_size), ustr(o.exact_nodes), istr(1),
                            msstr(o.exact_ms)});
            rows.push_back({istr(n), dstr(ps[pi]), istr(si), "sa",
                            istr(o.sa_size), ustr(o.sa_nodes), istr(cfg.reads),
                            msstr(o.sa_ms)});
        }
    }

    json per_p = json::array();
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        std::vector<double> ex, sa;
        int matches = 0;
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[pi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            ex.push_back(o.exact_size);
            sa.push_back(o.sa_size);
            matches += (o.sa_size == o.exact_size);
        }
        per_p.push_back({{"p", ps[pi]},
                         {"exact_median", median(ex)},
                         {"exact_stddev", sample_stddev(ex)},
                         {"sa_median", median(sa)},
                         {"sa_stddev", sample_stddev(sa)},
                         {"match_rate", static_cast<double>(matches) / cfg.seeds}});
    }

    ExperimentResult result;
    result.csv = build_csv({"n", "p", "seed", "solver", "clique_size",
                            "branch_nodes", "reads", "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "table1-clique"}, {"n", n},
                      {"seeds", cfg.seeds},           {"reads", cfg.reads},
                      {"alpha", cfg.alpha},           {"per_p", per_p}};
    return result;
}

// ---------------------------------------------------------------------------
// density-calls: split_solve leaf-call growth across edge density.

ExperimentResult run_density_calls(const ExperimentConfig& cfg) {
    const int n = cfg.n_values.empty() ? 500 : cfg.n_values.front();
    require(n >= 2, "density-calls: n must be at least 2");
    const std::vector<double> ps = or_default(cfg.p_values, {0.1, 0.2, 0.3, 0.4});
    check_probabilities("density-calls", ps);
    require(cfg.size_limit >= 2, "density-calls: size_limit must be at least 2");

    struct Out {
        int clique = 0;
        std::uint64_t calls = 0;
        std::uint64_t nodes = 0;
        double ms = 0;
    };
    const int count = static_cast<int>(ps.size()) * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));
    const int guard = std::max(200, cfg.size_limit);
    const auto subsolver = [guard](const Graph& sub) { return exact_clique(sub, guard); };

    run_tasks(count, cfg.threads, [&](int ti) {
        const std::size_t pi = static_cast<std::size_t>(ti / cfg.seeds);
        Out& o = outs[static_cast<std::size_t>(ti)];
        const Graph g = random_graph(n, ps[pi], task_seed(cfg, ti));
        const auto t0 = Clock::now();
        const CliqueResult res = split_solve(g, cfg.size_limit, subsolver);
        o.ms = ms_since(t0);
        o.clique = res.size();
        o.calls = res.solver_calls;
        o.nodes = res.branch_nodes;
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[pi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            rows.push_back({istr(n), dstr(ps[pi]), istr(si), istr(o.clique),
                            ustr(o.calls), ustr(o.nodes), msstr(o.ms)});
        }
    }

    json per_p = json::array();
    std::vector<double> medians;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        std::vector<double> calls, cliques;
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[pi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            calls.push_back(static_cast<double>(o.calls));
            cliques.push_back(o.clique);
        }
        medians.push_back(median(calls));
        per_p.push_back({{"p", ps[pi]},
                         {"calls_median", median(calls)},
                         {"calls_stddev", sample_stddev(calls)},
                         {"clique_median", median(cliques)}});
    }
    bool monotone = true;
    for (std::size_t i = 1; i < medians.size(); ++i)
        if (medians[i] <= medians[i - 1]) monotone = false;
    double r2 = 0.0;
    bool all_positive = true;
    for (double m : medians) all_positive = all_positive && m > 0.0;
    if (all_positive) {
        std::vector<double> logs;
        for (double m : medians) logs.push_back(std::log(m));
        r2 = r_squared(ps, logs);
    }

    ExperimentResult result;
    result.csv = build_csv({"n", "p", "seed", "clique_size", "solver_calls",
                            "branch_nodes", "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "density-calls"},
                      {"n", n},
                      {"size_limit", cfg.size_limit},
                      {"seeds", cfg.seeds},
                      {"per_p", per_p},
                      {"calls_monotone_increasing", monotone},
                      {"log_calls_fit_r2", r2}};
    return result;
}

// ---------------------------------------------------------------------------
// qubit-scaling: size_limit_for_qubits across qubit doublings, with the
// split_solve call count the budget buys on a fixed target graph.

ExperimentResult run_qubit_scaling(const ExperimentConfig& cfg) {
    require(cfg.generations >= 1 && cfg.generations <= 40,
            "qubit-scaling: generations must lie in [1, 40]");
    require(cfg.base_qubits >= 8, "qubit-scaling: base_qubits must be at least 8");
    require(cfg.base_qubits <= (std::int64_t{1} << 40),
            "qubit-scaling: base_qubits too large");
    const int n = cfg.target_order;
    require(n >= 2, "qubit-scaling: target_order must be at least 2");
    const std::vector<double> ps = or_default(cfg.p_values, {0.1});
    check_probabilities("qubit-scaling", ps);
    const double p = ps.front();

    std::vector<std::int64_t> qubits(static_cast<std::size_t>(cfg.generations));
    std::vector<int> limits(static_cast<std::size_t>(cfg.generations));
    for (int gi = 0; gi < cfg.generations; ++gi) {
        qubits[static_cast<std::size_t>(gi)] = cfg.base_qubits << gi;
        limits[static_cast<std::size_t>(gi)] =
            size_limit_for_qubits(qubits[static_cast<std::size_t>(gi)]);
    }

    struct Out {
        int clique = 0;
        std::uint64_t calls = 0;
        double ms = 0;
    };
    const int count = cfg.generations * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const int gi = ti / cfg.seeds;
        const int si = ti % cfg.seeds;
        Out& o = outs[static_cast<std::size_t>(ti)];
        // One graph per seed, shared across generations, so the call counts
        // along a row of the table are comparable.
        const Graph g = random_graph(n, p, mix_seed(cfg.base_seed,
                                                    static_cast<std::uint64_t>(si) + 1));
        const int limit = limits[static_cast<std::size_t>(gi)];
        const int guard = std::max(200, limit);
        const auto t0 = Clock::now();
        const CliqueResult res = split_solve(
            g, limit, [guard](const Graph& sub) { return exact_clique(sub, guard); });
        o.ms = ms_since(t0);
        o.clique = res.size();
        o.calls = res.solver_calls;
    });

    std::vector<std::vector<std::string>> rows;
    for (int gi = 0; gi < cfg.generations; ++gi) {
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[static_cast<std::size_t>(gi * cfg.seeds + si)];
            rows.push_back({istr(gi), istr(qubits[static_cast<std::size_t>(gi)]),
                            istr(limits[static_cast<std::size_t>(gi)]), istr(n),
                            dstr(p), istr(si), istr(o.clique), ustr(o.calls),
                            msstr(o.ms)});
        }
    }

    json per_generation = json::array();
    int first_reaching = -1;
    for (int gi = 0; gi < cfg.generations; ++gi) {
        std::vector<double> calls;
        for (int si = 0; si < cfg.seeds; ++si)
            calls.push_back(static_cast<double>(
                outs[static_cast<std::size_t>(gi * cfg.seeds + si)].calls));
        if (first_reaching < 0 && limits[static_cast<std::size_t>(gi)] >= n)
            first_reaching = gi;
        per_generation.push_back({{"generation", gi},
                                  {"qubits", qubits[static_cast<std::size_t>(gi)]},
                                  {"size_limit", limits[static_cast<std::size_t>(gi)]},
                                  {"calls_median", median(calls)}});
    }

    ExperimentResult result;
    result.csv = build_csv({"generation", "qubits", "size_limit", "n", "p", "seed",
                            "clique_size", "solver_calls", "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "qubit-scaling"},
                      {"target_order", n},
                      {"p", p},
                      {"seeds", cfg.seeds},
                      {"per_generation", per_generation},
                      {"first_generation_reaching_target", first_reaching}};
    return result;
}

// ---------------------------------------------------------------------------
// cm-quality: independent sets on contraction minors via clique search on the
// complement, plus the cooling-rate escalation protocol.

ExperimentResult run_cm_quality(const ExperimentConfig& cfg) {
    require(cfg.chimera_m >= 1, "cm-quality: chimera_m must be positive");
    ChimeraSpec spec;
    spec.m = cfg.chimera_m;
    spec.n = cfg.chimera_m;
    spec.l = 4;
    const std::vector<int> ms = or_default(cfg.contraction_counts, {8, 16, 32, 64});
    for (int m : ms)
        require(m >= 0 && m < spec.operational_vertices(),
                "cm-quality: contraction count outside [0, operational vertices)");
    std::vector<double> alphas = or_default(cfg.alphas, {0.99, 0.999, 0.9996, 0.99999});
    for (double a : alphas) check_alpha("cm-quality", a);

    const Graph physical = chimera_graph(spec);
    struct MinorInfo {
        ChimeraMinor minor;
        Graph comp;
        bool bipartite = false;
        bool embedding_valid = false;
    };
    std::vector<MinorInfo> minors(ms.size());
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        MinorInfo& info = minors[mi];
        const std::uint64_t mseed =
            mix_seed(cfg.base_seed, static_cast<std::uint64_t>(ms[mi]) + 101);
        info.minor = contract_random_edges(spec, ms[mi], mseed);
        info.comp = info.minor.graph.complement();
        info.bipartite = info.minor.graph.is_bipartite();
        info.embedding_valid =
            verify_embedding(info.minor.embedding, physical, info.minor.graph).valid;
    }

    struct Out {
        int greedy = 0;
        double greedy_ms = 0;
        std::vector<int> sa;
        std::vector<std::uint64_t> sa_probes;
        std::vector<double> sa_ms;
    };
    const int count = static_cast<int>(ms.size()) * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const std::size_t mi = static_cast<std::size_t>(ti / cfg.seeds);
        const int si = ti % cfg.seeds;
        Out& o = outs[static_cast<std::size_t>(ti)];
        const Graph& comp = minors[mi].comp;
        const std::uint64_t sseed =
            mix_seed(task_seed(cfg, ti), static_cast<std::uint64_t>(si) + 1);

        auto t0 = Clock::now();
        o.greedy = greedy_clique(comp, mix_seed(sseed, 1)).size();
        o.greedy_ms = ms_since(t0);

        o.sa.resize(alphas.size());
        o.sa_probes.resize(alphas.size());
        o.sa_ms.resize(alphas.size());
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            SaCliqueOptions opt;
            opt.alpha = alphas[ai];
            opt.seed = mix_seed(sseed, 2 + static_cast<std::uint64_t>(ai));
            t0 = Clock::now();
            const CliqueResult res = sa_clique(comp, opt);
            o.sa_ms[ai] = ms_since(t0);
            o.sa[ai] = res.size();
            o.sa_probes[ai] = res.branch_nodes;
        }
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const int vertices = minors[mi].minor.graph.num_vertices();
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[mi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            rows.push_back({istr(ms[mi]), istr(vertices),
                            istr(minors[mi].bipartite ? 1 : 0), istr(si), "greedy",
                            "", istr(o.greedy), istr(0), msstr(o.greedy_ms)});
            for (std::size_t ai = 0; ai < alphas.size(); ++ai)
                rows.push_back({istr(ms[mi]), istr(vertices),
                                istr(minors[mi].bipartite ? 1 : 0), istr(si), "sa",
                                dstr(alphas[ai]), istr(o.sa[ai]),
                                ustr(o.sa_probes[ai]), msstr(o.sa_ms[ai])});
        }
    }

    // Reference cooling rate for the headline sa median: the configured alpha
    // when present in the sweep, otherwise the slowest (largest) one.
    std::size_t ref_ai = 0;
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        if (alphas[ai] == cfg.alpha) {
            ref_ai = ai;
            break;
        }
        if (alphas[ai] > alphas[ref_ai]) ref_ai = ai;
    }

    json per_m = json::array();
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        int best_known = 0;
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[mi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            best_known = std::max(best_known, o.greedy);
            for (int s : o.sa) best_known = std::max(best_known, s);
        }
        std::vector<double> greedy_sizes, sa_sizes;
        json curve = json::array();
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            int hits = 0;
            for (int si = 0; si < cfg.seeds; ++si) {
                const Out& o = outs[mi * static_cast<std::size_t>(cfg.seeds) +
                                    static_cast<std::size_t>(si)];
                hits += (o.sa[ai] == best_known);
            }
            curve.push_back({{"alpha", alphas[ai]},
                             {"success_rate", static_cast<double>(hits) / cfg.seeds}});
        }
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[mi * static_cast<std::size_t>(cfg.seeds) +
                                static_cast<std::size_t>(si)];
            greedy_sizes.push_back(o.greedy);
            sa_sizes.push_back(o.sa[ref_ai]);
        }
        per_m.push_back({{"m", ms[mi]},
                         {"vertices", minors[mi].minor.graph.num_vertices()},
                         {"bipartite", minors[mi].bipartite},
                         {"embedding_valid", minors[mi].embedding_valid},
                         {"greedy_median", median(greedy_sizes)},
                         {"sa_median", median(sa_sizes)},
                         {"sa_reference_alpha", alphas[ref_ai]},
                         {"best_known", best_known},
                         {"alpha_curve", curve}});
    }

    ExperimentResult result;
    result.csv = build_csv({"m", "vertices", "bipartite", "seed", "solver", "alpha",
                            "set_size", "probes", "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "cm-quality"},
                      {"chimera_m", cfg.chimera_m},
                      {"seeds", cfg.seeds},
                      {"per_m", per_m}};
    return result;
}

// ---------------------------------------------------------------------------
// chain-histogram: broken-chain rates across chain strengths for the minor
// MIS Ising solved on the physical graph.

ExperimentResult run_chain_histogram(const ExperimentConfig& cfg) {
    require(cfg.chimera_m >= 1, "chain-histogram: chimera_m must be positive");
    ChimeraSpec spec;
    spec.m = cfg.chimera_m;
    spec.n = cfg.chimera_m;
    spec.l = 4;
    const std::vector<int> ms = or_default(cfg.contraction_counts, {32});
    for (int m : ms)
        require(m >= 0 && m < spec.operational_vertices(),
                "chain-histogram: contraction count outside [0, operational vertices)");
    const std::vector<double> strengths =
        or_default(cfg.chain_strengths, {0.0, 0.5, 1.0, 2.0});
    for (double s : strengths)
        require(s >= 0.0, "chain-histogram: chain strength must be nonnegative");
    require(cfg.t_max >= 1, "chain-histogram: t_max must be positive");
    check_alpha("chain-histogram", cfg.alpha);

    const Graph physical = chimera_graph(spec);

    struct Instance {
        ChimeraMinor minor;
        IsingModel logical;
        std::vector<IsingModel> embedded;  // per strength
        std::vector<double> t0;            // start temperature per strength
        std::uint64_t mseed = 0;
    };
    std::vector<Instance> instances(ms.size());
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        Instance& inst = instances[mi];
        inst.mseed = mix_seed(cfg.base_seed, static_cast<std::uint64_t>(ms[mi]) + 101);
        inst.minor = contract_random_edges(spec, ms[mi], inst.mseed);
        inst.logical = qubo_to_ising(build_mis_qubo(inst.minor.graph));
        for (double s : strengths) {
            IsingModel emb = embed_model(inst.logical, inst.minor.embedding, physical, s);
            double t0 = 1.0;
            for (double h : emb.fields()) t0 = std::max(t0, std::abs(h));
            for (const auto& [key, w] : emb.couplers()) t0 = std::max(t0, std::abs(w));
            inst.embedded.push_back(std::move(emb));
            inst.t0.push_back(t0);
        }
    }

    struct Out {
        int broken = 0;
        double rate = 0;
        double logical_energy = 0;
        double physical_energy = 0;
        double ms = 0;
    };
    const int per_m = static_cast<int>(strengths.size()) * cfg.seeds;
    const int count = static_cast<int>(ms.size()) * per_m;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const std::size_t mi = static_cast<std::size_t>(ti / per_m);
        const int rest = ti % per_m;
        const std::size_t sti = static_cast<std::size_t>(rest / cfg.seeds);
        const int si = rest % cfg.seeds;
        Out& o = outs[static_cast<std::size_t>(ti)];
        const Instance& inst = instances[mi];
        // Seed depends on (m, seed index) only, so every strength anneals
        // from the same start state and the comparison is paired.
        const std::uint64_t run_seed = mix_seed(inst.mseed, static_cast<std::uint64_t>(si) + 1);

        const auto t0 = Clock::now();
        const AnnealSchedule schedule =
            AnnealSchedule::geometric(cfg.t_max, inst.t0[sti], cfg.alpha);
        const SampleSet samples = anneal_flip(inst.embedded[sti], schedule, run_seed);
        const SampleSet logical_samples = unembed(samples, inst.minor.embedding,
                                                  inst.logical,
                                                  UnembedStrategy::majority_vote);
        o.ms = ms_since(t0);
        const SampleRecord& best = logical_samples.best();
        o.broken = best.broken_chains;
        o.rate = static_cast<double>(best.broken_chains) /
                 static_cast<double>(inst.minor.embedding.chains.size());
        o.logical_energy = best.energy;
        o.physical_energy = samples.best().energy;
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const auto chains = instances[mi].minor.embedding.chains.size();
        for (std::size_t sti = 0; sti < strengths.size(); ++sti) {
            for (int si = 0; si < cfg.seeds; ++si) {
                const Out& o = outs[mi * static_cast<std::size_t>(per_m) +
                                    sti * static_cast<std::size_t>(cfg.seeds) +
                                    static_cast<std::size_t>(si)];
                rows.push_back({istr(ms[mi]), dstr(strengths[sti]), istr(si),
                                istr(static_cast<long long>(chains)), istr(o.broken),
                                dstr(o.rate), dstr(o.logical_energy),
                                dstr(o.physical_energy), msstr(o.ms)});
            }
        }
    }

    json per_m_json = json::array();
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        json rates = json::array();
        std::vector<double> medians;
        for (std::size_t sti = 0; sti < strengths.size(); ++sti) {
            std::vector<double> rs;
            for (int si = 0; si < cfg.seeds; ++si)
                rs.push_back(outs[mi * static_cast<std::size_t>(per_m) +
                                  sti * static_cast<std::size_t>(cfg.seeds) +
                                  static_cast<std::size_t>(si)]
                                 .rate);
            medians.push_back(median(rs));
            rates.push_back({{"strength", strengths[sti]},
                             {"broken_rate_median", median(rs)}});
        }
        per_m_json.push_back({{"m", ms[mi]},
                              {"chains", instances[mi].minor.embedding.chains.size()},
                              {"per_strength", rates},
                              {"first_exceeds_last",
                               medians.front() > medians.back()}});
    }

    ExperimentResult result;
    result.csv = build_csv({"m", "strength", "seed", "chains", "broken_chains",
                            "broken_rate", "logical_energy", "physical_energy",
                            "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "chain-histogram"},
                      {"chimera_m", cfg.chimera_m},
                      {"t_max", cfg.t_max},
                      {"alpha", cfg.alpha},
                      {"seeds", cfg.seeds},
                      {"per_m", per_m_json}};
    return result;
}

// ---------------------------------------------------------------------------
// ec-partition: balanced bisection by multilevel partitioning, pairwise-swap
// annealing, and decomposing tabu search against exhaustive ground truth.

ExperimentResult run_ec_partition(const ExperimentConfig& cfg) {
    const std::vector<int> ns = or_default(cfg.n_values, {6, 8, 10, 12, 14});
    for (int n : ns) {
        require(n >= 4 && n <= 24, "ec-partition: n must lie in [4, 24]");
        require(n % 2 == 0, "ec-partition: n must be even for bisection");
    }
    const std::vector<double> ps = or_default(cfg.p_values, {0.5});
    check_probabilities("ec-partition", ps);
    require(cfg.t_max >= 1, "ec-partition: t_max must be positive");
    require(cfg.subproblem_size >= 2, "ec-partition: subproblem_size must be at least 2");
    require(cfg.attempts >= 1, "ec-partition: attempts must be positive");

    struct Out {
        long long opt = 0;
        double opt_ms = 0;
        long long multilevel = 0;
        double multilevel_ms = 0;
        long long anneal = 0;
        double anneal_ms = 0;
        long long tabu = 0;
        bool tabu_balanced = false;
        std::uint64_t tabu_calls = 0;
        double tabu_ms = 0;
    };
    const int cases = static_cast<int>(ns.size()) * static_cast<int>(ps.size());
    const int count = cases * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const int ci = ti / cfg.seeds;
        const std::size_t ni = static_cast<std::size_t>(ci) / ps.size();
        const std::size_t pi = static_cast<std::size_t>(ci) % ps.size();
        const int n = ns[ni];
        Out& o = outs[static_cast<std::size_t>(ti)];
        const std::uint64_t gseed = task_seed(cfg, ti);
        const Graph g = random_graph(n, ps[pi], gseed);
        const IsingModel ising = build_bisection_ising(g);

        auto t0 = Clock::now();
        const SampleSet exact = brute_force(ising);
        o.opt_ms = ms_since(t0);
        o.opt = std::llround(exact.best().energy);

        t0 = Clock::now();
        const Partition part = multilevel_partition(g, 2, mix_seed(gseed, 1));
        o.multilevel_ms = ms_since(t0);
        o.multilevel = edge_cut(g, part);

        t0 = Clock::now();
        const SampleSet swept = anneal_swap_ising(ising, cfg.t_max, mix_seed(gseed, 2));
        o.anneal_ms = ms_since(t0);
        o.anneal = std::llround(swept.best().energy);

        t0 = Clock::now();
        TabuDecomposeOptions topt;
        topt.subproblem_size = cfg.subproblem_size;
        topt.attempts = cfg.attempts;
        topt.seed = mix_seed(gseed, 3);
        const SampleSet tabu = tabu_decompose(ising_to_qubo(ising), topt);
        o.tabu_ms = ms_since(t0);
        o.tabu = std::llround(tabu.best().energy);
        o.tabu_calls = tabu.stats().calls;
        int ones = 0;
        for (auto v : tabu.best().assignment.values) ones += (v != 0);
        o.tabu_balanced = (2 * ones == n);
    });

    std::vector<std::vector<std::string>> rows;
    for (int ci = 0; ci < cases; ++ci) {
        const std::size_t ni = static_cast<std::size_t>(ci) / ps.size();
        const std::size_t pi = static_cast<std::size_t>(ci) % ps.size();
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[static_cast<std::size_t>(ci * cfg.seeds + si)];
            const std::string n_s = istr(ns[ni]);
            const std::string p_s = dstr(ps[pi]);
            rows.push_back({n_s, p_s, istr(si), "exact", istr(o.opt), istr(1),
                            istr(0), msstr(o.opt_ms)});
            rows.push_back({n_s, p_s, istr(si), "multilevel", istr(o.multilevel),
                            istr(1), istr(0), msstr(o.multilevel_ms)});
            rows.push_back({n_s, p_s, istr(si), "anneal_swap", istr(o.anneal),
                            istr(1), istr(0), msstr(o.anneal_ms)});
            rows.push_back({n_s, p_s, istr(si), "tabu", istr(o.tabu),
                            istr(o.tabu_balanced ? 1 : 0), ustr(o.tabu_calls),
                            msstr(o.tabu_ms)});
        }
    }

    json per_n = json::array();
    double ml_total = 0, as_total = 0, tb_total = 0;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        int ml = 0, as = 0, tb = 0, total = 0;
        for (int ci = 0; ci < cases; ++ci) {
            if (static_cast<std::size_t>(ci) / ps.size() != ni) continue;
            for (int si = 0; si < cfg.seeds; ++si) {
                const Out& o = outs[static_cast<std::size_t>(ci * cfg.seeds + si)];
                ml += (o.multilevel == o.opt);
                as += (o.anneal == o.opt);
                tb += (o.tabu == o.opt && o.tabu_balanced);
                ++total;
            }
        }
        ml_total += ml;
        as_total += as;
        tb_total += tb;
        per_n.push_back({{"n", ns[ni]},
                         {"multilevel_rate", static_cast<double>(ml) / total},
                         {"anneal_swap_rate", static_cast<double>(as) / total},
                         {"tabu_rate", static_cast<double>(tb) / total}});
    }

    ExperimentResult result;
    result.csv = build_csv({"n", "p", "seed", "solver", "cut", "feasible", "calls",
                            "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "ec-partition"},
                      {"seeds", cfg.seeds},
                      {"per_n", per_n},
                      {"overall",
                       {{"multilevel_rate", ml_total / count},
                        {"anneal_swap_rate", as_total / count},
                        {"tabu_rate", tb_total / count}}}};
    return result;
}

// ---------------------------------------------------------------------------
// ch-partition: simulated-annealing refinement of the core-halo objective
// from random starts against the enumerated optimum.

ExperimentResult run_ch_partition(const ExperimentConfig& cfg) {
    const std::vector<int> ns = or_default(cfg.n_values, {4, 5, 6, 7, 8});
    require(cfg.k >= 2, "ch-partition: k must be at least 2");
    for (int n : ns) {
        require(n >= cfg.k, "ch-partition: n must be at least k");
        require(std::pow(static_cast<double>(cfg.k), n) <= 16'777'216.0,
                "ch-partition: k^n too large to enumerate");
    }
    const std::vector<double> ps = or_default(cfg.p_values, {0.5});
    check_probabilities("ch-partition", ps);
    require(cfg.t_max >= 1, "ch-partition: t_max must be positive");
    check_alpha("ch-partition", cfg.alpha);

    struct Out {
        long long start_cost = 0;
        long long refined_cost = 0;
        long long optimal_cost = 0;
        double ms = 0;
    };
    const int cases = static_cast<int>(ns.size()) * static_cast<int>(ps.size());
    const int count = cases * cfg.seeds;
    std::vector<Out> outs(static_cast<std::size_t>(count));

    run_tasks(count, cfg.threads, [&](int ti) {
        const int ci = ti / cfg.seeds;
        const std::size_t ni = static_cast<std::size_t>(ci) / ps.size();
        const std::size_t pi = static_cast<std::size_t>(ci) % ps.size();
        const int n = ns[ni];
        Out& o = outs[static_cast<std::size_t>(ti)];
        const std::uint64_t gseed = task_seed(cfg, ti);
        const Graph g = random_graph(n, ps[pi], gseed);

        // Odometer over all k^n assignments for the exact optimum.
        Partition probe;
        probe.k = cfg.k;
        probe.parts.assign(static_cast<std::size_t>(n), 0);
        long long best_cost = ch_cost(g, probe).total;
        while (true) {
            int pos = 0;
            while (pos < n && probe.parts[static_cast<std::size_t>(pos)] == cfg.k - 1)
                probe.parts[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n) break;
            ++probe.parts[static_cast<std::size_t>(pos)];
            best_cost = std::min(best_cost, ch_cost(g, probe).total);
        }
        o.optimal_cost = best_cost;

        Rng rng(mix_seed(gseed, 1));
        Partition start;
        start.k = cfg.k;
        start.parts.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            start.parts[static_cast<std::size_t>(v)] = rng.uniform_int(0, cfg.k - 1);
        o.start_cost = ch_cost(g, start).total;

        const auto t0 = Clock::now();
        const AnnealSchedule schedule = AnnealSchedule::geometric(
            cfg.t_max, std::max(4.0, static_cast<double>(n)), cfg.alpha);
        const Partition refined = refine_ch_sa(g, start, schedule, mix_seed(gseed, 2));
        o.ms = ms_since(t0);
        o.refined_cost = ch_cost(g, refined).total;
    });

    std::vector<std::vector<std::string>> rows;
    for (int ci = 0; ci < cases; ++ci) {
        const std::size_t ni = static_cast<std::size_t>(ci) / ps.size();
        const std::size_t pi = static_cast<std::size_t>(ci) % ps.size();
        for (int si = 0; si < cfg.seeds; ++si) {
            const Out& o = outs[static_cast<std::size_t>(ci * cfg.seeds + si)];
            rows.push_back({istr(ns[ni]), dstr(ps[pi]), istr(si), istr(cfg.k),
                            istr(o.start_cost), istr(o.refined_cost),
                            istr(o.optimal_cost),
                            istr(o.refined_cost == o.optimal_cost ? 1 : 0),
                            msstr(o.ms)});
        }
    }

    json per_n = json::array();
    double hits_total = 0;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        int hits = 0, total = 0;
        for (int ci = 0; ci < cases; ++ci) {
            if (static_cast<std::size_t>(ci) / ps.size() != ni) continue;
            for (int si = 0; si < cfg.seeds; ++si) {
                const Out& o = outs[static_cast<std::size_t>(ci * cfg.seeds + si)];
                hits += (o.refined_cost == o.optimal_cost);
                ++total;
            }
        }
        hits_total += hits;
        per_n.push_back({{"n", ns[ni]},
                         {"optimum_rate", static_cast<double>(hits) / total}});
    }

    ExperimentResult result;
    result.csv = build_csv({"n", "p", "seed", "k", "start_cost", "refined_cost",
                            "optimal_cost", "reached_optimum", "elapsed_ms"},
                           rows);
    result.summary = {{"experiment", "ch-partition"},
                      {"k", cfg.k},
                      {"seeds", cfg.seeds},
                      {"t_max", cfg.t_max},
                      {"alpha", cfg.alpha},
                      {"per_n", per_n},
                      {"overall_optimum_rate", hits_total / count}};
    return result;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "table1-clique", "density-calls",  "qubit-scaling", "cm-quality",
        "chain-histogram", "ec-partition", "ch-partition",
    };
    return names;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    require(config.seeds >= 1, "experiment: seeds must be positive");
    require(config.threads >= 0, "experiment: threads must be nonnegative");

    ExperimentResult result;
    if (config.name == "table1-clique") {
        result = run_table1(config);
    } else if (config.name == "density-calls") {
        result = run_density_calls(config);
    } else if (config.name == "qubit-scaling") {
        result = run_qubit_scaling(config);
    } else if (config.name == "cm-quality") {
        result = run_cm_quality(config);
    } else if (config.name == "chain-histogram") {
        result = run_chain_histogram(config);
    } else if (config.name == "ec-partition") {
        result = run_ec_partition(config);
    } else if (config.name == "ch-partition") {
        result = run_ch_partition(config);
    } else {
        std::string known;
        for (const auto& name : experiment_names()) {
            if (!known.empty()) known += ", ";
            known += name;
        }
        throw ConfigError("unknown experiment '" + config.name + "'; known: " + known);
    }

    if (!config.csv_path.empty()) {
        std::ofstream out(config.csv_path);
        if (!out) throw std::runtime_error("cannot open " + config.csv_path + " for writing");
        out << result.csv;
    }
    if (!config.json_path.empty()) {
        std::ofstream out(config.json_path);
        if (!out) throw std::runtime_error("cannot open " + config.json_path + " for writing");
        out << result.summary.dump(2) << '\n';
    }
    return result;
}

}  // namespace qopt
