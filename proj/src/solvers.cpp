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

#include "qopt/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qopt/rng.hpp"

namespace qopt {

namespace {

constexpr int kBruteForceLimit = 30;
// Incremental energies only drift by rounding; anything inside this band is
// re-evaluated from scratch before it may become the incumbent.
constexpr double kDriftBand = 1e-9;
// Descent ignores deltas above this floor so rounding noise cannot cycle.
constexpr double kDescentFloor = -1e-12;

// Flattened model: linear[i] is Q_ii or h_i, adj[i] lists both orientations
// of every quadratic term touching i.
struct Compiled {
    int n = 0;
    double offset = 0.0;
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> adj;
    double max_abs_weight = 0.0;
};

template <typename Model>
Compiled compile_terms(const Model& model,
                       const std::map<std::pair<int, int>, double>& quad) {
    Compiled c;
    c.n = model.num_variables();
    c.offset = model.offset();
    c.linear.assign(static_cast<std::size_t>(c.n), 0.0);
    c.adj.resize(static_cast<std::size_t>(c.n));
    for (const auto& [key, w] : quad) {
        c.adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, w);
        c.adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, w);
        c.max_abs_weight = std::max(c.max_abs_weight, std::abs(w));
    }
    return c;
}

Compiled compile(const QuboModel& q) {
    Compiled c = compile_terms(q, q.quadratic_terms());
    for (int i = 0; i < c.n; ++i) {
        c.linear[static_cast<std::size_t>(i)] = q.linear(i);
        c.max_abs_weight = std::max(c.max_abs_weight, std::abs(q.linear(i)));
    }
    return c;
}

Compiled compile(const IsingModel& m) {
    Compiled c = compile_terms(m, m.couplers());
    for (int i = 0; i < c.n; ++i) {
        c.linear[static_cast<std::size_t>(i)] = m.field(i);
        c.max_abs_weight = std::max(c.max_abs_weight, std::abs(m.field(i)));
    }
    return c;
}

struct BinaryOps {
    static constexpr std::int8_t start_value = 0;

    static std::int8_t from_bit(std::uint64_t b) { return static_cast<std::int8_t>(b); }

    static void flip(std::vector<std::int8_t>& x, int i) {
        x[static_cast<std::size_t>(i)] ^= 1;
    }

    static double residual(const Compiled& c, const std::vector<std::int8_t>& x, int i) {
        double r = c.linear[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : c.adj[static_cast<std::size_t>(i)])
            r += w * x[static_cast<std::size_t>(j)];
        return r;
    }

    static double delta_from_residual(std::int8_t xi, double r) {
        return (1.0 - 2.0 * xi) * r;
    }

    static double flip_delta(const Compiled& c, const std::vector<std::int8_t>& x, int i) {
        return delta_from_residual(x[static_cast<std::size_t>(i)], residual(c, x, i));
    }

    static double energy(const Compiled& c, const std::vector<std::int8_t>& x) {
        double e = c.offset;
        for (int i = 0; i < c.n; ++i) {
            if (!x[static_cast<std::size_t>(i)]) continue;
            e += c.linear[static_cast<std::size_t>(i)];
            for (const auto& [j, w] : c.adj[static_cast<std::size_t>(i)])
                if (j > i && x[static_cast<std::size_t>(j)]) e += w;
        }
        return e;
    }

    static Assignment make(const std::vector<std::int8_t>& x) {
        return binary_assignment(x);
    }
};

struct SpinOps {
    static constexpr std::int8_t start_value = -1;

    static std::int8_t from_bit(std::uint64_t b) { return b ? 1 : -1; }

    static void flip(std::vector<std::int8_t>& s, int i) {
        s[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-s[static_cast<std::size_t>(i)]);
    }

    static double residual(const Compiled& c, const std::vector<std::int8_t>& s, int i) {
        double r = c.linear[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : c.adj[static_cast<std::size_t>(i)])
            r += w * s[static_cast<std::size_t>(j)];
        return r;
    }

    static double delta_from_residual(std::int8_t si, double r) { return -2.0 * si * r; }

    static double flip_delta(const Compiled& c, const std::vector<std::int8_t>& s, int i) {
        return delta_from_residual(s[static_cast<std::size_t>(i)], residual(c, s, i));
    }

    static double energy(const Compiled& c, const std::vector<std::int8_t>& s) {
        double e = c.offset;
        for (int i = 0; i < c.n; ++i) {
            e += c.linear[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
            for (const auto& [j, w] : c.adj[static_cast<std::size_t>(i)])
                if (j > i)
                    e += w * s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        return e;
    }

    static Assignment make(const std::vector<std::int8_t>& s) {
        return spin_assignment(s);
    }
};

void check_start(const Assignment& a, Domain expected, int n, const char* what) {
    if (a.domain != expected)
        throw std::invalid_argument(std::string(what) + ": wrong assignment domain");
    if (a.size() != n)
        throw std::invalid_argument(std::string(what) + ": assignment length mismatch");
}

// Gray-code walk over all 2^n states: step t flips bit ctz(t+1), so every
// state is one flip from its predecessor. The gray value doubles as the
// assignment's integer encoding (variable i at bit i), which is exactly the
// tie-break key.
template <typename Ops>
SampleSet brute_force_impl(const Compiled& c) {
    if (c.n > kBruteForceLimit)
        throw std::length_error("brute_force: more than " +
                                std::to_string(kBruteForceLimit) + " variables");
    std::vector<std::int8_t> state(static_cast<std::size_t>(c.n), Ops::start_value);
    double e = Ops::energy(c, state);
    double best_e = e;
    std::uint64_t gray = 0;
    std::uint64_t best_gray = 0;
    std::uint64_t ties = 1;
    const std::uint64_t total = std::uint64_t{1} << c.n;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int b = std::countr_zero(t);
        e += Ops::flip_delta(c, state, b);
        Ops::flip(state, b);
        gray ^= std::uint64_t{1} << b;
        if (e <= best_e + kDriftBand) {
            e = Ops::energy(c, state);
            if (e < best_e) {
                best_e = e;
                best_gray = gray;
                ties = 1;
            } else if (e == best_e) {
                ++ties;
                best_gray = std::min(best_gray, gray);
            }
        }
    }
    std::vector<std::int8_t> best_state(static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i)
        best_state[static_cast<std::size_t>(i)] = Ops::from_bit((best_gray >> i) & 1);
    SampleSet out;
    out.push(SampleRecord{Ops::make(best_state), best_e, true, 0});
    out.stats().steps = total;
    out.stats().ties = ties;
    out.stats().stop_reason = "exhausted";
    return out;
}

template <typename Ops>
std::vector<Assignment> brute_force_optima_impl(const Compiled& c, std::size_t limit) {
    if (c.n > kBruteForceLimit)
        throw std::length_error("brute_force_optima: more than " +
                                std::to_string(kBruteForceLimit) + " variables");
    std::vector<std::int8_t> state(static_cast<std::size_t>(c.n), Ops::start_value);
    double e = Ops::energy(c, state);
    double best_e = e;
    std::uint64_t gray = 0;
    std::vector<std::uint64_t> optima{0};
    const std::uint64_t total = std::uint64_t{1} << c.n;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int b = std::countr_zero(t);
        e += Ops::flip_delta(c, state, b);
        Ops::flip(state, b);
        gray ^= std::uint64_t{1} << b;
        if (e <= best_e + kDriftBand) {
            e = Ops::energy(c, state);
            if (e < best_e) {
                best_e = e;
                optima.assign(1, gray);
            } else if (e == best_e) {
                optima.push_back(gray);
                if (optima.size() > limit)
                    throw std::length_error("brute_force_optima: optimum count exceeds limit");
            }
        }
    }
    std::sort(optima.begin(), optima.end());
    std::vector<Assignment> out;
    out.reserve(optima.size());
    for (std::uint64_t g : optima) {
        std::vector<std::int8_t> values(static_cast<std::size_t>(c.n));
        for (int i = 0; i < c.n; ++i)
            values[static_cast<std::size_t>(i)] = Ops::from_bit((g >> i) & 1);
        out.push_back(Ops::make(values));
    }
    return out;
}

template <typename Ops>
SampleSet anneal_flip_impl(const Compiled& c, const AnnealSchedule& schedule,
                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int8_t> state(static_cast<std::size_t>(c.n));
    for (auto& v : state) v = Ops::from_bit(rng.bernoulli(0.5) ? 1 : 0);
    double e = Ops::energy(c, state);
    double best_e = e;

    SampleSet out;
    out.push(SampleRecord{Ops::make(state), e, true, 0});
    if (c.n > 0) {
        for (std::uint64_t t = 0; t < schedule.steps; ++t) {
            const int i = rng.uniform_int(0, c.n - 1);
            const double delta = Ops::flip_delta(c, state, i);
            bool accept = delta <= 0.0;
            if (!accept)
                accept = rng.uniform01() < std::exp(-delta / schedule.temperature(t));
            if (!accept) continue;
            Ops::flip(state, i);
            e += delta;
            if (e < best_e) {
                e = Ops::energy(c, state);
                if (e < best_e) {
                    best_e = e;
                    out.push(SampleRecord{Ops::make(state), e, true, 0});
                }
            }
        }
    }
    out.stats().steps = schedule.steps;
    out.stats().seed = seed;
    out.stats().stop_reason = "steps";
    return out;
}

template <typename Ops>
Assignment local_search_impl(const Compiled& c, const Assignment& start) {
    std::vector<std::int8_t> state = start.values;
    std::vector<double> residual(static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i)
        residual[static_cast<std::size_t>(i)] = Ops::residual(c, state, i);
    for (;;) {
        int best_i = -1;
        double best_delta = kDescentFloor;
        for (int i = 0; i < c.n; ++i) {
            const double delta = Ops::delta_from_residual(
                state[static_cast<std::size_t>(i)], residual[static_cast<std::size_t>(i)]);
            if (delta < best_delta) {
                best_delta = delta;
                best_i = i;
            }
        }
        if (best_i < 0) break;
        const std::int8_t old_value = state[static_cast<std::size_t>(best_i)];
        Ops::flip(state, best_i);
        const double change = state[static_cast<std::size_t>(best_i)] - old_value;
        for (const auto& [j, w] : c.adj[static_cast<std::size_t>(best_i)])
            residual[static_cast<std::size_t>(j)] += w * change;
    }
    Assignment out = start;
    out.values = std::move(state);
    return out;
}

double max_abs_weight(const QuboModel& q) {
    double m = 0.0;
    for (int i = 0; i < q.num_variables(); ++i) m = std::max(m, std::abs(q.linear(i)));
    for (const auto& [key, w] : q.quadratic_terms()) m = std::max(m, std::abs(w));
    return m;
}

SampleSet default_subsolve(const QuboModel& sub, std::uint64_t seed) {
    if (sub.num_variables() <= kBruteForceLimit) return brute_force(sub);
    const double t0 = std::max(max_abs_weight(sub), 1.0);
    const auto schedule =
        AnnealSchedule::geometric(2000ull * static_cast<std::uint64_t>(sub.num_variables()),
                                  t0, 0.999);
    return anneal_flip(sub, schedule, seed);
}

}  // namespace

AnnealSchedule AnnealSchedule::logarithmic(std::uint64_t steps, double t0) {
    if (!(t0 > 0.0)) throw std::invalid_argument("AnnealSchedule: t0 must be positive");
    return AnnealSchedule{Kind::logarithmic, steps, t0, 0.999};
}

AnnealSchedule AnnealSchedule::geometric(std::uint64_t steps, double t0, double alpha) {
    if (!(t0 > 0.0)) throw std::invalid_argument("AnnealSchedule: t0 must be positive");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("AnnealSchedule: alpha must be in (0, 1)");
    return AnnealSchedule{Kind::geometric, steps, t0, alpha};
}

double AnnealSchedule::temperature(std::uint64_t t) const {
    return kind == Kind::logarithmic
               ? t0 / std::log(2.0 + static_cast<double>(t))
               : t0 * std::pow(alpha, static_cast<double>(t));
}

void SampleSet::push(SampleRecord record) {
    if (records_.empty() || record.energy < records_[best_].energy)
        best_ = records_.size();
    records_.push_back(std::move(record));
}

const SampleRecord& SampleSet::best() const {
    if (records_.empty()) throw std::out_of_range("SampleSet: no records");
    return records_[best_];
}

std::size_t SampleSet::best_index() const {
    if (records_.empty()) throw std::out_of_range("SampleSet: no records");
    return best_;
}

SampleSet brute_force(const QuboModel& q) { return brute_force_impl<BinaryOps>(compile(q)); }

SampleSet brute_force(const IsingModel& m) { return brute_force_impl<SpinOps>(compile(m)); }

std::vector<Assignment> brute_force_optima(const QuboModel& q, std::size_t limit) {
    return brute_force_optima_impl<BinaryOps>(compile(q), limit);
}

std::vector<Assignment> brute_force_optima(const IsingModel& m, std::size_t limit) {
    return brute_force_optima_impl<SpinOps>(compile(m), limit);
}

SampleSet anneal_swap_ising(const IsingModel& m, std::uint64_t t_max, std::uint64_t seed) {
    const int n = m.num_variables();
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument(
            "anneal_swap_ising: model must have a positive even number of spins");
    const Compiled c = compile(m);
    Rng rng(seed);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const int half = n / 2;
    std::vector<int> plus(perm.begin(), perm.begin() + half);
    std::vector<int> minus(perm.begin() + half, perm.end());
    std::vector<std::int8_t> s(static_cast<std::size_t>(n), -1);
    for (int v : plus) s[static_cast<std::size_t>(v)] = 1;

    double e = SpinOps::energy(c, s);
    double best_e = e;
    SampleSet out;
    out.push(SampleRecord{spin_assignment(s), e, true, 0});

    const double t0 = c.max_abs_weight;
    for (std::uint64_t t = 0; t < t_max; ++t) {
        const int iu = rng.uniform_int(0, half - 1);
        const int iv = rng.uniform_int(0, half - 1);
        const int u = plus[static_cast<std::size_t>(iu)];
        const int v = minus[static_cast<std::size_t>(iv)];
        double au = c.linear[static_cast<std::size_t>(u)];
        double j_uv = 0.0;
        for (const auto& [j, w] : c.adj[static_cast<std::size_t>(u)]) {
            au += w * s[static_cast<std::size_t>(j)];
            if (j == v) j_uv = w;
        }
        double av = c.linear[static_cast<std::size_t>(v)];
        for (const auto& [j, w] : c.adj[static_cast<std::size_t>(v)])
            av += w * s[static_cast<std::size_t>(j)];
        // Double flip: the cross term undoes the double-counted u-v coupler.
        const double delta = -2.0 * au * s[static_cast<std::size_t>(u)] -
                             2.0 * av * s[static_cast<std::size_t>(v)] +
                             4.0 * j_uv * s[static_cast<std::size_t>(u)] *
                                 s[static_cast<std::size_t>(v)];
        bool accept = delta <= 0.0;
        if (!accept) {
            const double temp = t0 / std::log(2.0 + static_cast<double>(t));
            accept = rng.uniform01() < std::exp(-delta / temp);
        }
        if (!accept) continue;
        s[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(-s[static_cast<std::size_t>(u)]);
        s[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(-s[static_cast<std::size_t>(v)]);
        plus[static_cast<std::size_t>(iu)] = v;
        minus[static_cast<std::size_t>(iv)] = u;
        e += delta;
        if (e < best_e) {
            e = SpinOps::energy(c, s);
            if (e < best_e) {
                best_e = e;
                out.push(SampleRecord{spin_assignment(s), e, true, 0});
            }
        }
    }
    out.stats().steps = t_max;
    out.stats().seed = seed;
    out.stats().stop_reason = "steps";
    return out;
}

SampleSet anneal_flip(const QuboModel& q, const AnnealSchedule& schedule, std::uint64_t seed) {
    return anneal_flip_impl<BinaryOps>(compile(q), schedule, seed);
}

SampleSet anneal_flip(const IsingModel& m, const AnnealSchedule& schedule, std::uint64_t seed) {
    return anneal_flip_impl<SpinOps>(compile(m), schedule, seed);
}

Assignment local_search(const QuboModel& q, const Assignment& start) {
    check_start(start, Domain::binary, q.num_variables(), "local_search");
    return local_search_impl<BinaryOps>(compile(q), start);
}

Assignment local_search(const IsingModel& m, const Assignment& start) {
    check_start(start, Domain::spin, m.num_variables(), "local_search");
    return local_search_impl<SpinOps>(compile(m), start);
}

SampleSet tabu_decompose(const QuboModel& q, const TabuDecomposeOptions& options) {
    if (options.subproblem_size < 1)
        throw std::invalid_argument("tabu_decompose: subproblem_size must be positive");
    if (options.tabu_capacity < 0)
        throw std::invalid_argument("tabu_decompose: negative tabu capacity");
    const auto started = std::chrono::steady_clock::now();
    const auto elapsed = [&started] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    };
    const auto solve_sub = [&options](const QuboModel& sub, std::uint64_t s) {
        return options.subsolver ? options.subsolver(sub, s) : default_subsolve(sub, s);
    };

    const int n = q.num_variables();
    SampleSet out;
    out.stats().seed = options.seed;

    if (n <= options.subproblem_size) {
        const SampleSet sub = solve_sub(q, mix_seed(options.seed, 1));
        const Assignment refined = local_search(q, sub.best().assignment);
        out.push(SampleRecord{refined, qubo_energy(q, refined), true, 0});
        out.stats().calls = 1;
        out.stats().stop_reason = "direct";
        out.stats().elapsed_seconds = elapsed();
        return out;
    }

    const Compiled c = compile(q);
    Rng rng(options.seed);
    std::vector<std::int8_t> init(static_cast<std::size_t>(n));
    for (auto& v : init) v = rng.bernoulli(0.5) ? 1 : 0;
    Assignment cur = local_search(q, binary_assignment(std::move(init)));
    double cur_e = qubo_energy(q, cur);
    double best_e = cur_e;
    out.push(SampleRecord{cur, cur_e, true, 0});

    std::deque<std::vector<int>> tabu;
    std::string stop = "attempts";
    std::uint64_t calls = 0;
    int attempt = 0;
    const int k = options.subproblem_size;

    if (options.target && best_e <= *options.target) {
        stop = "target";
    } else {
        for (; attempt < options.attempts; ++attempt) {
            if (options.timeout_seconds && elapsed() >= *options.timeout_seconds) {
                stop = "timeout";
                break;
            }
            // Freeze everything but the k currently most sensitive variables.
            std::vector<double> impact(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                impact[static_cast<std::size_t>(i)] =
                    std::abs(BinaryOps::flip_delta(c, cur.values, i));
            std::vector<int> order(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&impact](int a, int b) {
                return impact[static_cast<std::size_t>(a)] > impact[static_cast<std::size_t>(b)];
            });
            std::vector<int> selected;
            for (int offset = 0; offset + k <= n; ++offset) {
                selected.assign(order.begin() + offset, order.begin() + offset + k);
                std::sort(selected.begin(), selected.end());
                if (std::find(tabu.begin(), tabu.end(), selected) == tabu.end()) break;
            }
            tabu.push_back(selected);
            while (static_cast<int>(tabu.size()) > options.tabu_capacity) tabu.pop_front();

            // Clamped subproblem; the frozen contribution rides in the offset
            // so subproblem energies are full-model energies.
            std::vector<int> pos(static_cast<std::size_t>(n), -1);
            for (int r = 0; r < k; ++r) pos[static_cast<std::size_t>(selected[r])] = r;
            QuboModel sub(k, q.offset());
            double clamped = 0.0;
            for (int i = 0; i < n; ++i) {
                if (pos[static_cast<std::size_t>(i)] >= 0)
                    sub.add_linear(pos[static_cast<std::size_t>(i)], q.linear(i));
                else if (cur.values[static_cast<std::size_t>(i)])
                    clamped += q.linear(i);
            }
            for (const auto& [key, w] : q.quadratic_terms()) {
                const int pi = pos[static_cast<std::size_t>(key.first)];
                const int pj = pos[static_cast<std::size_t>(key.second)];
                const bool xi = cur.values[static_cast<std::size_t>(key.first)] != 0;
                const bool xj = cur.values[static_cast<std::size_t>(key.second)] != 0;
                if (pi >= 0 && pj >= 0)
                    sub.add_quadratic(pi, pj, w);
                else if (pi >= 0 && xj)
                    sub.add_linear(pi, w);
                else if (pj >= 0 && xi)
                    sub.add_linear(pj, w);
                else if (pi < 0 && pj < 0 && xi && xj)
                    clamped += w;
            }
            sub.add_offset(clamped);

            ++calls;
            const SampleSet subres = solve_sub(sub, mix_seed(options.seed, calls));
            Assignment merged = cur;
            const Assignment& y = subres.best().assignment;
            for (int r = 0; r < k; ++r)
                merged.values[static_cast<std::size_t>(selected[r])] =
                    y.values[static_cast<std::size_t>(r)];
            const Assignment refined = local_search(q, merged);
            const double refined_e = qubo_energy(q, refined);
            if (refined_e <= cur_e) {
                cur = refined;
                cur_e = refined_e;
            }
            if (refined_e < best_e) {
                best_e = refined_e;
                out.push(SampleRecord{refined, refined_e, true, 0});
            }
            if (options.target && best_e <= *options.target) {
                ++attempt;
                stop = "target";
                break;
            }
        }
    }
    out.stats().steps = static_cast<std::uint64_t>(attempt);
    out.stats().calls = calls;
    out.stats().stop_reason = stop;
    out.stats().elapsed_seconds = elapsed();
    return out;
}

}  // namespace qopt
