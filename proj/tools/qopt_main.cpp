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

// Command-line front end: generate graphs, build QUBO files from graph
// problems, solve QUBO files, and drive the benchmark experiments.
// Exit codes: 0 success, 1 config error, 2 I/O error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qopt/builders.hpp"
#include "qopt/chimera.hpp"
#include "qopt/experiments.hpp"
#include "qopt/graph.hpp"
#include "qopt/graph_io.hpp"
#include "qopt/maxclique.hpp"
#include "qopt/model.hpp"
#include "qopt/parse_error.hpp"
#include "qopt/qubo_io.hpp"
#include "qopt/rng.hpp"
#include "qopt/solvers.hpp"

namespace {

struct GenerateArgs {
    std::string type = "gnp";
    int n = 45;
    double p = 0.5;
    std::uint64_t seed = 1;
    int chimera_m = 4;
    int chimera_l = 4;
    int contractions = 0;
    bool complement = false;
    std::string out;
    std::string embedding_out;
};

struct BuildArgs {
    std::string problem = "mis";
    std::string graph;
    std::string out;
    int k = 2;
    bool dimacs = false;
};

struct SolveArgs {
    std::string qubo;
    std::string solver = "anneal";
    std::uint64_t seed = 1;
    int reads = 10;
    std::uint64_t t_max = 20000;
    double alpha = 0.9996;
    std::optional<double> target;
    std::optional<double> timeout;
    int subproblem_size = 12;
};

struct ExperimentArgs {
    qopt::ExperimentConfig cfg;
};

qopt::Graph load_graph_file(const std::string& path, bool force_dimacs) {
    if (force_dimacs) return qopt::load_dimacs(path);
    return qopt::load_graph(path);
}

int run_generate(const GenerateArgs& a) {
    qopt::Graph g;
    if (a.type == "gnp") {
        if (a.n < 0) throw qopt::ConfigError("generate: n must be nonnegative");
        if (a.p < 0.0 || a.p > 1.0)
            throw qopt::ConfigError("generate: p must lie in [0, 1]");
        g = qopt::random_graph(a.n, a.p, a.seed);
    } else if (a.type == "chimera" || a.type == "minor") {
        qopt::ChimeraSpec spec;
        spec.m = a.chimera_m;
        spec.n = a.chimera_m;
        spec.l = a.chimera_l;
        if (spec.m < 1 || spec.l < 1)
            throw qopt::ConfigError("generate: chimera dimensions must be positive");
        if (a.type == "chimera") {
            g = qopt::chimera_graph(spec);
        } else {
            const qopt::ChimeraMinor minor =
                qopt::contract_random_edges(spec, a.contractions, a.seed);
            g = minor.graph;
            if (!a.embedding_out.empty())
                qopt::save_embedding(minor.embedding, a.embedding_out);
        }
    } else {
        throw qopt::ConfigError("generate: unknown type '" + a.type +
                                "' (expected gnp, chimera, or minor)");
    }
    if (a.complement) g = g.complement();
    qopt::save_edge_list(g, a.out);
    std::cout << "wrote " << a.out << " (" << g.num_vertices() << " vertices, "
              << g.num_edges() << " edges)\n";
    return 0;
}

int run_build(const BuildArgs& a) {
    const qopt::Graph g = load_graph_file(a.graph, a.dimacs);
    qopt::QuboModel q;
    if (a.problem == "mis") {
        q = qopt::build_mis_qubo(g);
    } else if (a.problem == "clique") {
        q = qopt::build_clique_kfixed_qubo(g, a.k);
    } else if (a.problem == "bisection") {
        q = qopt::ising_to_qubo(qopt::build_bisection_ising(g));
    } else if (a.problem == "kway") {
        q = qopt::build_kway_qubo(g, a.k).first;
    } else if (a.problem == "ch") {
        q = qopt::build_ch_qubo(g, a.k).first;
    } else {
        throw qopt::ConfigError("build: unknown problem '" + a.problem +
                                "' (expected mis, clique, bisection, kway, or ch)");
    }
    qopt::save_qubo_file(q, a.out);
    std::cout << "wrote " << a.out << " (" << q.num_variables() << " variables, "
              << q.quadratic_terms().size() << " couplers)\n";
    return 0;
}

int run_solve(const SolveArgs& a) {
    const qopt::QuboModel q = qopt::load_qubo_file(a.qubo);
    if (a.reads < 1) throw qopt::ConfigError("solve: reads must be positive");

    qopt::SampleSet best_set;
    if (a.solver == "exact") {
        if (q.num_variables() > 30)
            throw qopt::ConfigError("solve: exact solver limited to 30 variables");
        best_set = qopt::brute_force(q);
    } else if (a.solver == "anneal") {
        if (a.t_max < 1) throw qopt::ConfigError("solve: t-max must be positive");
        if (a.alpha <= 0.0 || a.alpha >= 1.0)
            throw qopt::ConfigError("solve: alpha must lie in (0, 1)");
        double t0 = 1.0;
        for (double w : q.linear_terms()) t0 = std::max(t0, std::abs(w));
        for (const auto& [key, w] : q.quadratic_terms()) t0 = std::max(t0, std::abs(w));
        const qopt::AnnealSchedule schedule =
            qopt::AnnealSchedule::geometric(a.t_max, t0, a.alpha);
        for (int r = 0; r < a.reads; ++r) {
            qopt::SampleSet run =
                qopt::anneal_flip(q, schedule, qopt::mix_seed(a.seed, r + 1));
            if (best_set.empty() || run.best().energy < best_set.best().energy)
                best_set = std::move(run);
        }
    } else if (a.solver == "tabu") {
        qopt::TabuDecomposeOptions opt;
        opt.subproblem_size = a.subproblem_size;
        opt.attempts = a.reads;
        opt.target = a.target;
        opt.timeout_seconds = a.timeout;
        opt.seed = a.seed;
        best_set = qopt::tabu_decompose(q, opt);
    } else {
        throw qopt::ConfigError("solve: unknown solver '" + a.solver +
                                "' (expected exact, anneal, or tabu)");
    }

    const qopt::SampleRecord& best = best_set.best();
    nlohmann::json report;
    report["energy"] = best.energy;
    std::vector<int> bits;
    bits.reserve(best.assignment.values.size());
    for (auto v : best.assignment.values) bits.push_back(v != 0 ? 1 : 0);
    report["assignment"] = bits;
    report["solver"] = a.solver;
    report["steps"] = best_set.stats().steps;
    report["calls"] = best_set.stats().calls;
    report["elapsed_seconds"] = best_set.stats().elapsed_seconds;
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_experiment_cmd(const ExperimentArgs& a) {
    const qopt::ExperimentResult result = qopt::run_experiment(a.cfg);
    std::cout << result.summary.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO/Ising toolkit for graph problems"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a graph file");
    generate->add_option("--type", gen.type, "gnp, chimera, or minor");
    generate->add_option("--n", gen.n, "vertex count for gnp");
    generate->add_option("--p", gen.p, "edge probability for gnp");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--chimera-m", gen.chimera_m, "chimera grid side");
    generate->add_option("--chimera-l", gen.chimera_l, "chimera cell shore size");
    generate->add_option("--contractions", gen.contractions,
                         "edge contractions for type minor");
    generate->add_flag("--complement", gen.complement, "write the complement graph");
    generate->add_option("--embedding-out", gen.embedding_out,
                         "write the minor's chain embedding here");
    generate->add_option("--out", gen.out, "output edge-list path")->required();

    BuildArgs bld;
    CLI::App* build = app.add_subcommand("build", "Build a QUBO file from a graph");
    build->add_option("--problem", bld.problem, "mis, clique, bisection, kway, or ch");
    build->add_option("--graph", bld.graph, "input graph path")->required();
    build->add_option("--k", bld.k, "clique size / part count");
    build->add_flag("--dimacs", bld.dimacs, "force DIMACS input parsing");
    build->add_option("--out", bld.out, "output .qubo path")->required();

    SolveArgs sol;
    CLI::App* solve = app.add_subcommand("solve", "Solve a QUBO file");
    solve->add_option("--qubo", sol.qubo, "input .qubo path")->required();
    solve->add_option("--solver", sol.solver, "exact, anneal, or tabu");
    solve->add_option("--seed", sol.seed, "RNG seed");
    solve->add_option("--reads", sol.reads, "restarts (anneal) or attempts (tabu)");
    solve->add_option("--t-max", sol.t_max, "annealing steps per read");
    solve->add_option("--alpha", sol.alpha, "geometric cooling rate");
    solve->add_option("--target", sol.target, "stop once this energy is reached");
    solve->add_option("--timeout", sol.timeout, "wall-clock budget in seconds");
    solve->add_option("--subproblem-size", sol.subproblem_size,
                      "tabu decomposition window");

    ExperimentArgs exp;
    CLI::App* experiment = app.add_subcommand("experiment", "Run a benchmark experiment");
    std::string names;
    for (const auto& name : qopt::experiment_names()) {
        if (!names.empty()) names += ", ";
        names += name;
    }
    experiment->add_option("--name", exp.cfg.name, "one of: " + names)->required();
    experiment->add_option("--seed", exp.cfg.base_seed, "base RNG seed");
    experiment->add_option("--seeds", exp.cfg.seeds, "instances per configuration");
    experiment->add_option("--threads", exp.cfg.threads, "worker threads (0 = auto)");
    experiment->add_option("--n", exp.cfg.n_values, "graph orders");
    experiment->add_option("--p", exp.cfg.p_values, "edge probabilities");
    experiment->add_option("--k", exp.cfg.k, "part count");
    experiment->add_option("--reads", exp.cfg.reads, "restarts per instance");
    experiment->add_option("--alpha", exp.cfg.alpha, "reference cooling rate");
    experiment->add_option("--alphas", exp.cfg.alphas, "cooling-rate sweep");
    experiment->add_option("--t-max", exp.cfg.t_max, "annealing steps");
    experiment->add_option("--size-limit", exp.cfg.size_limit, "split_solve leaf size");
    experiment->add_option("--subproblem-size", exp.cfg.subproblem_size,
                           "tabu decomposition window");
    experiment->add_option("--attempts", exp.cfg.attempts, "tabu attempts");
    experiment->add_option("--chain-strengths", exp.cfg.chain_strengths,
                           "chain strengths to sweep");
    experiment->add_option("--chimera-m", exp.cfg.chimera_m, "chimera grid side");
    experiment->add_option("--contractions", exp.cfg.contraction_counts,
                           "contraction counts");
    experiment->add_option("--generations", exp.cfg.generations, "qubit doublings");
    experiment->add_option("--base-qubits", exp.cfg.base_qubits, "starting qubit count");
    experiment->add_option("--target-order", exp.cfg.target_order,
                           "graph order the scaling aims at");
    experiment->add_option("--csv", exp.cfg.csv_path, "per-run CSV output path");
    experiment->add_option("--json", exp.cfg.json_path, "summary JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*build) return run_build(bld);
        if (*solve) return run_solve(sol);
        if (*experiment) return run_experiment_cmd(exp);
    } catch (const qopt::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const qopt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
