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
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qopt {

class ConfigError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

// Shared knob set for the benchmark experiments. Fields irrelevant to an
// experiment are ignored; invalid values for a relevant field raise
// ConfigError before any run starts. Zeroed list fields fall back to the
// experiment's defaults.
struct ExperimentConfig {
    std::string name;

    std::vector<int> n_values;
    std::vector<double> p_values;
    int seeds = 10;
    std::uint64_t base_seed = 1;

    int k = 2;                          // partition arity
    int size_limit = 45;                // split_solve leaf size
    std::vector<double> alphas;         // sa_clique cooling rates
    double alpha = 0.9996;
    std::uint64_t t_max = 20000;        // annealer steps
    int reads = 20;                     // restarts per instance
    int subproblem_size = 12;
    int attempts = 30;                  // tabu_decompose attempts
    std::vector<double> chain_strengths;
    int chimera_m = 4;                  // square chimera grid for minors
    std::vector<int> contraction_counts;
    int generations = 8;                // qubit doublings, starting at 1152
    std::int64_t base_qubits = 1152;
    int target_order = 500;             // graph order the scaling aims at

    int threads = 0;                    // 0 = hardware concurrency

    std::string csv_path;               // empty = don't write
    std::string json_path;
};

struct ExperimentResult {
    std::string csv;          // header + rows; elapsed_ms is the last column
    nlohmann::json summary;
};

// Experiments:
//   table1-clique    exact vs annealed clique sizes on G(45, p)
//   density-calls    split_solve leaf-call growth across edge density
//   qubit-scaling    size_limit_for_qubits across qubit doublings
//   cm-quality       independent sets on contraction minors; alpha protocol
//   chain-histogram  broken-chain rates across chain strengths
//   ec-partition     balanced bisection solvers vs exhaustive ground truth
//   ch-partition     core-halo refinement vs enumerated optimum
//
// Identical config + seeds reproduce the CSV byte for byte except for the
// trailing elapsed_ms column. Rows are emitted in key order regardless of
// completion order.
ExperimentResult run_experiment(const ExperimentConfig& config);

const std::vector<std::string>& experiment_names();

}  // namespace qopt
