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
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qopt/model.hpp"

namespace qopt {

// Temperature schedule for the annealers. Temperatures are positive and
// non-increasing in t.
struct AnnealSchedule {
    enum class Kind { logarithmic, geometric };

    Kind kind = Kind::logarithmic;
    std::uint64_t steps = 0;
    double t0 = 1.0;
    double alpha = 0.999;  // geometric only

    // T(t) = t0 / ln(2 + t)
    static AnnealSchedule logarithmic(std::uint64_t steps, double t0);
    // T(t) = t0 * alpha^t, 0 < alpha < 1
    static AnnealSchedule geometric(std::uint64_t steps, double t0, double alpha);

    double temperature(std::uint64_t t) const;
};

struct SampleRecord {
    Assignment assignment;
    double energy = 0.0;
    bool feasible = true;
    int broken_chains = 0;  // filled by unembedding
};

struct SolverStats {
    std::uint64_t steps = 0;
    std::uint64_t calls = 0;        // subsolver invocations (decomposition)
    std::uint64_t ties = 0;         // optima count (exhaustive search)
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;   // wall clock; excluded from determinism
    std::string stop_reason;
};

// Records accumulate in push order (annealers append improvements, so the
// energy sequence of records is the non-increasing best-so-far trace).
class SampleSet {
 public:
    void push(SampleRecord record);

    bool empty() const noexcept { return records_.empty(); }
    std::size_t size() const noexcept { return records_.size(); }
    const std::vector<SampleRecord>& records() const noexcept { return records_; }

    // Lowest recorded energy; first among ties. Throws when empty.
    const SampleRecord& best() const;
    std::size_t best_index() const;

    SolverStats& stats() noexcept { return stats_; }
    const SolverStats& stats() const noexcept { return stats_; }

 private:
    std::vector<SampleRecord> records_;
    std::size_t best_ = 0;
    SolverStats stats_;
};

// Exhaustive enumeration, n <= 30. Gray-code incremental evaluation; the
// reported optimum is the tied assignment whose bit pattern (variable i at
// bit i) has the smallest integer value, and stats.ties counts all optima.
SampleSet brute_force(const QuboModel& q);
SampleSet brute_force(const IsingModel& m);

// Every optimal assignment, in increasing bit-pattern order. Throws if the
// count exceeds limit.
std::vector<Assignment> brute_force_optima(const QuboModel& q,
                                           std::size_t limit = 1u << 20);
std::vector<Assignment> brute_force_optima(const IsingModel& m,
                                           std::size_t limit = 1u << 20);

// Pairwise-exchange annealer for models whose feasible space is balanced
// spin vectors (equal +1/-1 counts, n even). Starts from a balanced random
// state; each step picks one +1 and one -1 spin, flips both (preserving
// balance), and accepts with min(1, exp(-delta/T(t))), T(t) = t0/ln(2+t)
// with t0 = max |weight|. Returns the best state seen.
SampleSet anneal_swap_ising(const IsingModel& m, std::uint64_t t_max,
                            std::uint64_t seed);

// Single-flip Metropolis annealer. Random initial assignment; best seen
// state returned; improvements are appended as records.
SampleSet anneal_flip(const QuboModel& q, const AnnealSchedule& schedule,
                      std::uint64_t seed);
SampleSet anneal_flip(const IsingModel& m, const AnnealSchedule& schedule,
                      std::uint64_t seed);

// Greedy best-improvement single-flip descent to a local minimum. Running
// it on its own output is a no-op.
Assignment local_search(const QuboModel& q, const Assignment& start);
Assignment local_search(const IsingModel& m, const Assignment& start);

struct TabuDecomposeOptions {
    int subproblem_size = 20;
    int attempts = 50;
    std::optional<double> target;           // stop at energy <= target
    std::optional<double> timeout_seconds;  // wall-clock stop
    std::uint64_t seed = 0;
    // Solves a clamped subproblem. Defaults to brute_force for
    // subproblem_size <= 30 and anneal_flip otherwise.
    std::function<SampleSet(const QuboModel&, std::uint64_t)> subsolver;
    int tabu_capacity = 8;
};

// Decomposing tabu search: repeatedly clamps all but the subproblem_size
// highest-|single-flip-delta| variables, solves the induced subproblem, and
// re-descends. A FIFO memory of recently selected variable sets steers
// successive subproblems apart. Models with n <= subproblem_size are handed
// to the subsolver whole. stats.calls counts subsolver invocations,
// stats.stop_reason is one of "target", "attempts", "timeout", "direct".
SampleSet tabu_decompose(const QuboModel& q, const TabuDecomposeOptions& options);

}  // namespace qopt
