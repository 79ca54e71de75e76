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
#include <map>
#include <utility>
#include <vector>

namespace qopt {

enum class Domain { binary, spin };

// A full variable assignment. values[i] is 0/1 in the binary domain and
// -1/+1 in the spin domain.
struct Assignment {
    Domain domain = Domain::binary;
    std::vector<std::int8_t> values;

    int size() const noexcept { return static_cast<int>(values.size()); }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

Assignment binary_assignment(std::vector<std::int8_t> values);
Assignment spin_assignment(std::vector<std::int8_t> values);

// x = (s + 1) / 2 and s = 2x - 1.
Assignment to_binary(const Assignment& a);
Assignment to_spin(const Assignment& a);

// E(x) = sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j + offset, x binary.
//
// Quadratic keys are normalized to i < j on insertion and repeated insertion
// accumulates, so the energy never depends on how callers ordered or split
// their terms. The constant offset is carried explicitly: conversions and
// embeddings shift it so that energies, not just argmins, are preserved.
class QuboModel {
 public:
    QuboModel() = default;
    explicit QuboModel(int num_variables, double offset = 0.0);

    int num_variables() const noexcept { return static_cast<int>(linear_.size()); }

    void add_linear(int i, double w);
    double linear(int i) const;
    const std::vector<double>& linear_terms() const noexcept { return linear_; }

    void add_quadratic(int i, int j, double w);
    double quadratic(int i, int j) const;
    const std::map<std::pair<int, int>, double>& quadratic_terms() const noexcept {
        return quadratic_;
    }

    double offset() const noexcept { return offset_; }
    void add_offset(double w) noexcept { offset_ += w; }

    // Value comparison; explicitly stored zeros count as absent.
    friend bool operator==(const QuboModel& a, const QuboModel& b);

 private:
    std::vector<double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    double offset_ = 0.0;
};

// E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + offset, s in {-1,+1}.
class IsingModel {
 public:
    IsingModel() = default;
    explicit IsingModel(int num_variables, double offset = 0.0);

    int num_variables() const noexcept { return static_cast<int>(h_.size()); }

    void add_field(int i, double w);
    double field(int i) const;
    const std::vector<double>& fields() const noexcept { return h_; }

    void add_coupler(int i, int j, double w);
    double coupler(int i, int j) const;
    const std::map<std::pair<int, int>, double>& couplers() const noexcept {
        return couplers_;
    }

    double offset() const noexcept { return offset_; }
    void add_offset(double w) noexcept { offset_ += w; }

    friend bool operator==(const IsingModel& a, const IsingModel& b);

 private:
    std::vector<double> h_;
    std::map<std::pair<int, int>, double> couplers_;
    double offset_ = 0.0;
};

double qubo_energy(const QuboModel& q, const Assignment& x);
double ising_energy(const IsingModel& m, const Assignment& s);

// Exact change of variables x = (s+1)/2. For every assignment the energies
// agree: qubo_energy(q, x) == ising_energy(qubo_to_ising(q), 2x-1).
//
//   h_i = Q_ii/2 + sum_j Q_ij/4      (sum over all couplers incident to i)
//   J_ij = Q_ij/4
//   offset += sum_i Q_ii/2 + sum_{i<j} Q_ij/4
IsingModel qubo_to_ising(const QuboModel& q);

// Inverse map:
//   Q_ii = 2(h_i - sum_j J_ij)
//   Q_ij = 4 J_ij
//   offset += -sum_i h_i + sum_{i<j} J_ij
QuboModel ising_to_qubo(const IsingModel& m);

}  // namespace qopt
