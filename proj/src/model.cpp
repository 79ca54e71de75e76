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

#include "qopt/model.hpp"

#include <stdexcept>
#include <string>

namespace qopt {

namespace {

void check_values(const Assignment& a, Domain expected, int n, const char* what) {
    if (a.domain != expected)
        throw std::invalid_argument(std::string(what) + ": wrong assignment domain");
    if (a.size() != n)
        throw std::invalid_argument(std::string(what) + ": assignment length " +
                                    std::to_string(a.size()) + ", expected " + std::to_string(n));
    for (std::int8_t v : a.values) {
        const bool ok = expected == Domain::binary ? (v == 0 || v == 1) : (v == -1 || v == 1);
        if (!ok) throw std::invalid_argument(std::string(what) + ": value outside domain");
    }
}

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n)
        throw std::out_of_range(std::string(what) + ": variable " + std::to_string(i) +
                                " out of range");
}

std::pair<int, int> normalized_key(int i, int j, int n, const char* what) {
    check_index(i, n, what);
    check_index(j, n, what);
    if (i == j) throw std::invalid_argument(std::string(what) + ": diagonal pair");
    return {std::min(i, j), std::max(i, j)};
}

bool same_terms(const std::map<std::pair<int, int>, double>& a,
                const std::map<std::pair<int, int>, double>& b) {
    auto nonzero = [](const std::map<std::pair<int, int>, double>& m) {
        std::map<std::pair<int, int>, double> out;
        for (const auto& [k, w] : m)
            if (w != 0.0) out.emplace(k, w);
        return out;
    };
    return nonzero(a) == nonzero(b);
}

}  // namespace

Assignment binary_assignment(std::vector<std::int8_t> values) {
    for (auto v : values)
        if (v != 0 && v != 1)
            throw std::invalid_argument("binary_assignment: entries must be 0 or 1");
    return Assignment{Domain::binary, std::move(values)};
}

Assignment spin_assignment(std::vector<std::int8_t> values) {
    for (auto v : values)
        if (v != -1 && v != 1)
            throw std::invalid_argument("spin_assignment: entries must be -1 or +1");
    return Assignment{Domain::spin, std::move(values)};
}

Assignment to_binary(const Assignment& a) {
    if (a.domain == Domain::binary) return a;
    Assignment out{Domain::binary, a.values};
    for (auto& v : out.values) v = static_cast<std::int8_t>((v + 1) / 2);
    return out;
}

Assignment to_spin(const Assignment& a) {
    if (a.domain == Domain::spin) return a;
    Assignment out{Domain::spin, a.values};
    for (auto& v : out.values) v = static_cast<std::int8_t>(2 * v - 1);
    return out;
}

QuboModel::QuboModel(int num_variables, double offset) : offset_(offset) {
    if (num_variables < 0) throw std::invalid_argument("QuboModel: negative size");
    linear_.assign(static_cast<std::size_t>(num_variables), 0.0);
}

void QuboModel::add_linear(int i, double w) {
    check_index(i, num_variables(), "QuboModel");
    linear_[static_cast<std::size_t>(i)] += w;
}

double QuboModel::linear(int i) const {
    check_index(i, num_variables(), "QuboModel");
    return linear_[static_cast<std::size_t>(i)];
}

void QuboModel::add_quadratic(int i, int j, double w) {
    quadratic_[normalized_key(i, j, num_variables(), "QuboModel")] += w;
}

double QuboModel::quadratic(int i, int j) const {
    const auto it = quadratic_.find(normalized_key(i, j, num_variables(), "QuboModel"));
    return it == quadratic_.end() ? 0.0 : it->second;
}

bool operator==(const QuboModel& a, const QuboModel& b) {
    return a.num_variables() == b.num_variables() && a.offset_ == b.offset_ &&
           a.linear_ == b.linear_ && same_terms(a.quadratic_, b.quadratic_);
}

IsingModel::IsingModel(int num_variables, double offset) : offset_(offset) {
    if (num_variables < 0) throw std::invalid_argument("IsingModel: negative size");
    h_.assign(static_cast<std::size_t>(num_variables), 0.0);
}

void IsingModel::add_field(int i, double w) {
    check_index(i, num_variables(), "IsingModel");
    h_[static_cast<std::size_t>(i)] += w;
}

double IsingModel::field(int i) const {
    check_index(i, num_variables(), "IsingModel");
    return h_[static_cast<std::size_t>(i)];
}

void IsingModel::add_coupler(int i, int j, double w) {
    couplers_[normalized_key(i, j, num_variables(), "IsingModel")] += w;
}

double IsingModel::coupler(int i, int j) const {
    const auto it = couplers_.find(normalized_key(i, j, num_variables(), "IsingModel"));
    return it == couplers_.end() ? 0.0 : it->second;
}

bool operator==(const IsingModel& a, const IsingModel& b) {
    return a.num_variables() == b.num_variables() && a.offset_ == b.offset_ &&
           a.h_ == b.h_ && same_terms(a.couplers_, b.couplers_);
}

double qubo_energy(const QuboModel& q, const Assignment& x) {
    check_values(x, Domain::binary, q.num_variables(), "qubo_energy");
    double e = q.offset();
    const auto& lin = q.linear_terms();
    for (int i = 0; i < q.num_variables(); ++i)
        if (x.values[static_cast<std::size_t>(i)]) e += lin[static_cast<std::size_t>(i)];
    for (const auto& [key, w] : q.quadratic_terms())
        if (x.values[static_cast<std::size_t>(key.first)] &&
            x.values[static_cast<std::size_t>(key.second)])
            e += w;
    return e;
}

double ising_energy(const IsingModel& m, const Assignment& s) {
    check_values(s, Domain::spin, m.num_variables(), "ising_energy");
    double e = m.offset();
    const auto& h = m.fields();
    for (int i = 0; i < m.num_variables(); ++i)
        e += h[static_cast<std::size_t>(i)] * s.values[static_cast<std::size_t>(i)];
    for (const auto& [key, w] : m.couplers())
        e += w * s.values[static_cast<std::size_t>(key.first)] *
             s.values[static_cast<std::size_t>(key.second)];
    return e;
}

IsingModel qubo_to_ising(const QuboModel& q) {
    const int n = q.num_variables();
    IsingModel m(n, q.offset());
    double constant = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = q.linear(i);
        m.add_field(i, d / 2.0);
        constant += d / 2.0;
    }
    for (const auto& [key, w] : q.quadratic_terms()) {
        m.add_coupler(key.first, key.second, w / 4.0);
        m.add_field(key.first, w / 4.0);
        m.add_field(key.second, w / 4.0);
        constant += w / 4.0;
    }
    m.add_offset(constant);
    return m;
}

QuboModel ising_to_qubo(const IsingModel& m) {
    const int n = m.num_variables();
    QuboModel q(n, m.offset());
    double constant = 0.0;
    for (int i = 0; i < n; ++i) {
        const double h = m.field(i);
        q.add_linear(i, 2.0 * h);
        constant -= h;
    }
    for (const auto& [key, w] : m.couplers()) {
        q.add_quadratic(key.first, key.second, 4.0 * w);
        q.add_linear(key.first, -2.0 * w);
        q.add_linear(key.second, -2.0 * w);
        constant += w;
    }
    q.add_offset(constant);
    return q;
}

}  // namespace qopt
