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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/model.hpp"
#include "qopt/partition.hpp"

namespace qopt {

// Maximum independent set as a QUBO:
//
//   H = L * sum_v x_v + M * sum_{(u,v) in E} x_u x_v
//
// with L < 0 and M > -L, so deleting a vertex from a violating pair always
// pays. At the optimum, energy = L * (size of a maximum independent set).
// Maximum clique reduces to this on the complement graph.
QuboModel build_mis_qubo(const Graph& g, double linear_weight = -1.0,
                         double penalty = 2.0);

// Fixed-size clique Hamiltonian:
//
//   H = A (k - sum_v x_v)^2 + B [k(k-1)/2 - sum_{(u,v) in E} x_u x_v]
//
// Zero energy iff the selected vertices form a k-clique. The two-argument
// overload picks B = 1, A = k + 1 so breaking the size constraint never
// beats losing an edge.
QuboModel build_clique_kfixed_qubo(const Graph& g, int k, double a, double b);
QuboModel build_clique_kfixed_qubo(const Graph& g, int k);

// Balanced bisection as an Ising model over one spin per vertex:
//
//   H = A (sum_v s_v)^2 + B * sum_{(u,v) in E} (1 - s_u s_v) / 2
//
// with B = 1 and A = max_degree/4 + 1, which makes any unbalancing move cost
// more than the best possible cut improvement. At a balanced minimizer the
// energy equals the edge cut. Requires n >= 2.
IsingModel build_bisection_ising(const Graph& g);

// Variable layout for the k-way model: one indicator per (vertex, part).
class KwayVarIndex {
 public:
    KwayVarIndex() = default;
    KwayVarIndex(int num_vertices, int k);

    int num_variables() const noexcept { return n_ * k_; }
    int num_vertices() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    int index(int v, int part) const;
    std::pair<int, int> vertex_part(int index) const;

 private:
    int n_ = 0;
    int k_ = 0;
};

// Balanced k-way partition QUBO over indicators s_{v,i}:
//
//   H = A sum_v (sum_i s_vi - 1)^2            one part per vertex
//     + B sum_i (sum_v s_vi - n/k)^2          balance
//     + C sum_{(u,v) in E} sum_i (1 - s_ui s_vi)
//
// with C = 1 and A = B = n/2 + 1. At a feasible balanced assignment,
// H = (k-1)|E| + edge_cut. Requires k >= 2.
std::pair<QuboModel, KwayVarIndex> build_kway_qubo(const Graph& g, int k);

// Variable layout for the core-halo model: per part, a core indicator and a
// halo indicator per vertex plus one slack per ordered pair (v, w) with
// w in N(v) or w = v. Total k(3n + 2|E|).
class ChVarIndex {
 public:
    ChVarIndex() = default;
    ChVarIndex(const Graph& g, int k);

    int num_variables() const noexcept;
    int num_vertices() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    int core_index(int v, int part) const;
    int halo_index(int v, int part) const;
    // w must be v itself or a neighbor of v.
    int slack_index(int v, int w, int part) const;

    // All ordered pairs (v, w in N(v) u {v}), in slack storage order.
    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }

 private:
    int n_ = 0;
    int k_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_base_;  // first pair slot of each vertex
};

// Core-halo partition QUBO. c_vi places vertex v's core in part i, h_vi
// marks v as stored by part i (core or halo), and the slacks z absorb the
// allowed case h=1, c=0:
//
//   H = A sum_v (sum_i c_vi - 1)^2
//     + B sum_v sum_i sum_{w in N(v) u {v}} (h_vi - c_wi - z_vwi)^2
//     + C sum_i (sum_v h_vi)^2
//
// with C = 1, A = n^2 + 1, B = 2n + 1. At a feasible minimizer the energy
// equals ch_cost(g, cores).total. Requires k >= 1.
std::pair<QuboModel, ChVarIndex> build_ch_qubo(const Graph& g, int k);

struct MisDecode {
    std::vector<int> vertices;
    bool feasible = false;  // true iff the set is independent
};

MisDecode decode_mis(const Graph& g, const Assignment& x);

struct KwayDecode {
    bool feasible = false;
    Partition partition;            // valid only when feasible
    std::vector<int> bad_vertices;  // rows with zero or multiple indicators
};

KwayDecode decode_kway(const KwayVarIndex& index, const Assignment& x);

struct ChDecode {
    bool feasible = false;
    Partition cores;                      // valid only when feasible
    std::vector<std::vector<int>> halos;  // per part: vertices with h = 1
    std::string diagnostic;               // first violation, empty if feasible
};

ChDecode decode_ch(const ChVarIndex& index, const Graph& g, const Assignment& x);

// Feasible encodings (the identities H = (k-1)|E| + cut and H = ch_cost hold
// at these): one-hot rows for the partition; for core-halo, h and z derived
// from the cores as the unique zero-penalty completion.
Assignment encode_kway(const KwayVarIndex& index, const Partition& p);
Assignment encode_ch(const ChVarIndex& index, const Graph& g, const Partition& cores);

}  // namespace qopt
