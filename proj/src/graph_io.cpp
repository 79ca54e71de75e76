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

#include "qopt/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qopt {

namespace {

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

Graph read_edge_list(std::istream& in) {
    int line_no = 0;
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank line
        if (n < 0) {
            std::istringstream header(line);
            if (!(header >> n >> m) || n < 0 || m < 0)
                throw ParseError("edge list: malformed header, expected 'n m'", line_no);
            continue;
        }
        std::istringstream entry(line);
        int u = 0, v = 0;
        if (!(entry >> u >> v))
            throw ParseError("edge list: malformed edge, expected 'u v'", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: endpoint out of range", line_no);
        if (u == v) throw ParseError("edge list: self loop", line_no);
        edges.emplace_back(u, v);
        if (static_cast<long long>(edges.size()) > m)
            throw ParseError("edge list: more edges than declared", line_no);
    }
    if (n < 0) throw ParseError("edge list: empty input", std::max(line_no, 1));
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge list: fewer edges than declared", std::max(line_no, 1));
    return Graph(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_dimacs(std::istream& in) {
    int line_no = 0;
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ss >> kind >> n >> m) || n < 0 || m < 0)
                throw ParseError("dimacs: malformed problem line, expected 'p edge n m'", line_no);
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError("dimacs: edge before problem line", line_no);
            int u = 0, v = 0;
            if (!(ss >> u >> v)) throw ParseError("dimacs: malformed edge line", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs: endpoint out of range", line_no);
            if (u == v) throw ParseError("dimacs: self loop", line_no);
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError("dimacs: unknown line tag '" + tag + "'", line_no);
    }
    if (n < 0) throw ParseError("dimacs: missing problem line", std::max(line_no, 1));
    // Some published instances list both orientations; the Graph constructor
    // collapses duplicates, so only the count check needs the slack.
    Graph g(n, edges);
    if (static_cast<long long>(edges.size()) != m && g.num_edges() != m)
        throw ParseError("dimacs: edge count does not match header", std::max(line_no, 1));
    return g;
}

Graph load_edge_list(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_edge_list(g, out);
}

Graph load_dimacs(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_dimacs(in);
}

Graph load_graph(const std::filesystem::path& path) {
    if (path.extension() == ".col") return load_dimacs(path);
    return load_edge_list(path);
}

}  // namespace qopt
