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

#include "qopt/qubo_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qopt {

namespace {

// %.17g survives a text round trip for every finite double.
std::string fmt(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

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

void write_qubo_file(const QuboModel& q, std::ostream& out) {
    const std::vector<double>& lin = q.linear_terms();
    std::vector<int> diag;
    for (int i = 0; i < q.num_variables(); ++i)
        if (lin[static_cast<std::size_t>(i)] != 0.0) diag.push_back(i);
    int couplers = 0;
    for (const auto& [key, w] : q.quadratic_terms())
        if (w != 0.0) ++couplers;

    out << "p qubo 0 " << q.num_variables() << ' ' << diag.size() << ' '
        << couplers << '\n';
    for (int i : diag)
        out << i << ' ' << i << ' ' << fmt(lin[static_cast<std::size_t>(i)]) << '\n';
    for (const auto& [key, w] : q.quadratic_terms())
        if (w != 0.0) out << key.first << ' ' << key.second << ' ' << fmt(w) << '\n';
    out << "c offset " << fmt(q.offset()) << '\n';
}

QuboModel read_qubo_file(std::istream& in) {
    int line_no = 0;
    std::string line;
    bool have_header = false;
    long long max_nodes = 0, want_nodes = 0, want_couplers = 0;
    long long seen_nodes = 0, seen_couplers = 0;
    double offset = 0.0;
    QuboModel q;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") {
            std::string word;
            if (ss >> word && word == "offset") {
                double w = 0.0;
                if (!(ss >> w))
                    throw ParseError("qubo: malformed offset comment", line_no);
                offset = w;
            }
            continue;
        }
        if (tag == "p") {
            if (have_header) throw ParseError("qubo: duplicate header", line_no);
            std::string kind;
            long long problem = 0;
            if (!(ss >> kind >> problem >> max_nodes >> want_nodes >> want_couplers) ||
                kind != "qubo" || max_nodes < 0 || want_nodes < 0 || want_couplers < 0)
                throw ParseError(
                    "qubo: malformed header, expected 'p qubo 0 maxNodes nNodes nCouplers'",
                    line_no);
            q = QuboModel(static_cast<int>(max_nodes));
            have_header = true;
            continue;
        }
        std::istringstream entry(line);
        long long i = 0, j = 0;
        double w = 0.0;
        if (!(entry >> i >> j >> w))
            throw ParseError("qubo: malformed entry, expected 'i j w'", line_no);
        if (!have_header) throw ParseError("qubo: entry before header", line_no);
        if (i < 0 || i >= max_nodes || j < 0 || j >= max_nodes)
            throw ParseError("qubo: index outside maxNodes", line_no);
        if (i == j) {
            q.add_linear(static_cast<int>(i), w);
            ++seen_nodes;
        } else if (i < j) {
            q.add_quadratic(static_cast<int>(i), static_cast<int>(j), w);
            ++seen_couplers;
        } else {
            throw ParseError("qubo: coupler must satisfy i < j", line_no);
        }
    }
    if (!have_header) throw ParseError("qubo: missing header", std::max(line_no, 1));
    if (seen_nodes != want_nodes)
        throw ParseError("qubo: diagonal count does not match header", std::max(line_no, 1));
    if (seen_couplers != want_couplers)
        throw ParseError("qubo: coupler count does not match header", std::max(line_no, 1));
    q.add_offset(offset);
    return q;
}

void save_qubo_file(const QuboModel& q, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_qubo_file(q, out);
}

QuboModel load_qubo_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_qubo_file(in);
}

}  // namespace qopt
