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

#include <filesystem>
#include <iosfwd>

#include "qopt/model.hpp"
#include "qopt/parse_error.hpp"

namespace qopt {

// QUBO file format:
//
//   c <comment>
//   p qubo 0 <maxNodes> <nNodes> <nCouplers>
//   <i> <i> <w>     nNodes diagonal lines
//   <i> <j> <w>     nCouplers coupler lines, i < j
//   c offset <w>
//
// Nonzero linear terms are written as diagonal lines; the constant term
// rides in the trailing offset comment, so the round trip is lossless.
// Readers reject couplers with i >= j, indices outside maxNodes, malformed
// headers, and entry-count mismatches, reporting 1-based line numbers.
void write_qubo_file(const QuboModel& q, std::ostream& out);
void save_qubo_file(const QuboModel& q, const std::filesystem::path& path);
QuboModel read_qubo_file(std::istream& in);
QuboModel load_qubo_file(const std::filesystem::path& path);

}  // namespace qopt
