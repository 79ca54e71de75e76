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

#include <stdexcept>
#include <string>

namespace qopt {

// Raised by the file readers. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    int line() const noexcept { return line_; }

 private:
    int line_;
};

}  // namespace qopt
