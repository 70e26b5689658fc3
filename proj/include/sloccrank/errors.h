// Copyright 2026 The sloccrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SLOCCRANK_ERRORS_H
#define SLOCCRANK_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sloccrank {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed scalar / permutation / state text. `position` is a 0-based
/// offset into the offending input.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)), position(position) {}
    size_t position;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A state or operator file that violates its JSON schema.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sloccrank

#endif
