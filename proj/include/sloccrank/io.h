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

#ifndef SLOCCRANK_IO_H
#define SLOCCRANK_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "sloccrank/slocc.h"
#include "sloccrank/state.h"

namespace sloccrank {

// State files look like
//   {"n": 4, "amplitudes": [{"index": 0, "value": "1"}, {"index": 15, "value": "-1"}]}
// with indices strictly increasing, below 2^n, and no zero values.
// Operator files look like
//   {"ops": [[["1","0"],["0","1"]], ...]}
// one row-major 2x2 matrix per qubit.
// All readers throw FormatError (or ParseError for bad scalar text).

PureState state_from_json(std::string_view text);
std::string state_to_json(const PureState &state);
PureState load_state(const std::filesystem::path &path);
void save_state(const PureState &state, const std::filesystem::path &path);

OperatorList operators_from_json(std::string_view text);
std::string operators_to_json(const OperatorList &ops);

}  // namespace sloccrank

#endif
