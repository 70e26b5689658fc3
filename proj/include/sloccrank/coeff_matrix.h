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

#ifndef SLOCCRANK_COEFF_MATRIX_H
#define SLOCCRANK_COEFF_MATRIX_H

#include <vector>

#include "sloccrank/matrix.h"
#include "sloccrank/permutation.h"
#include "sloccrank/state.h"

namespace sloccrank {

/// Which qubits index the rows and which index the columns, most significant first.
struct BitSplit {
    std::vector<int> row_bits;
    std::vector<int> col_bits;
    friend bool operator==(const BitSplit &, const BitSplit &) = default;
};

/// The 2^floor(n/2) x 2^ceil(n/2) matrix holding a state's amplitudes, with
/// the amplitude of |i_1 ... i_n> at row (i_1 ... i_floor(n/2))_2 and column
/// (i_floor(n/2)+1 ... i_n)_2 of the permuted state.
struct CoeffMatrix {
    ScalarMatrix entries;
    BitSplit split;

    size_t rows() const { return entries.rows(); }
    size_t cols() const { return entries.cols(); }
};

/// Coefficient matrix of permute_state(state, sigma). Throws
/// std::invalid_argument when sigma mentions a qubit outside [1, n].
CoeffMatrix coefficient_matrix(const PureState &state, const QubitPermutation &sigma = {});
/// The zero matrix of the right shape for n qubits.
CoeffMatrix coefficient_matrix(const ZeroState &state, const QubitPermutation &sigma = {});
CoeffMatrix coefficient_matrix(const StateImage &state, const QubitPermutation &sigma = {});

}  // namespace sloccrank

#endif
