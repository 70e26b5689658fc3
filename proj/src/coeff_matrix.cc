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

#include "sloccrank/coeff_matrix.h"

namespace sloccrank {

namespace {

BitSplit split_for(const QubitPermutation &sigma, int n) {
    std::vector<int> image = sigma.slot_image(n);
    BitSplit split;
    split.row_bits.assign(image.begin(), image.begin() + n / 2);
    split.col_bits.assign(image.begin() + n / 2, image.end());
    return split;
}

}  // namespace

CoeffMatrix coefficient_matrix(const PureState &state, const QubitPermutation &sigma) {
    const int n = state.num_qubits();
    const int col_bits = (n + 1) / 2;
    CoeffMatrix m{ScalarMatrix(size_t{1} << (n / 2), size_t{1} << col_bits), split_for(sigma, n)};
    const uint64_t col_mask = (uint64_t{1} << col_bits) - 1;
    const PureState permuted = permute_state(state, sigma);
    for (const auto &[index, amp] : permuted.amplitudes()) {
        m.entries(index >> col_bits, index & col_mask) = amp;
    }
    return m;
}

CoeffMatrix coefficient_matrix(const ZeroState &state, const QubitPermutation &sigma) {
    check_qubit_count(state.n);
    return {ScalarMatrix(size_t{1} << (state.n / 2), size_t{1} << ((state.n + 1) / 2)), split_for(sigma, state.n)};
}

CoeffMatrix coefficient_matrix(const StateImage &state, const QubitPermutation &sigma) {
    return std::visit([&](const auto &s) { return coefficient_matrix(s, sigma); }, state);
}

}  // namespace sloccrank
