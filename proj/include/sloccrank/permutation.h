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

#ifndef SLOCCRANK_PERMUTATION_H
#define SLOCCRANK_PERMUTATION_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sloccrank/state.h"

namespace sloccrank {

/// A product of transpositions (q, t) of qubit labels (1-based). The
/// permutations used for coefficient matrices are disjoint row-bit/column-bit
/// swaps with 1 <= q_1 < ... < q_k <= floor(n/2) < t_1 < ... < t_k <= n;
/// `check_canonical` enforces that form. The empty product is the identity.
class QubitPermutation {
   public:
    using Transposition = std::pair<int, int>;

    QubitPermutation() = default;
    explicit QubitPermutation(std::vector<Transposition> transpositions)
        : transpositions_(std::move(transpositions)) {}

    static QubitPermutation identity() { return {}; }

    const std::vector<Transposition> &transpositions() const { return transpositions_; }
    size_t size() const { return transpositions_.size(); }
    bool is_identity() const { return transpositions_.empty(); }

    /// slot_image(n)[j - 1] is the qubit that occupies slot j after the
    /// permutation, i.e. sigma(j). Transpositions compose left to right.
    /// Throws std::invalid_argument when a label is outside [1, n].
    std::vector<int> slot_image(int n) const;

    /// Throws std::invalid_argument unless this is a canonical row/column
    /// swap set for n qubits.
    void check_canonical(int n) const;
    bool is_canonical(int n) const;

    /// "q:t,q:t,..." ("" for the identity).
    std::string str() const;

    friend bool operator==(const QubitPermutation &, const QubitPermutation &) = default;
    friend auto operator<=>(const QubitPermutation &x, const QubitPermutation &y) {
        if (x.size() != y.size()) {
            return x.size() <=> y.size();
        }
        return x.transpositions_ <=> y.transpositions_;
    }

   private:
    std::vector<Transposition> transpositions_;
};

/// Parses "q:t,q:t". Whitespace is ignored; "" is the identity. Throws ParseError.
QubitPermutation parse_permutation(std::string_view text);

/// All inequivalent row-bit choices for n qubits expressed as canonical
/// transposition sets, ordered by k then lexicographically, identity first.
/// The count is C(n, floor(n/2)) for odd n and C(n, n/2)/2 for even n.
/// Built from row-bit subsets; for even n a subset and its complement give
/// transposed matrices, and the representative kept is the one whose row
/// bits include qubit n/2.
std::vector<QubitPermutation> enumerate_sigmas(int n);

/// Same set built directly from transposition lists with
/// q_k < floor((n+1)/2) and k <= floor((n-1)/2). Kept as a cross-check.
std::vector<QubitPermutation> enumerate_sigmas_direct(int n);

/// Row-bit labels (ascending) selected by sigma, i.e. {sigma(1), ..., sigma(floor(n/2))}.
std::vector<int> row_bit_set(const QubitPermutation &sigma, int n);

/// Relabels qubits: the amplitude of the result at bit string
/// (i_1 ... i_n) is the input amplitude with qubit slot_image[j-1] set to i_j.
/// `slot_image` must be a permutation of 1..n.
PureState permute_qubits(const PureState &state, const std::vector<int> &slot_image);
PureState permute_state(const PureState &state, const QubitPermutation &sigma);

}  // namespace sloccrank

#endif
