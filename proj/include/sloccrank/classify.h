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

#ifndef SLOCCRANK_CLASSIFY_H
#define SLOCCRANK_CLASSIFY_H

#include <string>
#include <vector>

#include "sloccrank/permutation.h"
#include "sloccrank/state.h"

namespace sloccrank {

/// Ranks of a state's coefficient matrices under sigma_1, ..., sigma_m. The
/// state lies in the subfamily F^{sigma_1...sigma_m}_{r_1,...,r_m}.
struct FamilySignature {
    std::vector<QubitPermutation> sigmas;
    std::vector<int> ranks;

    /// "r1,r2,..."
    std::string str() const;
    friend bool operator==(const FamilySignature &, const FamilySignature &) = default;
};

/// Throws std::invalid_argument if any sigma is not canonical for the state's n.
FamilySignature rank_signature(const PureState &state, const std::vector<QubitPermutation> &sigmas);

/// Rank of the unpermuted coefficient matrix, i.e. r with state in F_{n,r}.
int family_of(const PureState &state);

struct DickeScanRow {
    int ell = 0;
    int rank = 0;
    int distinct_nonzero_rows = 0;
    /// Multiplicity of each distinct nonzero row, ordered by first occurrence
    /// (which is also the number j of row bits set).
    std::vector<int> row_multiplicities;
    /// True when every group of identical rows shares one row-bit weight j
    /// and groups appear in order j = 0, 1, ...
    bool rows_grouped_by_weight = false;
    /// rank of dicke_state(n, n - ell).
    int mirror_rank = 0;

    /// rank = distinct rows = ell + 1, multiplicities C(floor(n/2), j),
    /// grouping by weight, and mirror_rank = rank.
    bool matches_theory(int n) const;
};

/// One row per ell = 1..floor(n/2) for dicke_state(n, ell). n >= 2.
std::vector<DickeScanRow> dicke_rank_scan(int n);

}  // namespace sloccrank

#endif
