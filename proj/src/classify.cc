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

#include "sloccrank/classify.h"

#include <bit>
#include <stdexcept>

#include "sloccrank/coeff_matrix.h"
#include "sloccrank/rank.h"

namespace sloccrank {

std::string FamilySignature::str() const {
    std::string out;
    for (int r : ranks) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(r);
    }
    return out;
}

FamilySignature rank_signature(const PureState &state, const std::vector<QubitPermutation> &sigmas) {
    FamilySignature sig{sigmas, {}};
    for (const QubitPermutation &sigma : sigmas) {
        sigma.check_canonical(state.num_qubits());
        sig.ranks.push_back(exact_rank(coefficient_matrix(state, sigma)).rank);
    }
    return sig;
}

int family_of(const PureState &state) { return exact_rank(coefficient_matrix(state)).rank; }

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

bool DickeScanRow::matches_theory(int n) const {
    if (rank != ell + 1 || distinct_nonzero_rows != ell + 1 || mirror_rank != rank || !rows_grouped_by_weight) {
        return false;
    }
    if (static_cast<int>(row_multiplicities.size()) != ell + 1) {
        return false;
    }
    for (int j = 0; j <= ell; ++j) {
        if (row_multiplicities[j] != binomial(n / 2, j)) {
            return false;
        }
    }
    return true;
}

std::vector<DickeScanRow> dicke_rank_scan(int n) {
    if (n < 2) {
        throw std::invalid_argument("Dicke scan needs n >= 2");
    }
    std::vector<DickeScanRow> rows;
    for (int ell = 1; ell <= n / 2; ++ell) {
        const CoeffMatrix m = coefficient_matrix(dicke_state(n, ell));
        DickeScanRow row;
        row.ell = ell;
        row.rank = exact_rank(m).rank;
        row.mirror_rank = family_of(dicke_state(n, n - ell));

        // Group identical nonzero rows, keyed by first occurrence.
        struct Group {
            size_t first;
            int count;
            bool same_weight;
        };
        std::vector<Group> groups;
        for (size_t r = 0; r < m.rows(); ++r) {
            bool zero = true;
            for (size_t c = 0; c < m.cols() && zero; ++c) {
                zero = m.entries(r, c).is_zero();
            }
            if (zero) {
                continue;
            }
            bool found = false;
            for (Group &g : groups) {
                bool same = true;
                for (size_t c = 0; c < m.cols() && same; ++c) {
                    same = m.entries(r, c) == m.entries(g.first, c);
                }
                if (same) {
                    ++g.count;
                    g.same_weight = g.same_weight && std::popcount(r) == std::popcount(g.first);
                    found = true;
                    break;
                }
            }
            if (!found) {
                groups.push_back({r, 1, true});
            }
        }
        row.distinct_nonzero_rows = static_cast<int>(groups.size());
        row.rows_grouped_by_weight = true;
        for (size_t j = 0; j < groups.size(); ++j) {
            row.row_multiplicities.push_back(groups[j].count);
            if (!groups[j].same_weight || std::popcount(groups[j].first) != static_cast<int>(j)) {
                row.rows_grouped_by_weight = false;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sloccrank
