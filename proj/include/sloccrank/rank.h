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

#ifndef SLOCCRANK_RANK_H
#define SLOCCRANK_RANK_H

#include <optional>
#include <vector>

#include "sloccrank/coeff_matrix.h"
#include "sloccrank/matrix.h"

namespace sloccrank {

struct RankResult {
    int rank = 0;
    std::vector<size_t> pivot_columns;
};

/// Exact rank over Q(i, sqrt2) by Gaussian elimination, taking the first
/// nonzero entry of each column as pivot.
RankResult exact_rank(const ScalarMatrix &m);
inline RankResult exact_rank(const CoeffMatrix &m) { return exact_rank(m.entries); }

/// Singular values of the double-precision image of m, descending.
/// Throws NumericFailure if the SVD does not converge.
std::vector<double> singular_values(const ScalarMatrix &m);

/// max(rows, cols) * eps * sigma_1, or 0 for a zero matrix.
double default_rank_tolerance(const ScalarMatrix &m, const std::vector<double> &singular_values);

/// Number of singular values strictly above `tol` (default_rank_tolerance
/// when unset). Independent of exact_rank; used to cross-check it.
int numeric_rank(const ScalarMatrix &m, std::optional<double> tol = std::nullopt);
inline int numeric_rank(const CoeffMatrix &m, std::optional<double> tol = std::nullopt) {
    return numeric_rank(m.entries, tol);
}

/// Determinant by fraction-free (Bareiss) elimination. Throws ShapeError
/// for non-square input.
Scalar exact_det(const ScalarMatrix &m);
inline Scalar exact_det(const CoeffMatrix &m) { return exact_det(m.entries); }

}  // namespace sloccrank

#endif
