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

#ifndef SLOCCRANK_SLOCC_H
#define SLOCCRANK_SLOCC_H

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sloccrank/coeff_matrix.h"
#include "sloccrank/matrix.h"
#include "sloccrank/permutation.h"
#include "sloccrank/state.h"

namespace sloccrank {

/// A 2x2 operator on one qubit. Not required to be invertible.
class LocalOperator {
   public:
    LocalOperator() = default;
    LocalOperator(Scalar a00, Scalar a01, Scalar a10, Scalar a11)
        : m_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

    static LocalOperator identity() { return {1, 0, 0, 1}; }

    const Scalar &operator()(int r, int c) const { return m_[2 * r + c]; }
    Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    bool is_invertible() const { return !det().is_zero(); }

    friend bool operator==(const LocalOperator &, const LocalOperator &) = default;

   private:
    std::array<Scalar, 4> m_;
};

/// One operator per qubit, qubit 1 first.
using OperatorList = std::vector<LocalOperator>;

/// (A_1 x ... x A_n)|state>, computed one qubit at a time without forming
/// the 2^n x 2^n product. Returns ZeroState when every amplitude cancels.
/// Throws ShapeError if ops.size() != n.
StateImage apply_local(const PureState &state, const OperatorList &ops);

/// Kronecker product, first operator on the most significant index bit.
/// An empty list gives the 1x1 identity.
ScalarMatrix kron_chain(std::span<const LocalOperator> ops);

/// Checks M^s(A|psi>) == (A_s(1) x .. x A_s(h)) M^s(psi) (A_s(h+1) x .. x A_s(n))^T
/// exactly, h = floor(n/2), where s(j) is the qubit in slot j. The right-hand
/// side goes through explicit Kronecker products, not apply_local.
bool verify_matrix_equation(const PureState &state, const OperatorList &ops, const QubitPermutation &sigma = {});

/// For even n checks det M(A|psi>) == det M(psi) (det A_1 ... det A_n)^(2^((n-2)/2)).
/// Throws ShapeError for odd n.
bool verify_det_relation(const PureState &state, const OperatorList &ops);

/// Operators with Gaussian-integer entries, |re|, |im| <= pool, each
/// resampled until its determinant is nonzero. Deterministic in `seed`.
/// Throws std::invalid_argument if pool < 3.
OperatorList random_invertible_ops(int n, uint64_t seed, int pool);
OperatorList random_invertible_ops(int n, std::mt19937_64 &rng, int pool);

/// Unconstrained operators for singular-case checks: each is the zero
/// matrix with probability 1/12, a rank-one outer product with probability
/// 1/4, otherwise a generic Gaussian-integer matrix (possibly singular).
OperatorList random_local_ops(int n, std::mt19937_64 &rng, int pool);

}  // namespace sloccrank

#endif
