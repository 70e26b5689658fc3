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

#include "sloccrank/slocc.h"

#include "sloccrank/random.h"
#include "sloccrank/rank.h"

namespace sloccrank {

StateImage apply_local(const PureState &state, const OperatorList &ops) {
    const int n = state.num_qubits();
    if (static_cast<int>(ops.size()) != n) {
        throw ShapeError("expected " + std::to_string(n) + " local operators, got " + std::to_string(ops.size()));
    }
    std::vector<Scalar> amps(state.dimension());
    for (const auto &[index, amp] : state.amplitudes()) {
        amps[index] = amp;
    }
    for (int q = 1; q <= n; ++q) {
        const LocalOperator &op = ops[q - 1];
        if (op == LocalOperator::identity()) {
            continue;
        }
        const uint64_t bit = uint64_t{1} << (n - q);
        for (uint64_t i = 0; i < amps.size(); ++i) {
            if (i & bit) {
                continue;
            }
            const Scalar &v0 = amps[i];
            const Scalar &v1 = amps[i | bit];
            if (v0.is_zero() && v1.is_zero()) {
                continue;
            }
            Scalar w0 = op(0, 0) * v0 + op(0, 1) * v1;
            Scalar w1 = op(1, 0) * v0 + op(1, 1) * v1;
            amps[i] = std::move(w0);
            amps[i | bit] = std::move(w1);
        }
    }
    AmplitudeMap out;
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (!amps[i].is_zero()) {
            out.emplace(i, std::move(amps[i]));
        }
    }
    if (out.empty()) {
        return ZeroState{n};
    }
    return PureState(n, std::move(out));
}

ScalarMatrix kron_chain(std::span<const LocalOperator> ops) {
    ScalarMatrix acc = ScalarMatrix::identity(1);
    for (const LocalOperator &op : ops) {
        ScalarMatrix next(acc.rows() * 2, acc.cols() * 2);
        for (size_t r = 0; r < acc.rows(); ++r) {
            for (size_t c = 0; c < acc.cols(); ++c) {
                if (acc(r, c).is_zero()) {
                    continue;
                }
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        next(2 * r + i, 2 * c + j) = acc(r, c) * op(i, j);
                    }
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool verify_matrix_equation(const PureState &state, const OperatorList &ops, const QubitPermutation &sigma) {
    const int n = state.num_qubits();
    const CoeffMatrix lhs = coefficient_matrix(apply_local(state, ops), sigma);

    std::vector<int> image = sigma.slot_image(n);
    OperatorList slotted;
    for (int q : image) {
        slotted.push_back(ops.at(q - 1));
    }
    const std::span<const LocalOperator> all(slotted);
    const ScalarMatrix left = kron_chain(all.first(n / 2));
    const ScalarMatrix right = kron_chain(all.subspan(n / 2));
    const ScalarMatrix rhs = left * coefficient_matrix(state, sigma).entries * right.transpose();
    return lhs.entries == rhs;
}

bool verify_det_relation(const PureState &state, const OperatorList &ops) {
    const int n = state.num_qubits();
    if (n % 2 != 0) {
        throw ShapeError("determinant relation needs an even number of qubits");
    }
    const Scalar lhs = exact_det(coefficient_matrix(apply_local(state, ops)));
    Scalar det_product(1);
    for (const LocalOperator &op : ops) {
        det_product *= op.det();
    }
    const Scalar rhs = exact_det(coefficient_matrix(state)) * pow(det_product, uint64_t{1} << ((n - 2) / 2));
    return lhs == rhs;
}

OperatorList random_invertible_ops(int n, std::mt19937_64 &rng, int pool) {
    if (pool < 3) {
        throw std::invalid_argument("operator entry pool must be >= 3");
    }
    OperatorList ops;
    while (static_cast<int>(ops.size()) < n) {
        LocalOperator op(random_gaussian_integer(rng, pool), random_gaussian_integer(rng, pool),
                         random_gaussian_integer(rng, pool), random_gaussian_integer(rng, pool));
        if (op.is_invertible()) {
            ops.push_back(std::move(op));
        }
    }
    return ops;
}

OperatorList random_invertible_ops(int n, uint64_t seed, int pool) {
    std::mt19937_64 rng(seed);
    return random_invertible_ops(n, rng, pool);
}

OperatorList random_local_ops(int n, std::mt19937_64 &rng, int pool) {
    OperatorList ops;
    std::uniform_int_distribution<int> kind(0, 11);
    for (int q = 0; q < n; ++q) {
        const int k = kind(rng);
        if (k == 0) {
            ops.emplace_back(0, 0, 0, 0);
        } else if (k <= 3) {
            Scalar u0, u1, v0, v1;
            do {
                u0 = random_gaussian_integer(rng, pool);
                u1 = random_gaussian_integer(rng, pool);
            } while (u0.is_zero() && u1.is_zero());
            do {
                v0 = random_gaussian_integer(rng, pool);
                v1 = random_gaussian_integer(rng, pool);
            } while (v0.is_zero() && v1.is_zero());
            ops.emplace_back(u0 * v0, u0 * v1, u1 * v0, u1 * v1);
        } else {
            ops.emplace_back(random_gaussian_integer(rng, pool), random_gaussian_integer(rng, pool),
                             random_gaussian_integer(rng, pool), random_gaussian_integer(rng, pool));
        }
    }
    return ops;
}

}  // namespace sloccrank
