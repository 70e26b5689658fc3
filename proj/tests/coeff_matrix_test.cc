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

#include <random>

#include "gtest/gtest.h"
#include "sloccrank/random.h"
#include "sloccrank/rank.h"

namespace sloccrank {
namespace {

// Reads the matrix straight off the bit split: row bits of the state index
// come from split.row_bits, column bits from split.col_bits.
ScalarMatrix oracle_matrix(const PureState &s, const BitSplit &split) {
    const int n = s.num_qubits();
    ScalarMatrix m(size_t{1} << split.row_bits.size(), size_t{1} << split.col_bits.size());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            uint64_t index = 0;
            for (size_t k = 0; k < split.row_bits.size(); ++k) {
                uint64_t bit = (r >> (split.row_bits.size() - 1 - k)) & 1;
                index |= bit << (n - split.row_bits[k]);
            }
            for (size_t k = 0; k < split.col_bits.size(); ++k) {
                uint64_t bit = (c >> (split.col_bits.size() - 1 - k)) & 1;
                index |= bit << (n - split.col_bits[k]);
            }
            m(r, c) = s.amplitude(index);
        }
    }
    return m;
}

TEST(coeff_matrix, three_qubit_layout) {
    AmplitudeMap amps;
    for (uint64_t i = 0; i < 8; ++i) {
        amps.emplace(i, Scalar(static_cast<long>(i) + 1));
    }
    CoeffMatrix m = coefficient_matrix(PureState(3, amps));
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 4u);
    for (size_t r = 0; r < 2; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            EXPECT_EQ(m.entries(r, c), Scalar(static_cast<long>(4 * r + c) + 1));
        }
    }
    EXPECT_EQ(m.split.row_bits, (std::vector<int>{1}));
    EXPECT_EQ(m.split.col_bits, (std::vector<int>{2, 3}));
}

TEST(coeff_matrix, ghz4) {
    CoeffMatrix m = coefficient_matrix(ghz_state(4));
    ScalarMatrix expected(4, 4);
    expected(0, 0) = 1;
    expected(3, 3) = 1;
    EXPECT_EQ(m.entries, expected);
}

TEST(coeff_matrix, span_0kpsi_under_swap_is_diagonal) {
    FamilyParams p;
    p.alpha = parse_scalar("2/3");
    p.beta = parse_scalar("-5i");
    CoeffMatrix m = coefficient_matrix(family_state(Family::Span0kPsi, p), QubitPermutation({{1, 4}}));
    ScalarMatrix expected(4, 4);
    expected(0, 0) = 1;
    expected(1, 1) = 1;
    expected(2, 2) = *p.alpha;
    expected(3, 3) = *p.beta;
    EXPECT_EQ(m.entries, expected);
    EXPECT_EQ(m.split.row_bits, (std::vector<int>{4, 2}));
}

TEST(coeff_matrix, odd_shapes) {
    EXPECT_EQ(coefficient_matrix(ghz_state(5)).rows(), 4u);
    EXPECT_EQ(coefficient_matrix(ghz_state(5)).cols(), 8u);
    EXPECT_EQ(coefficient_matrix(basis_state(1, 1)).rows(), 1u);
    EXPECT_EQ(coefficient_matrix(basis_state(1, 1)).cols(), 2u);
    CoeffMatrix z = coefficient_matrix(ZeroState{5});
    EXPECT_EQ(z.rows(), 4u);
    EXPECT_EQ(exact_rank(z).rank, 0);
}

TEST(coeff_matrix, matches_bit_split_oracle) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        PureState s = random_small_state(n, rng, 12);
        for (const QubitPermutation &sigma : enumerate_sigmas(n)) {
            CoeffMatrix m = coefficient_matrix(s, sigma);
            ASSERT_EQ(m.entries, oracle_matrix(s, m.split)) << sigma.str();
        }
    }
}

TEST(coeff_matrix, reshape_preserves_norm) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 6;
        PureState s = random_small_state(n, rng);
        double norm = 0;
        for (const auto &[i, a] : s.amplitudes()) {
            norm += std::norm(a.to_complex());
        }
        for (const QubitPermutation &sigma : enumerate_sigmas(n)) {
            CoeffMatrix m = coefficient_matrix(s, sigma);
            double total = 0;
            for (size_t r = 0; r < m.rows(); ++r) {
                for (size_t c = 0; c < m.cols(); ++c) {
                    total += std::norm(m.entries(r, c).to_complex());
                }
            }
            ASSERT_NEAR(total, norm, 1e-9 * norm);
        }
    }
}

// The three row-bit choices excluded for n = 4 are complements of included
// ones, which only transposes the matrix.
TEST(coeff_matrix, excluded_bipartitions_are_redundant) {
    std::mt19937_64 rng(8);
    const std::vector<std::pair<QubitPermutation, std::vector<int>>> excluded = {
        {QubitPermutation({{1, 3}, {2, 4}}), {3, 4}},  // complement of {1,2}
        {QubitPermutation({{2, 3}}), {1, 3}},          // complement of {2,4}
        {QubitPermutation({{2, 4}}), {1, 4}},          // complement of {2,3}
    };
    for (int trial = 0; trial < 50; ++trial) {
        PureState s = random_small_state(4, rng, 10);
        for (const auto &[sigma, rows] : excluded) {
            CoeffMatrix m = coefficient_matrix(s, sigma);
            ASSERT_EQ(row_bit_set(sigma, 4), rows);
            // Find the included permutation with the complementary row set.
            bool matched = false;
            for (const QubitPermutation &inc : enumerate_sigmas(4)) {
                CoeffMatrix k = coefficient_matrix(s, inc);
                if (k.split.col_bits.size() == 2 &&
                    std::is_permutation(k.split.col_bits.begin(), k.split.col_bits.end(), rows.begin())) {
                    matched = true;
                    // Same entries up to transposition and row/column reordering.
                    ScalarMatrix t = oracle_matrix(s, BitSplit{k.split.col_bits, k.split.row_bits});
                    ASSERT_EQ(exact_rank(t).rank, exact_rank(k).rank);
                    ASSERT_EQ(exact_rank(m).rank, exact_rank(k).rank);
                    ASSERT_EQ(exact_rank(m).rank, exact_rank(k.entries.transpose()).rank);
                }
            }
            ASSERT_TRUE(matched);
        }
    }
}

}  // namespace
}  // namespace sloccrank
