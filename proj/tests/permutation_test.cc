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

#include "sloccrank/permutation.h"

#include <algorithm>
#include <random>
#include <set>

#include <gmpxx.h>

#include "gtest/gtest.h"
#include "sloccrank/random.h"

namespace sloccrank {
namespace {

std::vector<std::string> names(const std::vector<QubitPermutation> &sigmas) {
    std::vector<std::string> out;
    for (const auto &s : sigmas) {
        out.push_back(s.str());
    }
    return out;
}

TEST(permutation, enumerate_examples) {
    EXPECT_EQ(names(enumerate_sigmas(3)), (std::vector<std::string>{"", "1:2", "1:3"}));
    EXPECT_EQ(names(enumerate_sigmas(4)), (std::vector<std::string>{"", "1:3", "1:4"}));
    EXPECT_EQ(enumerate_sigmas(5).size(), 10u);
    EXPECT_EQ(names(enumerate_sigmas(2)), (std::vector<std::string>{""}));
    EXPECT_THROW(enumerate_sigmas(1), std::invalid_argument);
}

TEST(permutation, count_matches_binomial_formula) {
    for (int n = 2; n <= 10; ++n) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
        mpz_class expected = (n % 2 == 0) ? mpz_class(binom / 2) : binom;
        ASSERT_EQ(mpz_class(enumerate_sigmas(n).size()), expected) << "n = " << n;
    }
}

TEST(permutation, subset_model_equals_direct_enumeration) {
    for (int n = 2; n <= 12; ++n) {
        ASSERT_EQ(enumerate_sigmas(n), enumerate_sigmas_direct(n)) << "n = " << n;
    }
}

TEST(permutation, enumeration_is_canonical_and_ordered) {
    for (int n = 2; n <= 10; ++n) {
        auto sigmas = enumerate_sigmas(n);
        ASSERT_TRUE(sigmas.front().is_identity());
        ASSERT_TRUE(std::is_sorted(sigmas.begin(), sigmas.end()));
        for (const auto &s : sigmas) {
            ASSERT_TRUE(s.is_canonical(n)) << s.str();
            ASSERT_LE(static_cast<int>(s.size()), (n - 1) / 2);
        }
    }
}

TEST(permutation, row_sets_distinct_and_not_complementary) {
    for (int n = 2; n <= 10; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto &s : enumerate_sigmas(n)) {
            std::vector<int> rows = row_bit_set(s, n);
            ASSERT_TRUE(seen.insert(rows).second) << "duplicate row set for " << s.str();
        }
        if (n % 2 == 0) {
            for (const auto &rows : seen) {
                std::vector<int> complement;
                for (int q = 1; q <= n; ++q) {
                    if (!std::binary_search(rows.begin(), rows.end(), q)) {
                        complement.push_back(q);
                    }
                }
                ASSERT_FALSE(seen.count(complement)) << "complementary pair present, n = " << n;
            }
        }
    }
}

TEST(permutation, permute_examples) {
    PureState s = basis_state(4, 0b1100);
    EXPECT_EQ(permute_state(s, QubitPermutation({{1, 4}})), basis_state(4, 0b0101));
    EXPECT_EQ(permute_state(s, QubitPermutation::identity()), s);
    PureState d = dicke_state(4, 2);
    for (const auto &sigma : enumerate_sigmas(4)) {
        EXPECT_EQ(permute_state(d, sigma), d);
    }
    EXPECT_THROW(permute_state(s, QubitPermutation({{1, 5}})), std::invalid_argument);
    EXPECT_THROW(permute_qubits(s, {1, 2, 2, 4}), std::invalid_argument);
}

TEST(permutation, permute_is_an_involution) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        PureState s = random_small_state(n, rng);
        for (const auto &sigma : enumerate_sigmas(n)) {
            ASSERT_EQ(permute_state(permute_state(s, sigma), sigma), s);
        }
    }
}

TEST(permutation, slot_image) {
    EXPECT_EQ(QubitPermutation({{1, 4}, {2, 5}}).slot_image(5), (std::vector<int>{4, 5, 3, 1, 2}));
    EXPECT_EQ(row_bit_set(QubitPermutation({{1, 3}}), 4), (std::vector<int>{2, 3}));
}

TEST(permutation, parse_and_format) {
    EXPECT_TRUE(parse_permutation("").is_identity());
    EXPECT_TRUE(parse_permutation("  ").is_identity());
    EXPECT_EQ(parse_permutation("1:4"), QubitPermutation({{1, 4}}));
    EXPECT_EQ(parse_permutation(" 1 : 4 , 2:5"), QubitPermutation({{1, 4}, {2, 5}}));
    EXPECT_EQ(parse_permutation("1:4,2:5").str(), "1:4,2:5");
    for (const char *bad : {"1", "1:", ":4", "1:4,", "1;4", "a:b"}) {
        EXPECT_THROW(parse_permutation(bad), ParseError) << bad;
    }
}

TEST(permutation, canonical_checks) {
    EXPECT_NO_THROW(QubitPermutation({{1, 3}}).check_canonical(5));  // 3 > floor(5/2)
    EXPECT_NO_THROW(QubitPermutation({{1, 4}}).check_canonical(6));
    EXPECT_FALSE(QubitPermutation({{3, 4}}).is_canonical(4));  // 3 is a column bit
    EXPECT_FALSE(QubitPermutation({{1, 2}}).is_canonical(4));  // 2 is a row bit
    EXPECT_FALSE(QubitPermutation({{1, 5}}).is_canonical(4));
    EXPECT_FALSE(QubitPermutation({{2, 5}, {1, 6}}).is_canonical(6));
}

}  // namespace
}  // namespace sloccrank
