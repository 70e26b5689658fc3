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

#include "sloccrank/scalar.h"

#include <random>

#include "gtest/gtest.h"

namespace sloccrank {
namespace {

Scalar random_scalar(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<long> den(1, 5);
    auto q = [&] { return make_rational(num(rng), den(rng)); };
    return {GaussRational(q(), q()), GaussRational(q(), q())};
}

TEST(scalar, arith_examples) {
    EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
    Scalar one_plus_i = GaussRational(1, 1);
    Scalar one_minus_i = GaussRational(1, -1);
    EXPECT_EQ(one_plus_i * one_minus_i, Scalar(2));
    Scalar half = Rational(1, 2);
    Scalar x = half + half * Scalar::sqrt2();
    Scalar y = half - half * Scalar::sqrt2();
    EXPECT_EQ(x + y, Scalar(1));
    EXPECT_EQ(x - y, Scalar::sqrt2());
}

TEST(scalar, inverse_examples) {
    EXPECT_EQ(Scalar::sqrt2().inverse(), Scalar(GaussRational(), GaussRational(Rational(1, 2))));
    EXPECT_EQ((Scalar(1) + Scalar::sqrt2()).inverse(), Scalar(-1) + Scalar::sqrt2());
    EXPECT_EQ(Scalar::i().inverse(), -Scalar::i());
    EXPECT_THROW(Scalar().inverse(), DivisionByZero);
    EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST(scalar, field_axioms_on_random_triples) {
    std::mt19937_64 rng(1234);
    for (int k = 0; k < 1000; ++k) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x - x, Scalar());
        if (!x.is_zero()) {
            ASSERT_EQ(x * x.inverse(), Scalar(1));
        }
    }
}

TEST(scalar, canonical_form) {
    // 2/4 and 1/2 must be stored identically.
    Scalar a = Rational(2, 4) + Scalar(0);
    Scalar b = make_rational(3, 6);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.a().re().get_den(), 2);
    Scalar c = make_rational(-6, -4) * Scalar(1);
    EXPECT_EQ(c.a().re().get_num(), 3);
    EXPECT_EQ(c.a().re().get_den(), 2);
    EXPECT_EQ(make_rational(0, 7).get_den(), 1);
    EXPECT_EQ(format_scalar(Scalar(make_rational(4, -8))), "-1/2");
}

TEST(scalar, to_complex_examples) {
    EXPECT_EQ(Scalar(Rational(1, 2)).to_complex(), std::complex<double>(0.5, 0.0));
    EXPECT_EQ(Scalar(GaussRational(), GaussRational(Rational(1, 2))).to_complex(),
              std::complex<double>(0.7071067811865476, 0.0));
    EXPECT_EQ(Scalar::i().to_complex(), std::complex<double>(0.0, 1.0));
}

TEST(scalar, embedding_is_multiplicative) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        if (x.is_zero() || y.is_zero()) {
            continue;
        }
        std::complex<double> fx = x.to_complex(), fy = y.to_complex();
        if (std::abs(fx) < 1e-9 || std::abs(fy) < 1e-9) {
            continue;
        }
        // Compare at unit magnitude.
        std::complex<double> expected = (fx / std::abs(fx)) * (fy / std::abs(fy));
        std::complex<double> got = (x * y).to_complex() / (std::abs(fx) * std::abs(fy));
        ASSERT_LT(std::abs(got - expected), 1e-12);
    }
}

TEST(scalar, parse_examples) {
    EXPECT_EQ(parse_scalar("1/2"), Scalar(Rational(1, 2)));
    EXPECT_EQ(parse_scalar("i*s2"), Scalar(GaussRational(), GaussRational::i()));
    Scalar s = parse_scalar("-1/3+2i+(1+i)*s2");
    EXPECT_EQ(s.a(), GaussRational(make_rational(-1, 3), 2));
    EXPECT_EQ(s.b(), GaussRational(1, 1));
    EXPECT_EQ(parse_scalar(" - 1 / 2 "), Scalar(make_rational(-1, 2)));
    EXPECT_EQ(parse_scalar("i"), Scalar::i());
    EXPECT_EQ(parse_scalar("1/3i"), Scalar(GaussRational(0, make_rational(1, 3))));
    EXPECT_EQ(parse_scalar("s2"), Scalar::sqrt2());
    EXPECT_EQ(parse_scalar("1-s2"), Scalar(1) - Scalar::sqrt2());
    EXPECT_EQ(parse_scalar("0"), Scalar());
}

TEST(scalar, parse_errors_carry_position) {
    for (const char *bad : {"", "1/0", "1+", "abc", "1*", "(1+i", "1 2", "2*s3"}) {
        EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
    }
    try {
        parse_scalar("1+x");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 2u);
    }
}

TEST(scalar, format_parse_round_trip) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        Scalar x = random_scalar(rng);
        ASSERT_EQ(parse_scalar(format_scalar(x)), x) << format_scalar(x);
    }
    EXPECT_EQ(format_scalar(Scalar::i()), "i");
    EXPECT_EQ(format_scalar(-Scalar::sqrt2()), "-1*s2");
    EXPECT_EQ(format_scalar(parse_scalar("-1/3+2i+(1+i)*s2")), "-1/3+2i+(1+i)*s2");
}

TEST(scalar, pow) {
    EXPECT_EQ(pow(Scalar::sqrt2(), 4), Scalar(4));
    EXPECT_EQ(pow(Scalar::i(), 3), -Scalar::i());
    EXPECT_EQ(pow(Scalar(5), 0), Scalar(1));
}

}  // namespace
}  // namespace sloccrank
