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

#ifndef SLOCCRANK_SCALAR_H
#define SLOCCRANK_SCALAR_H

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sloccrank/errors.h"

namespace sloccrank {

/// Arbitrary-precision rational. GMP keeps mpq values canonical (positive
/// denominator, reduced, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Element of Q(i): re + im*i.
class GaussRational {
   public:
    GaussRational() = default;
    GaussRational(Rational re, Rational im = 0);  // NOLINT: implicit from rationals is intended.
    GaussRational(long re) : GaussRational(Rational(re)) {}  // NOLINT

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2.
    Rational norm() const;
    GaussRational inverse() const;

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational &operator+=(const GaussRational &o);
    GaussRational &operator-=(const GaussRational &o);
    GaussRational &operator*=(const GaussRational &o);

    friend GaussRational operator+(GaussRational x, const GaussRational &y) { return x += y; }
    friend GaussRational operator-(GaussRational x, const GaussRational &y) { return x -= y; }
    friend GaussRational operator*(GaussRational x, const GaussRational &y) { return x *= y; }
    friend bool operator==(const GaussRational &x, const GaussRational &y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

    static GaussRational i() { return {0, 1}; }

   private:
    Rational re_;
    Rational im_;
};

/// Element of Q(i, sqrt2): a + b*sqrt2 with a, b in Q(i). Since sqrt2 is not
/// in Q(i) the pair (a, b) is unique, so equality is componentwise.
class Scalar {
   public:
    Scalar() = default;
    Scalar(GaussRational a, GaussRational b = {});  // NOLINT
    Scalar(long v) : a_(v) {}                        // NOLINT
    Scalar(const Rational &v) : a_(v) {}             // NOLINT

    static Scalar sqrt2() { return {GaussRational(), GaussRational(1)}; }
    static Scalar i() { return {GaussRational::i()}; }

    /// Rational part (coefficient of 1).
    const GaussRational &a() const { return a_; }
    /// Coefficient of sqrt2.
    const GaussRational &b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    Scalar inverse() const;
    std::complex<double> to_complex() const;

    Scalar operator-() const { return {-a_, -b_}; }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    /// x * y.inverse().
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar x, const Scalar &y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar &y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar &y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar &y) { return x /= y; }
    friend bool operator==(const Scalar &x, const Scalar &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    std::string str() const;

   private:
    GaussRational a_;
    GaussRational b_;
};

/// Raises x to a non-negative integer power by repeated squaring.
Scalar pow(Scalar x, unsigned long exponent);

/// Parses the scalar text grammar, e.g. "1/2", "-3/4i", "i*s2",
/// "-1/3+2i+(1+i)*s2". Whitespace is ignored. Throws ParseError.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar &x);
std::ostream &operator<<(std::ostream &out, const Scalar &x);

}  // namespace sloccrank

#endif
