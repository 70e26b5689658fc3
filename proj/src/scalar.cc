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

#include <cctype>
#include <ostream>
#include <utility>

namespace sloccrank {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GaussRational::GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Rational GaussRational::norm() const { return re_ * re_ + im_ * im_; }

GaussRational GaussRational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussRational &GaussRational::operator+=(const GaussRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational &GaussRational::operator-=(const GaussRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational &GaussRational::operator*=(const GaussRational &o) {
    if (is_zero() || o.is_zero()) {
        re_ = 0;
        im_ = 0;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar::Scalar(GaussRational a, GaussRational b) : a_(std::move(a)), b_(std::move(b)) {}

Scalar &Scalar::operator+=(const Scalar &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    GaussRational a = a_ * o.a_ + GaussRational(2) * (b_ * o.b_);
    GaussRational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (b_.is_zero()) {
        return {a_.inverse()};
    }
    // 1/(a + b s) = (a - b s) / (a^2 - 2 b^2); the denominator is nonzero
    // because sqrt2 is irrational over Q(i).
    GaussRational d_inv = (a_ * a_ - GaussRational(2) * (b_ * b_)).inverse();
    return {a_ * d_inv, -(b_ * d_inv)};
}

std::complex<double> Scalar::to_complex() const {
    static const double kSqrt2 = 1.4142135623730951;
    return {a_.re().get_d() + kSqrt2 * b_.re().get_d(), a_.im().get_d() + kSqrt2 * b_.im().get_d()};
}

std::string Scalar::str() const { return format_scalar(*this); }

Scalar pow(Scalar x, unsigned long exponent) {
    Scalar result(1);
    while (exponent > 0) {
        if (exponent & 1) {
            result *= x;
        }
        exponent >>= 1;
        if (exponent > 0) {
            x *= x;
        }
    }
    return result;
}

namespace {

std::string format_gauss(const GaussRational &g) {
    if (g.is_zero()) {
        return "0";
    }
    std::string out;
    if (sgn(g.re()) != 0) {
        out = g.re().get_str();
    }
    if (sgn(g.im()) != 0) {
        if (sgn(g.im()) < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        Rational mag = abs(g.im());
        if (mag != 1) {
            out += mag.get_str();
        }
        out += 'i';
    }
    return out;
}

class ScalarParser {
   public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        skip_ws();
        if (pos_ == text_.size()) {
            fail("empty scalar");
        }
        Scalar total = signed_term();
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                break;
            }
            char c = text_[pos_];
            if (c != '+' && c != '-') {
                fail(std::string("unexpected '") + c + "'");
            }
            ++pos_;
            Scalar t = term();
            if (c == '+') {
                total += t;
            } else {
                total -= t;
            }
        }
        return total;
    }

   private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Scalar signed_term() {
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        Scalar t = term();
        return negative ? -t : t;
    }

    // term := 's2' | atom ('*' 's2')?
    Scalar term() {
        if (accept_word("s2")) {
            return Scalar::sqrt2();
        }
        GaussRational g = atom();
        if (accept('*')) {
            if (!accept_word("s2")) {
                fail("expected 's2' after '*'");
            }
            return {GaussRational(), g};
        }
        return {g};
    }

    // atom := '(' gauss ')' | number 'i'? | 'i'
    GaussRational atom() {
        if (accept('(')) {
            GaussRational g = gauss();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return g;
        }
        return gauss_term();
    }

    GaussRational gauss() {
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        GaussRational total = gauss_term();
        if (negative) {
            total = -total;
        }
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                bool minus = text_[pos_] == '-';
                ++pos_;
                GaussRational t = gauss_term();
                total += minus ? -t : t;
            } else {
                return total;
            }
        }
    }

    GaussRational gauss_term() {
        skip_ws();
        if (accept('i')) {
            return GaussRational::i();
        }
        Rational r = number();
        if (accept('i')) {
            return {0, r};
        }
        return {r};
    }

    // number := digits ('/' digits)?
    Rational number() {
        mpz_class num = digits();
        mpz_class den = 1;
        if (accept('/')) {
            size_t at = pos_;
            den = digits();
            if (den == 0) {
                throw ParseError("zero denominator", at);
            }
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    mpz_class digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number or 'i'");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const Scalar &x) {
    if (x.b().is_zero()) {
        return format_gauss(x.a());
    }
    std::string out = x.a().is_zero() ? "" : format_gauss(x.a());
    const GaussRational &b = x.b();
    bool single = sgn(b.re()) == 0 || sgn(b.im()) == 0;
    std::string coeff = single ? format_gauss(b) : "(" + format_gauss(b) + ")";
    if (!out.empty() && coeff[0] != '-') {
        out += '+';
    }
    return out + coeff + "*s2";
}

std::ostream &operator<<(std::ostream &out, const Scalar &x) { return out << format_scalar(x); }

}  // namespace sloccrank
