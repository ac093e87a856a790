#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tws {

// Exact rational scalar. All identity-level algebra in the toolkit runs on
// this type; doubles appear only at reporting boundaries.
using Rational = mpq_class;

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Total bit size of numerator plus denominator; used for growth caps in
// iterative schemes.
inline std::size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

// Parses decimal strings ("-0.5", "1.3", "2") into exact rationals, so that
// configuration values like gamma = -0.5 are represented without rounding.
Rational rational_from_decimal(const std::string& s);

// Gaussian rational a + bi. Complex-variable polynomial algebra (the z/zbar
// form of the Monge-Ampere bracket, Theorem-4 iterations) runs on this type.
struct GRat {
    Rational re{0};
    Rational im{0};

    GRat() = default;
    GRat(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GRat(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

    static GRat i() { return GRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GRat& operator/=(const Rational& d) {
        if (d == 0) throw std::domain_error("GRat: division by zero");
        re /= d;
        im /= d;
        return *this;
    }

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
    friend GRat operator*(const Rational& s, GRat a) {
        a.re *= s;
        a.im *= s;
        return a;
    }
    friend GRat operator/(GRat a, const Rational& d) { return a /= d; }
    friend GRat operator-(GRat a) {
        a.re = -a.re;
        a.im = -a.im;
        return a;
    }
    friend bool operator==(const GRat& a, const GRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

inline std::size_t bit_size(const GRat& g) {
    return bit_size(g.re) + bit_size(g.im);
}

// |re| + |im|, as a double; a cheap majorant of the complex modulus.
inline double abs1_double(const GRat& g) {
    double r = to_double(g.re);
    double i = to_double(g.im);
    return (r < 0 ? -r : r) + (i < 0 ? -i : i);
}

std::string to_string(const GRat& g);

}  // namespace tws
