#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "tws/rational.hpp"

namespace tws {

// Sparse bivariate polynomial sum c_{ij} X^i Y^j over an exact coefficient
// ring C (Rational or GRat). Canonical form: zero coefficients are never
// stored; std::map keeps the term order deterministic.
template <typename C>
class BiPoly {
   public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, C>;

    BiPoly() = default;

    static BiPoly monomial(int i, int j, C coeff) {
        BiPoly p;
        if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
        if (!(coeff == C(0))) p.terms_.emplace(Key{i, j}, std::move(coeff));
        return p;
    }
    static BiPoly constant(C c) { return monomial(0, 0, std::move(c)); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(int i, int j) const {
        auto it = terms_.find(Key{i, j});
        return it == terms_.end() ? C(0) : it->second;
    }

    int degree() const {  // total degree, -1 for the zero polynomial
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_x() const {
        int d = 0;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = 0;
        for (const auto& [k, v] : terms_) d = std::max(d, k.second);
        return d;
    }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int i, int j, const C& c) {
        if (c == C(0)) return;
        Key k{i, j};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, C(0) - v);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, C(0) - v);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.terms_) {
            for (const auto& [kb, vb] : b.terms_) {
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
            }
        }
        return r;
    }

    BiPoly scaled(const C& s) const {
        BiPoly r;
        if (s == C(0)) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, s * v);
        return r;
    }

    // Partial derivative: var 0 = X, var 1 = Y.
    BiPoly dx(int var) const {
        BiPoly r;
        for (const auto& [k, v] : terms_) {
            int e = var == 0 ? k.first : k.second;
            if (e == 0) continue;
            Key kk = var == 0 ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
            r.add_term(kk.first, kk.second, C(e) * v);
        }
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::size_t max_coeff_bits() const {
        std::size_t m = 0;
        for (const auto& [k, v] : terms_) m = std::max(m, bit_size(v));
        return m;
    }

    std::string to_string(const char* xname, const char* yname) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << tws::to_string(v);
            if (k.first) os << "*" << xname << "^" << k.first;
            if (k.second) os << "*" << yname << "^" << k.second;
        }
        return os.str();
    }

   private:
    Map terms_;
};

// Real bivariate polynomial in (x, y).
using Poly2 = BiPoly<Rational>;

// Polynomial in the conjugate complex variables (z, zbar).
using CPoly = BiPoly<GRat>;

inline Poly2 poly2_monomial(int i, int j, Rational c) {
    return Poly2::monomial(i, j, std::move(c));
}
inline CPoly cpoly_monomial(int i, int j, GRat c) { return CPoly::monomial(i, j, std::move(c)); }

// Evaluation helpers (doubles; used only by cross-check oracles and reports).
double eval(const Poly2& p, double x, double y);

// Majorant norm on the closed unit polydisk: sum over monomials of |coeff|
// (with |a+bi| majorized by |a|+|b|).
double majorant_norm(const CPoly& p);
double majorant_norm(const Poly2& p);

// A CPoly represents a real-valued function of (x,y) iff c_{ji} = conj(c_{ij}).
bool is_real_valued(const CPoly& p);

// Coefficient-conjugate with swapped exponents; represents conj(U) as a
// function on the real slice zbar = conj(z).
CPoly conj_function(const CPoly& p);

}  // namespace tws
