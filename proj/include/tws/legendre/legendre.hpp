#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tws/rational.hpp"

namespace tws {

// ---------------------------------------------------------------------------
// Legendre polynomials p_n on [-1,1], normalized by p_n(1) = 1, evaluated by
// the three-term recurrence. T is double or Rational.
// ---------------------------------------------------------------------------

template <typename T>
T eval_p(int n, const T& x) {
    if (n < 0) throw std::invalid_argument("eval_p: n must be >= 0");
    if (n == 0) return T(1);
    T pm1(1);
    T p = x;
    for (int k = 1; k < n; ++k) {
        T pn = (T(2 * k + 1) * x * p - T(k) * pm1) / T(k + 1);
        pm1 = p;
        p = pn;
    }
    return p;
}

// Domain-checked double version per the operation contract.
double eval_p_checked(int n, double x, double tol = 1e-12);

// p_0..p_nmax at one point.
template <typename T>
std::vector<T> eval_p_all(int nmax, const T& x) {
    std::vector<T> out(static_cast<std::size_t>(nmax) + 1);
    out[0] = T(1);
    if (nmax == 0) return out;
    out[1] = x;
    for (int k = 1; k < nmax; ++k) {
        out[static_cast<std::size_t>(k) + 1] =
            (T(2 * k + 1) * x * out[static_cast<std::size_t>(k)] -
             T(k) * out[static_cast<std::size_t>(k) - 1]) /
            T(k + 1);
    }
    return out;
}

// p_n'(x).
template <typename T>
T eval_p_deriv(int n, const T& x) {
    // (1-x^2) p_n' = n (p_{n-1} - x p_n); at x = +-1 use p_n'(+-1) = (+-1)^{n-1} n(n+1)/2.
    if (n == 0) return T(0);
    if (x == T(1) || x == T(-1)) {
        T v = T(n) * T(n + 1) / T(2);
        if (x == T(-1) && n % 2 == 0) v = -v;
        return v;
    }
    T pn = eval_p(n, x);
    T pnm1 = eval_p(n - 1, x);
    return T(n) * (pnm1 - x * pn) / (T(1) - x * x);
}

// ---------------------------------------------------------------------------
// The coordinate functions q_k. Canonical definition
//
//   q_k(x) = (2k+1) * Int_{-1}^{x} (x - t) p_k(t) dt,
//
// so that q_k'' = (2k+1) p_k, q_k'(-1) = 0 for all k, and q_k'(1) = 0 for
// every k >= 1 (the k = 0 member cannot satisfy q'(1) = 0: its second
// derivative has nonzero mean). For k >= 2 this coincides exactly with the
// difference form (p_{k+2}-p_k)/(2k+3) - (p_k-p_{k-2})/(2k-1); for k in {0,1}
// the difference form acquires an affine completion.
// ---------------------------------------------------------------------------

template <typename T>
T eval_q(int k, const T& x) {
    if (k < 0) throw std::invalid_argument("eval_q: k must be >= 0");
    auto p = eval_p_all(k + 2, x);
    auto P = [&](int n) -> T { return n >= 0 ? p[static_cast<std::size_t>(n)] : T(0); };
    if (k == 0) {
        // (x+1)^2/2 = (p2 - p0)/3 + p0 + p1
        return (P(2) - P(0)) / T(3) + P(0) + P(1);
    }
    if (k == 1) {
        return (P(3) - P(1)) / T(5) - P(0) - P(1);
    }
    return (P(k + 2) - P(k)) / T(2 * k + 3) - (P(k) - P(k - 2)) / T(2 * k - 1);
}

// q_k'(x) = (2k+1) Int_{-1}^{x} p_k = p_{k+1} - p_{k-1} for k >= 1.
template <typename T>
T eval_q_deriv(int k, const T& x) {
    if (k == 0) return x + T(1);
    return eval_p(k + 1, x) - eval_p(k - 1, x);
}

// q_k as exact Legendre coefficients (index = Legendre order).
std::vector<Rational> q_legendre_coeffs(int k);

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature on [-1,1].
// ---------------------------------------------------------------------------

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point rule, exact for polynomials of degree <= 2n-1. Rules are cached.
const QuadRule& gauss_legendre(int n);

// Integrates f over [-1,1] with an n-point rule.
double integrate(const std::function<double(double)>& f, int n_nodes);

// Node count for a target polynomial degree: ceil((deg+2)/2) + 2.
int nodes_for_degree(int degree);

// ---------------------------------------------------------------------------
// Fourier-Legendre moments f^m = Int_{-h}^{h} f(t) p_m(t/h) dt.
// ---------------------------------------------------------------------------

// Rule is sized from poly_degree (the declared polynomial degree of f in t),
// so the result is exact up to roundoff for genuinely polynomial f.
std::vector<double> moments(const std::function<double(double)>& f, int m_max, double h,
                            int poly_degree);

// Fixed-rule variant; throws std::invalid_argument when the declared degree
// exceeds the rule's exactness degree 2*n_nodes - 1.
std::vector<double> moments_with_rule(const std::function<double(double)>& f, int m_max, double h,
                                      int poly_degree, int n_nodes);

// ---------------------------------------------------------------------------
// Truncated Legendre series in a thickness variable z.
//
// With use_offset = false the argument is z/h (the plate-variable convention);
// with use_offset = true it is zeta = (z - offset)/(2h), the shifted-argument
// convention of the correction-function representation. Both appear in the
// source material; the flag records which one a series was built with.
// ---------------------------------------------------------------------------

struct LegendreSeries {
    double h = 1.0;
    double offset = 0.0;
    bool use_offset = false;
    std::vector<double> coeffs;  // c_0..c_N

    double scaled_arg(double z) const { return use_offset ? (z - offset) / (2 * h) : z / h; }
    double eval(double z) const;
    std::string to_json() const;
    static LegendreSeries from_json(const std::string& text);
};

// ---------------------------------------------------------------------------
// Boundary-compatible difference-basis series
//
//   F(z) = ((h+z) g+ + (h-z) g-) / (2h)
//        + sum_{s>=1} T^s [ p_{s+1}(z/h) - p_{s-1}(z/h) ],
//
// whose face traces are the affine part's values g+- for ANY bracket
// coefficients, since p_{s+1}(+-1) = p_{s-1}(+-1).
// ---------------------------------------------------------------------------

enum class Face { Plus, Minus };

template <typename T>
struct DifferenceBasisSeries {
    T h{1};
    T g_plus{0};
    T g_minus{0};
    std::vector<T> brackets;  // T^1, T^2, ... (index s-1)

    T eval(const T& z) const {
        T zeta = z / h;
        T v = ((h + z) * g_plus + (h - z) * g_minus) / (T(2) * h);
        if (!brackets.empty()) {
            auto p = eval_p_all(static_cast<int>(brackets.size()) + 1, zeta);
            for (std::size_t s = 1; s <= brackets.size(); ++s) {
                v += brackets[s - 1] * (p[s + 1] - p[s - 1]);
            }
        }
        return v;
    }

    // Evaluates the full series at z = +-h; equals g+- identically.
    T face_trace(Face f) const { return eval(f == Face::Plus ? h : -h); }

    // m-th Legendre expansion coefficient (coefficient of p_m(z/h)).
    T expansion_coeff(int m) const {
        T v(0);
        if (m == 0) v += (g_plus + g_minus) / T(2);
        if (m == 1) v += (g_plus - g_minus) / T(2);
        auto bracket = [&](int s) -> T {
            if (s < 1 || s > static_cast<int>(brackets.size())) return T(0);
            return brackets[static_cast<std::size_t>(s) - 1];
        };
        v += bracket(m - 1) - bracket(m + 1);
        return v;
    }
};

template <typename T>
T reconstruct_face_trace(const DifferenceBasisSeries<T>& s, Face f) {
    return s.face_trace(f);
}

}  // namespace tws
