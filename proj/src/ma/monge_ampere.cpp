#include "tws/ma/monge_ampere.hpp"

#include <vector>

namespace tws::ma {

Poly2 bracket(const Poly2& u, const Poly2& v) {
    Poly2 u11 = u.dx(0).dx(0), u12 = u.dx(0).dx(1), u22 = u.dx(1).dx(1);
    Poly2 v11 = v.dx(0).dx(0), v12 = v.dx(0).dx(1), v22 = v.dx(1).dx(1);
    return u11 * v22 - (u12 * v12).scaled(Rational(2)) + u22 * v11;
}

Decomposition divergence_decomposition(const Poly2& u, const Poly2& v) {
    Poly2 u1 = u.dx(0), u2 = u.dx(1);
    Poly2 v1 = v.dx(0), v2 = v.dx(1);

    Decomposition d;
    d.flux_p = {u2 * v2, -(u1 * v2)};
    d.flux_q = {-(u2 * v1), u1 * v1};

    Poly2 div_p = d.flux_p[0].dx(0) + d.flux_p[1].dx(1);
    Poly2 div_q = d.flux_q[0].dx(0) + d.flux_q[1].dx(1);
    d.combination = div_p.dx(0) + div_q.dx(1);
    d.residual = d.combination + bracket(u, v);

    // Variant with the second inner group as printed: d2[d2(d1u d2v) - d1(d2u d1v)]
    // subtracted instead of added.
    Poly2 printed_second = (u1 * v2).dx(1) - (u2 * v1).dx(0);
    Poly2 printed = div_p.dx(0) - printed_second.dx(1);
    d.printed_variant_residual = printed + bracket(u, v);
    return d;
}

namespace {

// Powers of a fixed linear form, memoized locally per call.
std::vector<CPoly> powers(const CPoly& base, int n) {
    std::vector<CPoly> pw(static_cast<std::size_t>(n) + 1);
    pw[0] = CPoly::constant(GRat(1));
    for (int k = 1; k <= n; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k) - 1] * base;
    return pw;
}

}  // namespace

CPoly to_complex(const Poly2& p) {
    // x = (z + zbar)/2, y = (z - zbar)/(2i) = -i/2 z + i/2 zbar
    CPoly X;
    X.add_term(1, 0, GRat(Rational(1, 2)));
    X.add_term(0, 1, GRat(Rational(1, 2)));
    CPoly Y;
    Y.add_term(1, 0, GRat(Rational(0), Rational(-1, 2)));
    Y.add_term(0, 1, GRat(Rational(0), Rational(1, 2)));

    auto xp = powers(X, p.degree_x());
    auto yp = powers(Y, p.degree_y());
    CPoly out;
    for (const auto& [k, c] : p.terms()) {
        out += (xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)])
                   .scaled(GRat(c));
    }
    return out;
}

FromComplexResult from_complex(const CPoly& P) {
    // z = x + iy, zbar = x - iy; substitute into real-variable polynomials
    // with Gaussian-rational coefficients, then split.
    BiPoly<GRat> acc;
    BiPoly<GRat> zx;
    zx.add_term(1, 0, GRat(1));
    zx.add_term(0, 1, GRat::i());
    BiPoly<GRat> zbx;
    zbx.add_term(1, 0, GRat(1));
    zbx.add_term(0, 1, GRat(Rational(0), Rational(-1)));

    int dz = P.degree_x(), dzb = P.degree_y();
    std::vector<BiPoly<GRat>> zp(static_cast<std::size_t>(dz) + 1), zbp(static_cast<std::size_t>(dzb) + 1);
    zp[0] = BiPoly<GRat>::constant(GRat(1));
    for (int k = 1; k <= dz; ++k) zp[static_cast<std::size_t>(k)] = zp[static_cast<std::size_t>(k) - 1] * zx;
    zbp[0] = BiPoly<GRat>::constant(GRat(1));
    for (int k = 1; k <= dzb; ++k) zbp[static_cast<std::size_t>(k)] = zbp[static_cast<std::size_t>(k) - 1] * zbx;

    for (const auto& [k, c] : P.terms()) {
        acc += (zp[static_cast<std::size_t>(k.first)] * zbp[static_cast<std::size_t>(k.second)]).scaled(c);
    }

    FromComplexResult r;
    for (const auto& [k, c] : acc.terms()) {
        if (c.re != 0) r.real_part.add_term(k.first, k.second, c.re);
        if (c.im != 0) r.imag_defect.add_term(k.first, k.second, c.im);
    }
    return r;
}

CPoly d_z(const CPoly& p) { return p.dx(0); }
CPoly d_zbar(const CPoly& p) { return p.dx(1); }

CPoly bracket_complex(const CPoly& U, const CPoly& V) {
    CPoly Uzz = U.dx(0).dx(0), Uzzb = U.dx(0).dx(1), Uzbzb = U.dx(1).dx(1);
    CPoly Vzz = V.dx(0).dx(0), Vzzb = V.dx(0).dx(1), Vzbzb = V.dx(1).dx(1);
    return Uzbzb * Vzz - (Uzzb * Vzzb).scaled(GRat(2)) + Uzz * Vzbzb;
}

Poly2 laplacian(const Poly2& p) { return p.dx(0).dx(0) + p.dx(1).dx(1); }

LaplacianExpansion laplacian_bracket_expansion(const Poly2& u, const Poly2& v) {
    LaplacianExpansion e;
    e.term_lap_u = bracket(laplacian(u), v);
    e.term_lap_v = bracket(u, laplacian(v));
    Poly2 g = bracket(u.dx(0), v.dx(0)) + bracket(u.dx(1), v.dx(1));
    e.term_gradients = g.scaled(Rational(2));
    e.residual = e.term_lap_u + e.term_lap_v + e.term_gradients - laplacian(bracket(u, v));
    return e;
}

}  // namespace tws::ma
