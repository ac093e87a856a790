#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tws/legendre/legendre.hpp"
#include "tws/model1d/model1d.hpp"
#include "tws/prng.hpp"

using namespace tws;
using namespace tws::model1d;

namespace {

LegendrePoly poly(std::vector<Rational> c) {
    LegendrePoly p;
    p.c = std::move(c);
    return p;
}

}  // namespace

TEST_CASE("shift to homogeneous") {
    // f = p1 + (beta-alpha)/2 shifted back: shifted RHS is exactly p1
    Rational alpha(1, 2), beta(3, 2);
    LegendrePoly f = poly({-(beta - alpha) / 2, Rational(1)});
    Neumann1DProblem prob(f, alpha, beta);
    auto [shifted, corr] = shift_to_homogeneous(prob);
    CHECK(shifted.f.coeff(0) == Rational(0));
    CHECK(shifted.f.coeff(1) == Rational(1));
    CHECK(shifted.homogeneous());
    CHECK(corr.c1 == (alpha + beta) / 2);
    CHECK(corr.c2 == (beta - alpha) / 4);

    // identity shift
    Neumann1DProblem trivial(poly({}), Rational(0), Rational(0));
    auto [sh2, corr2] = shift_to_homogeneous(trivial);
    CHECK(sh2.f.coeff(0) == Rational(0));
    CHECK(corr2.c1 == Rational(0));
    CHECK(corr2.c2 == Rational(0));

    // f = 0, alpha = -1, beta = 1: shifted RHS = p0, x^2-correction 1/2
    Neumann1DProblem pr3(poly({}), Rational(-1), Rational(1));
    auto [sh3, corr3] = shift_to_homogeneous(pr3);
    CHECK(sh3.f.coeff(0) == Rational(1));
    CHECK(corr3.c2 == Rational(1, 2));
}

TEST_CASE("q basis solve: golden coefficients at every truncation") {
    LegendrePoly f = poly({Rational(0), Rational(1)});  // p1
    Neumann1DProblem shifted(f, Rational(0), Rational(0));
    for (int N = 3; N <= 50; ++N) {
        auto sol = solve_q_basis(shifted, N);
        CHECK(sol.coeff(1) == Rational(-1, 3));
        for (int k = 0; k <= N; ++k) {
            if (k != 1) CHECK(sol.coeff(k) == Rational(0));
        }
        CHECK(sol.system_report.diagonally_dominant);
        CHECK(sol.system_report.irreducible);
        CHECK(sol.system_report.strict_row);
        CHECK(sol.residual_norm == 0.0);
    }
}

TEST_CASE("q basis solve: zero RHS") {
    Neumann1DProblem shifted(poly({}), Rational(0), Rational(0));
    auto sol = solve_q_basis(shifted, 8);
    for (int k = 0; k <= 8; ++k) CHECK(sol.coeff(k) == Rational(0));
}

TEST_CASE("q basis solve on p3 against the diagonal inversion") {
    LegendrePoly f = poly({Rational(0), Rational(0), Rational(0), Rational(1)});
    Neumann1DProblem shifted(f, Rational(0), Rational(0));
    auto sol = solve_q_basis(shifted, 9);
    // -z'' = p3 with z'(+-1) = 0 inverts diagonally in this basis: z_3 = -1/7.
    CHECK(sol.coeff(3) == Rational(-1, 7));
    for (int k = 0; k <= 9; ++k)
        if (k != 3) CHECK(sol.coeff(k) == Rational(0));
    CHECK(sol.residual_norm == 0.0);
}

TEST_CASE("legendre basis solve reproduces the closed-form solution") {
    for (Rational alpha : {Rational(0), Rational(1), Rational(-2, 3)}) {
        LegendrePoly f = poly({Rational(0), Rational(1)});
        Neumann1DProblem prob(f, alpha, alpha);
        for (int N : {3, 5, 10, 25}) {
            auto sol = solve_legendre_basis(prob, N);
            CHECK(sol.coeff(1) == Rational(2, 5) + alpha);
            CHECK(sol.coeff(3) == Rational(-1, 15));
            for (int k = 0; k <= N; ++k) {
                if (k != 1 && k != 3) CHECK(sol.coeff(k) == Rational(0));
            }
        }
    }
    // alpha = beta = 1 gives u_1 = 7/5
    Neumann1DProblem prob(poly({Rational(0), Rational(1)}), Rational(1), Rational(1));
    CHECK(solve_legendre_basis(prob, 7).coeff(1) == Rational(7, 5));
}

TEST_CASE("legendre basis solve: zero data gives the zero mode only") {
    Neumann1DProblem prob(poly({}), Rational(0), Rational(0));
    auto sol = solve_legendre_basis(prob, 6);
    for (int k = 0; k <= 6; ++k) CHECK(sol.coeff(k) == Rational(0));
}

TEST_CASE("incompatible data is flagged") {
    // Int f = 2 f0 must equal alpha - beta
    Neumann1DProblem bad(poly({Rational(1)}), Rational(0), Rational(0));
    CHECK_THROWS_AS(solve_legendre_basis(bad, 5), std::invalid_argument);
    CHECK_THROWS_AS(solve_q_basis(bad, 5), std::invalid_argument);
}

TEST_CASE("round trip: shifted solve reproduces -u'' = f exactly") {
    Prng rng(42);
    for (int t = 0; t < 10; ++t) {
        Rational alpha = rand_rational(rng);
        Rational beta = alpha;  // compatible with a mean-free f
        LegendrePoly f = poly({Rational(0), rand_rational(rng)});
        Neumann1DProblem prob(f, alpha, beta);
        auto [shifted, corr] = shift_to_homogeneous(prob);
        auto sol = solve_q_basis(shifted, 7);
        LegendrePoly u = assemble_solution_q(sol, corr);

        // exact second derivative via the Legendre derivative map
        LegendrePoly upp = derivative(derivative(u));
        for (int k = 0; k <= 9; ++k) CHECK(-upp.coeff(k) == f.coeff(k));

        // boundary data reproduced exactly
        LegendrePoly du = derivative(u);
        CHECK(du.eval(Rational(-1)) == alpha);
        CHECK(du.eval(Rational(1)) == beta);

        // dense second-difference oracle: exact rationals on a fine grid, and
        // the cubic solution makes the central difference exact
        Rational hstep(1, 5000);
        for (int s = 1; s < 6; ++s) {
            Rational x(2 * s - 5, 5);
            x.canonicalize();
            Rational fd =
                (u.eval(x + hstep) - 2 * u.eval(x) + u.eval(x - hstep)) / (hstep * hstep);
            CHECK(-fd == f.eval(x));
        }
    }
}

TEST_CASE("stability report: q basis insensitive, legendre u1 shifts by delta") {
    LegendrePoly f = poly({Rational(0), Rational(1)});
    Neumann1DProblem prob(f, Rational(0), Rational(0));
    Rational delta(1, 10);
    auto rep = stability_report(prob, {3, 5, 9}, delta);
    CHECK(rep.legendre_u1_shift == delta);
    CHECK(rep.q_max_coeff_shift == Rational(0));
    for (const auto& e : rep.q_basis) {
        CHECK(e.defect_minus == 0.0);
        CHECK(e.defect_plus == 0.0);
        CHECK(e.interior_sensitivity == 0.0);
        CHECK(e.affine_sensitivity == doctest::Approx(to_double(delta)));
    }
    for (const auto& e : rep.legendre_basis) {
        CHECK(e.interior_sensitivity == doctest::Approx(to_double(delta)));
    }
    // delta = 0: no shifts anywhere
    auto rep0 = stability_report(prob, {5}, Rational(0));
    CHECK(rep0.legendre_u1_shift == Rational(0));
    CHECK(rep0.q_max_coeff_shift == Rational(0));
}
