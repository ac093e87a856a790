#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tws/legendre/legendre.hpp"
#include "tws/prng.hpp"

using namespace tws;

TEST_CASE("p_n endpoint values and low-order points") {
    CHECK(eval_p_checked(3, 1.0) == doctest::Approx(1.0));
    CHECK(eval_p_checked(0, 0.37) == doctest::Approx(1.0));
    CHECK(eval_p_checked(4, 0.0) == doctest::Approx(3.0 / 8.0));
    CHECK(eval_p(4, Rational(0)) == Rational(3, 8));
    for (int n = 0; n <= 25; ++n) {
        CHECK(eval_p(n, Rational(1)) == Rational(1));
        CHECK(eval_p(n, Rational(-1)) == (n % 2 == 0 ? Rational(1) : Rational(-1)));
    }
    CHECK_THROWS_AS(eval_p_checked(2, 1.5), std::domain_error);
}

TEST_CASE("|p_n| <= 1 on [-1,1]") {
    Prng rng(7);
    for (int t = 0; t < 200; ++t) {
        double x = rand_real(rng, -1.0, 1.0);
        int n = static_cast<int>(rand_int(rng, 0, 30));
        CHECK(std::fabs(eval_p_checked(n, x)) <= 1.0 + 1e-14);
    }
}

TEST_CASE("orthogonality via quadrature") {
    const int nmax = 20;
    const auto& rule = gauss_legendre(nodes_for_degree(2 * nmax));
    for (int m = 0; m <= nmax; ++m) {
        for (int n = 0; n <= nmax; ++n) {
            double acc = 0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                acc += rule.weights[i] * eval_p(m, rule.nodes[i]) * eval_p(n, rule.nodes[i]);
            }
            double expect = m == n ? 2.0 / (2 * n + 1) : 0.0;
            CHECK(std::fabs(acc - expect) <= 1e-13);
        }
    }
}

TEST_CASE("q_k: integral definition vs closed form, derivative endpoints") {
    // q_k(x) = (2k+1) Int_{-1}^x (x-t) p_k(t) dt, evaluated by quadrature on [-1,x].
    auto q_integral = [](int k, double x) {
        const auto& rule = gauss_legendre(nodes_for_degree(k + 1));
        double acc = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double t = (x + 1.0) / 2.0 * rule.nodes[i] + (x - 1.0) / 2.0;
            acc += rule.weights[i] * (x - t) * eval_p(k, t);
        }
        return (2 * k + 1) * acc * (x + 1.0) / 2.0;
    };
    for (int k = 0; k <= 20; ++k) {
        for (int s = 0; s < 200; ++s) {
            double x = std::cos(M_PI * (s + 0.5) / 200);
            CHECK(std::fabs(eval_q(k, x) - q_integral(k, x)) <= 1e-12);
        }
        if (k >= 1) {
            CHECK(std::fabs(eval_q_deriv(k, 1.0)) <= 1e-12);
            CHECK(std::fabs(eval_q_deriv(k, -1.0)) <= 1e-12);
        }
    }
}

TEST_CASE("q_k closed-form content at low orders") {
    // Bracket content (p2-p0)/3 resp. (p3-p1)/5 plus affine completions that
    // the derivative conditions force.
    Prng rng(3);
    for (int t = 0; t < 20; ++t) {
        Rational x = rand_rational(rng, 7, 8);
        Rational q0 = eval_q(0, x);
        Rational expected0 =
            (eval_p(2, x) - eval_p(0, x)) / 3 + eval_p(0, x) + eval_p(1, x);
        CHECK(q0 == expected0);
        // q0 == (x+1)^2/2
        CHECK(q0 == (x + 1) * (x + 1) / 2);
        Rational q1 = eval_q(1, x);
        Rational expected1 =
            (eval_p(3, x) - eval_p(1, x)) / 5 - eval_p(0, x) - eval_p(1, x);
        CHECK(q1 == expected1);
        // k >= 2: pure difference form
        Rational q2 = eval_q(2, x);
        CHECK(q2 == (eval_p(4, x) - eval_p(2, x)) / 7 - (eval_p(2, x) - eval_p(0, x)) / 3);
    }
    // q_2'(1) = 0 exactly
    CHECK(eval_q_deriv(2, Rational(1)) == Rational(0));
    CHECK(eval_q_deriv(2, Rational(-1)) == Rational(0));
}

TEST_CASE("q_k'' = (2k+1) p_k through the coefficient view") {
    for (int k = 0; k <= 12; ++k) {
        auto c = q_legendre_coeffs(k);
        // differentiate twice in Legendre space via the model1d helper logic:
        // check at sample points instead, exactly.
        Prng rng(11 + k);
        for (int t = 0; t < 5; ++t) {
            Rational x = rand_rational(rng, 5, 7);
            // second derivative by exact difference of the closed forms:
            // q_k'' is degree k; compare (d/dx) q_k' with (2k+1) p_k at x via
            // the derivative recurrence on q'.
            // q_k'(x) = p_{k+1}-p_{k-1} (k>=1), so q_k'' = (2k+1) p_k.
            if (k >= 1) {
                Rational lhs = eval_p_deriv(k + 1, x) - eval_p_deriv(k - 1, x);
                CHECK(lhs == Rational(2 * k + 1) * eval_p(k, x));
            }
            (void)c;
        }
    }
}

TEST_CASE("moments of simple polynomials") {
    const double h = 1.0;
    auto m0 = moments([](double) { return 1.0; }, 4, h, 0);
    CHECK(m0[0] == doctest::Approx(2.0));
    for (int m = 1; m <= 4; ++m) CHECK(std::fabs(m0[static_cast<std::size_t>(m)]) < 1e-14);

    const double h2 = 0.7;
    auto m1 = moments([&](double t) { return t / h2; }, 4, h2, 1);
    CHECK(m1[1] == doctest::Approx(2.0 * h2 / 3.0));
    CHECK(std::fabs(m1[0]) < 1e-14);
    CHECK(std::fabs(m1[2]) < 1e-14);

    auto m2 = moments([&](double t) { return eval_p(2, t / h2); }, 4, h2, 2);
    CHECK(m2[2] == doctest::Approx(2.0 * h2 / 5.0));
    for (int m : {0, 1, 3, 4}) CHECK(std::fabs(m2[static_cast<std::size_t>(m)]) < 1e-14);
}

TEST_CASE("moments reports rule insufficiency") {
    CHECK_THROWS_AS(moments_with_rule([](double t) { return t * t * t * t; }, 2, 1.0, 4, 2),
                    std::invalid_argument);
}

TEST_CASE("difference basis series reproduces face values exactly") {
    // rational mode: exact equality for arbitrary bracket coefficients
    Prng rng(99);
    for (int t = 0; t < 50; ++t) {
        DifferenceBasisSeries<Rational> s;
        s.h = Rational(rand_int(rng, 1, 5), rand_int(rng, 1, 3));
        s.h.canonicalize();
        s.g_plus = rand_rational(rng);
        s.g_minus = rand_rational(rng);
        int nb = static_cast<int>(rand_int(rng, 0, 12));
        for (int i = 0; i < nb; ++i) s.brackets.push_back(rand_rational(rng, 99, 17));
        CHECK(reconstruct_face_trace(s, Face::Plus) == s.g_plus);
        CHECK(reconstruct_face_trace(s, Face::Minus) == s.g_minus);
    }
    // the stated examples
    DifferenceBasisSeries<Rational> s;
    s.h = 1;
    s.g_plus = 5;
    s.g_minus = -1;
    s.brackets = {Rational(7), Rational(-3), Rational(2)};
    CHECK(reconstruct_face_trace(s, Face::Plus) == Rational(5));
    s.g_plus = 0;
    s.g_minus = 0;
    s.brackets = {Rational(7)};
    CHECK(reconstruct_face_trace(s, Face::Minus) == Rational(0));
}

TEST_CASE("difference basis expansion coefficients") {
    DifferenceBasisSeries<Rational> s;
    s.h = 1;
    s.g_plus = 3;
    s.g_minus = 1;
    s.brackets = {Rational(4), Rational(5)};
    // coefficient of p_m: (g+ + g-)/2 [m=0] + (g+ - g-)/2 [m=1] + T^{m-1} - T^{m+1}
    CHECK(s.expansion_coeff(0) == Rational(2) - Rational(4));
    CHECK(s.expansion_coeff(1) == Rational(1) - Rational(5));
    CHECK(s.expansion_coeff(2) == Rational(4));
    CHECK(s.expansion_coeff(3) == Rational(5));
    CHECK(s.expansion_coeff(4) == Rational(0));
}

TEST_CASE("legendre series eval and json round trip") {
    LegendreSeries s;
    s.h = 0.5;
    s.coeffs = {1.0, 2.0, -0.25};
    double z = 0.3;
    double x = z / s.h;
    CHECK(s.eval(z) ==
          doctest::Approx(1.0 + 2.0 * x - 0.25 * eval_p(2, x)));
    auto s2 = LegendreSeries::from_json(s.to_json());
    CHECK(s2.h == s.h);
    CHECK(s2.coeffs == s.coeffs);

    LegendreSeries off;
    off.h = 1.0;
    off.offset = 0.25;
    off.use_offset = true;
    off.coeffs = {0.0, 1.0};
    CHECK(off.eval(0.25) == doctest::Approx(0.0));
    CHECK(off.eval(2.25) == doctest::Approx(1.0));  // zeta = (2.25-0.25)/2 = 1
}
