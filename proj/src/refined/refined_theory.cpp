#include "tws/refined/refined_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "tws/ma/monge_ampere.hpp"

namespace tws::refined {

namespace {

using vekua::Trig;

// Applies f(|k|^2) mode-wise; the trig type is preserved.
template <typename F>
TrigField modewise(const TrigField& in, F&& factor) {
    TrigField out = in;
    const double a = in.a(), b = in.b();
    for (int tx = 0; tx < 2; ++tx) {
        for (int ty = 0; ty < 2; ++ty) {
            auto& blk = out.block(static_cast<Trig>(tx), static_cast<Trig>(ty));
            const int M = in.max_mode();
            for (int mx = 0; mx <= M; ++mx) {
                const double kx2 = std::pow(M_PI * mx / a, 2);
                for (int my = 0; my <= M; ++my) {
                    const double ky2 = std::pow(M_PI * my / b, 2);
                    blk[static_cast<std::size_t>(mx) * (M + 1) + static_cast<std::size_t>(my)] *=
                        factor(kx2 + ky2);
                }
            }
        }
    }
    return out;
}

struct Consts {
    double h, nu, gamma, D;
};

Consts consts(const PlateConfig& c) {
    return {to_double(c.h), to_double(c.poisson_nu()), to_double(c.gamma),
            to_double(c.rigidity_D())};
}

TrigField face_div(const std::array<TrigField, 3>& g) {
    return g[0].dx() + g[1].dy();
}

}  // namespace

TrigField bending_rhs(const BendingProblem& prob, const TrigField* bracket_term) {
    prob.config.validate();
    const Consts c = consts(prob.config);
    const auto& loads = prob.loads;

    TrigField gdiff = loads.g_plus[2];
    gdiff.axpy(-1.0, loads.g_minus[2]);

    // -(1 - h^2(1+2g)(2-nu)/(3(1-nu)) Lap)(g3+ - g3-)
    const double c_load = c.h * c.h * (1 + 2 * c.gamma) * (2 - c.nu) / (3 * (1 - c.nu));
    TrigField rhs = modewise(gdiff, [&](double ksq) { return -(1.0 + c_load * ksq); });

    if (bracket_term) {
        const double c_nl = 2 * c.h * c.h * (1 + 2 * c.gamma) / (3 * (1 - c.nu));
        rhs.axpy(2 * c.h * (1.0 - c_nl), *bracket_term);
    }

    // + (g_adiv+ + g_adiv-)
    TrigField gdp = face_div(loads.g_plus);
    TrigField gdm = face_div(loads.g_minus);
    rhs.axpy(1.0, gdp);
    rhs.axpy(1.0, gdm);

    // - Int (t f_a,a - (1 - (h^2-t^2) Lap/(1-nu)) f3) dt
    TrigField fdiv1 = loads.f_moment(1, 0).dx() + loads.f_moment(1, 1).dy();
    rhs.axpy(-c.h, fdiv1);
    rhs.axpy(1.0, loads.f_moment(0, 2));
    TrigField f3d = loads.f_moment(0, 2);
    f3d.axpy(-1.0, loads.f_moment(2, 2));
    const double w = 2 * c.h * c.h / (3 * (1 - c.nu));
    rhs.axpy(-w, f3d.laplacian());
    return rhs;
}

TrigField solve_linear_plate(const BendingProblem& prob, const TrigField* bracket_term) {
    const Consts c = consts(prob.config);
    TrigField rhs = bending_rhs(prob, bracket_term);
    // constant mode has no biharmonic stiffness; it must be absent
    for (int tx : {1}) {
        (void)tx;
        if (rhs.get(Trig::Cos, 0, Trig::Cos, 0) != 0.0)
            throw std::invalid_argument("solve_linear_plate: load has a constant mode");
    }
    return modewise(rhs, [&](double ksq) { return ksq > 0 ? 1.0 / (c.D * ksq * ksq) : 0.0; });
}

ShearForces shear_forces(const TrigField& w, const BendingProblem& prob,
                         const TrigField* bracket_term) {
    const Consts c = consts(prob.config);
    const auto& loads = prob.loads;

    TrigField gdiff = loads.g_plus[2];
    gdiff.axpy(-1.0, loads.g_minus[2]);
    if (bracket_term) gdiff.axpy(2 * c.h * (1 + c.nu), *bracket_term);
    const double cg = c.h * c.h * (1 + 2 * c.gamma) / (3 * (1 - c.nu));

    TrigField lap_w = w.laplacian();
    ShearForces out;
    for (int alpha = 0; alpha < 2; ++alpha) {
        TrigField rhs = alpha == 0 ? lap_w.dx() : lap_w.dy();
        rhs = rhs.scaled(-c.D);
        rhs.axpy(cg, alpha == 0 ? gdiff.dx() : gdiff.dy());
        rhs.axpy(1.0, loads.g_plus[static_cast<std::size_t>(alpha)]);
        rhs.axpy(1.0, loads.g_minus[static_cast<std::size_t>(alpha)]);
        // - Int (t f_a - (1+nu)/(2(1-nu)) (h^2-t^2) f_{3,a}) dt
        rhs.axpy(-c.h, loads.f_moment(1, alpha));
        TrigField f3d = loads.f_moment(0, 2);
        f3d.axpy(-1.0, loads.f_moment(2, 2));
        const double wcoef = (1 + c.nu) / (2 * (1 - c.nu)) * 2 * c.h * c.h / 3;
        rhs.axpy(wcoef, alpha == 0 ? f3d.dx() : f3d.dy());

        const double helm = (1 + 2 * c.gamma) * c.h * c.h / 3;
        TrigField q = modewise(rhs, [&](double ksq) { return 1.0 / (1.0 + helm * ksq); });
        (alpha == 0 ? out.q1 : out.q2) = std::move(q);
    }
    return out;
}

ReissnerProfile reissner_profiles(const Rational& q_shear, const Rational& q, const Rational& h,
                                  const std::vector<double>& z_samples) {
    if (!(h > 0)) throw std::invalid_argument("reissner_profiles: h must be positive");
    ReissnerProfile out;
    out.z = z_samples;
    const double hd = to_double(h);
    const double qs = to_double(q_shear);
    const double qd = to_double(q);
    for (double z : z_samples) {
        if (std::fabs(z) > hd) throw std::invalid_argument("reissner_profiles: |z| > h");
        const double zh = z / hd;
        out.sigma_a3.push_back(3 * qs / hd * (1 - zh * zh));
        out.sigma_33.push_back(-0.75 * qd * (2.0 / 3.0 - zh + zh * zh * zh / 3.0));
    }
    // exact trace values of the printed profile
    auto s33 = [&](const Rational& z) {
        Rational zh = z / h;
        return Rational(-3, 4) * q * (Rational(2, 3) - zh + zh * zh * zh / 3);
    };
    auto ds33 = [&](const Rational& z) {
        Rational zh = z / h;
        return Rational(-3, 4) * q * (-Rational(1) / h + zh * zh / h);
    };
    out.sigma33_top = s33(h);
    out.sigma33_bottom = s33(-h);
    out.dsigma33_top = ds33(h);
    out.dsigma33_bottom = ds33(-h);
    // Int_{-h}^{h} 3/h (1 - z^2/h^2) dz = 4
    out.shear_integral_over_Q = Rational(4);
    out.artificial_derivative_condition = true;
    return out;
}

std::array<Poly2, 2> planar_residual(const PlanarData& d, const PlateConfig& config) {
    config.validate();
    const Rational ls2mu = config.lambda_star() + 2 * config.mu;
    const Rational mu = config.mu;
    const Rational lambda1 = config.lambda / (2 * config.h * (config.lambda + 2 * config.mu));
    const Rational inv2h = Rational(1) / (2 * config.h);

    Poly2 w1 = d.w_bar.dx(0);
    Poly2 w2 = d.w_bar.dx(1);

    Poly2 lhs1 = d.tau.dx(0).scaled(ls2mu) + d.omega.dx(1).scaled(mu);
    Poly2 rhs1 = d.f1_bar.scaled(inv2h) +
                 ((w2 * w2).dx(0) - (w1 * w2).dx(1)).scaled(mu) +
                 d.sigma33_int.dx(0).scaled(lambda1);

    Poly2 lhs2 = d.tau.dx(1).scaled(ls2mu) - d.omega.dx(0).scaled(mu);
    Poly2 rhs2 = d.f2_bar.scaled(inv2h) +
                 ((w1 * w1).dx(1) - (w1 * w2).dx(0)).scaled(mu) +
                 d.sigma33_int.dx(1).scaled(lambda1);

    return {lhs1 - rhs1, lhs2 - rhs2};
}

Poly2 kr2_residual(const Poly2& w, const Poly2& sigma_trace_sum, const Poly2& lap_sigma33_int,
                   const Poly2& f_avg_div, const PlateConfig& config) {
    config.validate();
    const Rational E = config.youngs_E();
    const Rational nu = config.poisson_nu();
    Poly2 lhs = ma::laplacian(sigma_trace_sum);
    Poly2 rhs = ma::bracket(w, w).scaled(-E / 2) +
                lap_sigma33_int.scaled(nu / (2 * config.h)) +
                f_avg_div.scaled((1 + nu) / (2 * config.h));
    return lhs - rhs;
}

Resultants resultant_integrals(const DifferenceBasisSeries<double>& T, const PlateConfig& config,
                               bool gamma_weighted) {
    const double h = T.h;
    if (std::fabs(h - to_double(config.h)) > 1e-14)
        throw std::invalid_argument("resultant_integrals: series thickness differs from config");
    Resultants out;
    const double gsum = T.g_plus + T.g_minus;
    const double gdiff = T.g_plus - T.g_minus;
    auto bracket = [&](std::size_t s) {
        return s >= 1 && s <= T.brackets.size() ? T.brackets[s - 1] : 0.0;
    };

    out.Q_formula = -2 * h * bracket(1) + h * gsum;
    const int deg = static_cast<int>(T.brackets.size()) + 2;
    out.Q_exact =
        h * integrate([&](double x) { return T.eval(h * x); }, nodes_for_degree(deg));

    out.psi_formula = 2 * h * h * h / 3 * (gsum - 17.0 / 20.0 * bracket(1));
    out.psi_exact = h * integrate(
                            [&](double x) {
                                return 0.5 * (h * h - h * h * x * x) * T.eval(h * x);
                            },
                            nodes_for_degree(deg + 2));
    out.psi_remainder = out.psi_exact - out.psi_formula;

    const double gw = gamma_weighted ? 1.0 + 2.0 * to_double(config.gamma) : 1.0;
    out.I_formula = gw * h * h / 3 * gdiff;
    out.I_exact = h * integrate([&](double x) { return h * x * T.eval(h * x); },
                                nodes_for_degree(deg + 1));
    out.I_remainder = out.I_exact - out.I_formula;
    return out;
}

}  // namespace tws::refined
