#pragma once

#include <array>
#include <vector>

#include "tws/legendre/legendre.hpp"
#include "tws/poly/bipoly.hpp"
#include "tws/vekua/plate_config.hpp"
#include "tws/vekua/trig_field.hpp"
#include "tws/vekua/vekua_system.hpp"

namespace tws::refined {

using vekua::TrigField;

// Static bending problem with gamma-parameterized shear/normal corrections.
struct BendingProblem {
    PlateConfig config;
    vekua::SurfaceLoads loads;
};

// Right side of the deflection equation (remainder terms are order-tracked
// only, never evaluated). bracket_term, when non-null, supplies the
// Monge-Ampere coupling L[u3*, F*] as a spectral field; null means the linear
// problem.
TrigField bending_rhs(const BendingProblem& prob, const TrigField* bracket_term = nullptr);

// Per-mode solve of D Lap^2 w = bending_rhs on the simply supported rectangle.
TrigField solve_linear_plate(const BendingProblem& prob, const TrigField* bracket_term = nullptr);

struct ShearForces {
    TrigField q1;
    TrigField q2;
};

// Per-mode solve of the modified Helmholtz relation
// (1 + (1+2 gamma) h^2 |k|^2 / 3) Q = RHS.
ShearForces shear_forces(const TrigField& w, const BendingProblem& prob,
                         const TrigField* bracket_term = nullptr);

// Transverse stress profiles of the classical refined model; the printed
// sigma_a3 normalization integrates to 4 Q_alpha across the thickness, which
// is recorded rather than corrected.
struct ReissnerProfile {
    std::vector<double> z;
    std::vector<double> sigma_a3;
    std::vector<double> sigma_33;
    Rational sigma33_top;              // = 0
    Rational sigma33_bottom;           // = -q
    Rational dsigma33_top;             // = 0 (the "artificial and odd" condition)
    Rational dsigma33_bottom;          // = 0
    Rational shear_integral_over_Q;    // thickness integral of sigma_a3 / Q_alpha = 4
    bool artificial_derivative_condition = true;
};

ReissnerProfile reissner_profiles(const Rational& q_shear, const Rational& q, const Rational& h,
                                  const std::vector<double>& z_samples);

// Planar system data: exact polynomials in (x, y). sigma33_int is the
// thickness integral (sigma_33, 1).
struct PlanarData {
    Poly2 tau;
    Poly2 omega;
    Poly2 w_bar;
    Poly2 f1_bar;
    Poly2 f2_bar;
    Poly2 sigma33_int;
};

// LHS - RHS of the two planar equations, exact.
std::array<Poly2, 2> planar_residual(const PlanarData& data, const PlateConfig& config);

// LHS - RHS of the compatibility-type equation
//   Lap(sigma11+sigma22) = -E/2 [w,w] + nu/(2h) Int Lap sigma_33 dt
//                          + (1+nu)/(2h) f_bar_alpha,alpha.
Poly2 kr2_residual(const Poly2& w, const Poly2& sigma_trace_sum, const Poly2& lap_sigma33_int,
                   const Poly2& f_avg_div, const PlateConfig& config);

// Resultants of a difference-basis transverse stress profile. The leading
// closed formulas are evaluated alongside exact thickness quadrature; the
// difference is reported as the remainder (the order bounds carry unspecified
// constants, so nothing is asserted about them here).
struct Resultants {
    double Q_formula = 0.0;   // -2h T^1 + h (g+ + g-)
    double Q_exact = 0.0;     // Int T dt
    double psi_formula = 0.0; // 2h^3/3 (g+ + g- - 17/20 T^1)
    double psi_exact = 0.0;   // 1/2 (h^2 - t^2, T)
    double psi_remainder = 0.0;
    double I_formula = 0.0;   // [1+2 gamma] h^2/3 (g+ - g-), weighting optional
    double I_exact = 0.0;     // (T, t)
    double I_remainder = 0.0;
};

Resultants resultant_integrals(const DifferenceBasisSeries<double>& T, const PlateConfig& config,
                               bool gamma_weighted);

}  // namespace tws::refined
