#pragma once

#include <string>

#include "tws/rational.hpp"

namespace tws {

// Material and geometry record. Stored exactly so identity-level algebra
// (gamma collapse, hybrid-step prefactors) stays exact; double views feed the
// numeric paths.
struct PlateConfig {
    Rational lambda{1};  // Lame lambda
    Rational mu{1};      // Lame mu
    Rational h{1};       // half-thickness
    Rational gamma{0};   // refinement parameter
    Rational a{1};       // rectangle side along x
    Rational b{1};       // rectangle side along y

    // lambda* of the planar system; defaults to the plane-stress reduction
    // 2 lambda mu / (lambda + 2 mu) unless overridden.
    Rational lambda_star() const { return Rational(2) * lambda * mu / (lambda + 2 * mu); }

    Rational youngs_E() const { return mu * (3 * lambda + 2 * mu) / (lambda + mu); }
    Rational poisson_nu() const { return lambda / (2 * (lambda + mu)); }
    // Flexural rigidity D = 2 E h^3 / (3 (1 - nu^2)).
    Rational rigidity_D() const {
        Rational nu = poisson_nu();
        return Rational(2) * youngs_E() * h * h * h / (Rational(3) * (1 - nu * nu));
    }

    void validate() const;

    static PlateConfig from_lame(Rational lambda, Rational mu, Rational h, Rational gamma,
                                 Rational a, Rational b);
    static PlateConfig from_engineering(const Rational& E, const Rational& nu, Rational h,
                                        Rational gamma, Rational a, Rational b);

    // Parses {"lambda":..,"mu":..} or {"E":..,"nu":..} plus h/gamma/a/b from a
    // JSON object; numbers are read as decimal strings into exact rationals.
    static PlateConfig from_json(const std::string& text);
    std::string to_json() const;
};

}  // namespace tws
