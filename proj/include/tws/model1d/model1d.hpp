#pragma once

#include <string>
#include <vector>

#include "tws/rational.hpp"

namespace tws::model1d {

// A function on [-1,1] given by exact Legendre coefficients: f = sum c_k p_k.
struct LegendrePoly {
    std::vector<Rational> c;

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
        return c[static_cast<std::size_t>(k)];
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational eval(const Rational& x) const;
    double eval(double x) const;
};

// -u'' = f on (-1,1), u'(-1) = alpha, u'(1) = beta. Pure Neumann data must be
// compatible: integrating the equation gives Int f = alpha - beta.
struct Neumann1DProblem {
    LegendrePoly f;
    Rational alpha;
    Rational beta;

    Neumann1DProblem(LegendrePoly f_, Rational alpha_, Rational beta_);
    bool homogeneous() const { return alpha == 0 && beta == 0; }
};

// u(x) = z(x) + c1 x + c2 x^2 + u0, the affine map that homogenizes the
// Neumann data.
struct AffineCorrection {
    Rational c1;  // (alpha+beta)/2
    Rational c2;  // (beta-alpha)/4
    Rational u0;  // free constant, fixed by zero-mean normalization
};

// Shifted problem: -z'' = f + (beta-alpha)/2, z'(+-1) = 0.
std::pair<Neumann1DProblem, AffineCorrection> shift_to_homogeneous(const Neumann1DProblem& prob);

struct SystemReport {
    bool diagonally_dominant = false;
    bool irreducible = false;
    bool strict_row = false;
    int size_even = 0;
    int size_odd = 0;
};

struct Projective1DSolution {
    char basis = 'q';                // 'q' or 'p'
    int N = 0;                       // truncation order
    std::vector<Rational> coeffs;    // coefficient of q_k / p_k at index k
    double residual_norm = 0.0;      // L2 norm of -u'' - f over the truncation
    SystemReport system_report;

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return Rational(0);
        return coeffs[static_cast<std::size_t>(k)];
    }
};

// Projective (Galerkin) solve of the homogeneous problem in the q basis,
// z = sum_{k>=1} z_k q_k. The odd and even truncated systems are tridiagonal
// in steps of two; both are checked for irreducible diagonal dominance before
// the elimination, as the Taussky-Todd nonsingularity argument requires.
Projective1DSolution solve_q_basis(const Neumann1DProblem& shifted, int N);

// Vekua-style solve of the full Neumann problem in the Legendre basis,
// u = sum u_k p_k, natural boundary data entering the right sides. The free
// mean is normalized to zero (u_0 = 0).
Projective1DSolution solve_legendre_basis(const Neumann1DProblem& prob, int N);

// Reconstruct u from a q-basis solution of the shifted problem.
LegendrePoly assemble_solution_q(const Projective1DSolution& sol, const AffineCorrection& corr);
LegendrePoly assemble_solution_p(const Projective1DSolution& sol);

struct BasisReportEntry {
    int N = 0;
    double defect_minus = 0.0;       // |u'(-1) - alpha|
    double defect_plus = 0.0;        // |u'(1) - beta|
    double interior_sensitivity = 0.0;  // sup_k |coeff shift| under data perturbation
    double affine_sensitivity = 0.0;    // shift absorbed by the affine correction
};

struct StabilityReport {
    Rational delta;
    std::vector<BasisReportEntry> q_basis;
    std::vector<BasisReportEntry> legendre_basis;
    // Exact coefficient shifts for the paper's model data.
    Rational legendre_u1_shift;
    Rational q_max_coeff_shift;
};

// Compares the two solution processes under a perturbation alpha -> alpha+delta,
// beta -> beta+delta (compatibility-preserving for alpha = beta data).
StabilityReport stability_report(const Neumann1DProblem& prob, const std::vector<int>& n_list,
                                 const Rational& delta);

// u'(x) of a Legendre-coefficient polynomial, exact.
LegendrePoly derivative(const LegendrePoly& u);

}  // namespace tws::model1d
