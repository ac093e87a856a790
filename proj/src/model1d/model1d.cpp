#include "tws/model1d/model1d.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "tws/legendre/legendre.hpp"

namespace tws::model1d {

namespace {

// (p_a, p_b) = 2 delta_ab / (2a+1)
Rational p_inner(int a, int b) {
    if (a != b || a < 0) return Rational(0);
    return Rational(2, 2 * a + 1);
}

Rational inner_with_q(const LegendrePoly& f, int j) {
    const auto qc = tws::q_legendre_coeffs(j);
    Rational acc(0);
    for (int m = 0; m < static_cast<int>(qc.size()); ++m) {
        const Rational fm = f.coeff(m);
        if (fm != 0 && qc[static_cast<std::size_t>(m)] != 0) {
            acc += fm * qc[static_cast<std::size_t>(m)] * p_inner(m, m);
        }
    }
    return acc;
}

// Tridiagonal-in-steps-of-two solve over one parity class {start, start+2, ...} <= N.
// diag(j) = 2/(2j+3) + 2/(2j-1); sub/super = -2/(2j-1), -2/(2j+3).
std::vector<int> parity_indices(int start, int N) {
    std::vector<int> idx;
    for (int j = start; j <= N; j += 2) idx.push_back(j);
    return idx;
}

Rational a_diag(int j) { return Rational(2, 2 * j + 3) + Rational(2, 2 * j - 1); }
Rational a_low(int j) { return Rational(-2, 2 * j - 1); }   // couples to j-2 (present iff j-2 >= 1)
Rational a_high(int j) { return Rational(-2, 2 * j + 3); }  // couples to j+2

void check_dominance(const std::vector<int>& idx, SystemReport* rep) {
    bool strict = false;
    bool dominant = true;
    bool irreducible = true;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const int j = idx[r];
        Rational diag = abs(a_diag(j));
        Rational off(0);
        if (r > 0) {
            off += abs(a_low(j));
            if (a_low(j) == 0) irreducible = false;
        }
        if (r + 1 < idx.size()) {
            off += abs(a_high(j));
            if (a_high(j) == 0) irreducible = false;
        }
        if (diag < off) dominant = false;
        if (diag > off) strict = true;
    }
    rep->diagonally_dominant = rep->diagonally_dominant && dominant;
    rep->strict_row = rep->strict_row && strict;
    rep->irreducible = rep->irreducible && irreducible;
}

// Thomas elimination, exact.
std::vector<Rational> thomas(const std::vector<int>& idx, const LegendrePoly& rhs) {
    const std::size_t n = idx.size();
    std::vector<Rational> diag(n), low(n), high(n), b(n);
    for (std::size_t r = 0; r < n; ++r) {
        diag[r] = a_diag(idx[r]);
        low[r] = r > 0 ? a_low(idx[r]) : Rational(0);
        high[r] = r + 1 < n ? a_high(idx[r]) : Rational(0);
        b[r] = inner_with_q(rhs, idx[r]);
    }
    for (std::size_t r = 1; r < n; ++r) {
        Rational m = low[r] / diag[r - 1];
        diag[r] -= m * high[r - 1];
        b[r] -= m * b[r - 1];
    }
    std::vector<Rational> x(n);
    if (n > 0) {
        x[n - 1] = b[n - 1] / diag[n - 1];
        for (std::size_t r = n - 1; r-- > 0;) {
            x[r] = (b[r] - high[r] * x[r + 1]) / diag[r];
        }
    }
    return x;
}

// Dense symmetric positive definite solve over rationals (Gaussian elimination
// without pivoting; valid for the Gram matrices used here).
std::vector<Rational> dense_solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k] == 0) throw std::runtime_error("dense_solve: zero pivot");
        for (std::size_t r = k + 1; r < n; ++r) {
            if (A[r][k] == 0) continue;
            Rational m = A[r][k] / A[k][k];
            for (std::size_t c = k; c < n; ++c) A[r][c] -= m * A[k][c];
            b[r] -= m * b[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

}  // namespace

Rational LegendrePoly::eval(const Rational& x) const {
    Rational acc(0);
    if (c.empty()) return acc;
    auto p = tws::eval_p_all(static_cast<int>(c.size()) - 1, x);
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * p[k];
    return acc;
}

double LegendrePoly::eval(double x) const {
    double acc = 0;
    if (c.empty()) return acc;
    auto p = tws::eval_p_all(static_cast<int>(c.size()) - 1, x);
    for (std::size_t k = 0; k < c.size(); ++k) acc += to_double(c[k]) * p[k];
    return acc;
}

Neumann1DProblem::Neumann1DProblem(LegendrePoly f_, Rational alpha_, Rational beta_)
    : f(std::move(f_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {}

namespace {
// Int_{-1}^{1} f = 2 f_0; solvable pure-Neumann data obeys Int f = alpha - beta.
Rational compat_defect(const Neumann1DProblem& p) {
    return Rational(2) * p.f.coeff(0) - (p.alpha - p.beta);
}
}  // namespace

std::pair<Neumann1DProblem, AffineCorrection> shift_to_homogeneous(const Neumann1DProblem& prob) {
    LegendrePoly shifted = prob.f;
    if (shifted.c.empty()) shifted.c.resize(1, Rational(0));
    shifted.c[0] += (prob.beta - prob.alpha) / 2;
    AffineCorrection corr;
    corr.c1 = (prob.alpha + prob.beta) / 2;
    corr.c2 = (prob.beta - prob.alpha) / 4;
    corr.u0 = 0;  // fixed at assembly by zero-mean normalization
    return {Neumann1DProblem(std::move(shifted), Rational(0), Rational(0)), corr};
}

Projective1DSolution solve_q_basis(const Neumann1DProblem& shifted, int N) {
    if (N < 3) throw std::invalid_argument("solve_q_basis: truncation must satisfy N >= 3");
    if (!shifted.homogeneous())
        throw std::invalid_argument("solve_q_basis: expects the shifted (homogeneous) problem");
    if (compat_defect(shifted) != 0)
        throw std::invalid_argument("solve_q_basis: incompatible Neumann data");

    Projective1DSolution sol;
    sol.basis = 'q';
    sol.N = N;
    sol.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    sol.system_report.diagonally_dominant = true;
    sol.system_report.strict_row = true;
    sol.system_report.irreducible = true;

    const auto odd = parity_indices(1, N);
    const auto even = parity_indices(2, N);
    sol.system_report.size_odd = static_cast<int>(odd.size());
    sol.system_report.size_even = static_cast<int>(even.size());
    check_dominance(odd, &sol.system_report);
    check_dominance(even, &sol.system_report);
    if (!sol.system_report.diagonally_dominant || !sol.system_report.irreducible ||
        !sol.system_report.strict_row) {
        throw std::runtime_error("solve_q_basis: truncated system lost irreducible diagonal dominance");
    }

    for (const auto& idx : {odd, even}) {
        auto x = thomas(idx, shifted.f);
        for (std::size_t r = 0; r < idx.size(); ++r)
            sol.coeffs[static_cast<std::size_t>(idx[r])] = x[r];
    }

    // residual of -z'' - f; z'' = sum z_k (2k+1) p_k
    double rn = 0;
    for (int k = 0; k <= std::max(N, shifted.f.degree()); ++k) {
        Rational rk = -(Rational(2 * k + 1) * sol.coeff(k)) - shifted.f.coeff(k);
        double v = to_double(rk);
        rn += v * v * 2.0 / (2 * k + 1);
    }
    sol.residual_norm = std::sqrt(rn);
    return sol;
}

Projective1DSolution solve_legendre_basis(const Neumann1DProblem& prob, int N) {
    if (N < 3) throw std::invalid_argument("solve_legendre_basis: truncation must satisfy N >= 3");
    if (compat_defect(prob) != 0)
        throw std::invalid_argument("solve_legendre_basis: incompatible Neumann data");

    Projective1DSolution sol;
    sol.basis = 'p';
    sol.N = N;
    sol.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));

    // Gram of p_j' against p_k': min(j,k)(min(j,k)+1) on matching parity.
    for (int start : {1, 2}) {
        auto idx = parity_indices(start, N);
        if (idx.empty()) continue;
        std::vector<std::vector<Rational>> G(idx.size(), std::vector<Rational>(idx.size()));
        std::vector<Rational> b(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                int m = std::min(idx[r], idx[c]);
                G[r][c] = Rational(m) * Rational(m + 1);
            }
            const int j = idx[r];
            Rational bj = prob.f.coeff(j) * Rational(2, 2 * j + 1) + prob.beta;
            bj -= (j % 2 == 0) ? prob.alpha : -prob.alpha;
            b[r] = bj;
        }
        auto x = dense_solve(std::move(G), std::move(b));
        for (std::size_t r = 0; r < idx.size(); ++r)
            sol.coeffs[static_cast<std::size_t>(idx[r])] = x[r];
    }

    // residual of -u'' - f over the truncation range
    LegendrePoly u;
    u.c = sol.coeffs;
    LegendrePoly upp = derivative(derivative(u));
    double rn = 0;
    for (int k = 0; k <= std::max(N, prob.f.degree()); ++k) {
        double v = to_double(-upp.coeff(k) - prob.f.coeff(k));
        rn += v * v * 2.0 / (2 * k + 1);
    }
    sol.residual_norm = std::sqrt(rn);
    return sol;
}

LegendrePoly derivative(const LegendrePoly& u) {
    LegendrePoly d;
    const int n = u.degree();
    if (n <= 0) return d;
    d.c.assign(static_cast<std::size_t>(n), Rational(0));
    // p_k' = sum_{i <= k-1, i == k-1 (mod 2)} (2i+1) p_i
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int k = i + 1; k <= n; k += 2) acc += u.coeff(k);
        d.c[static_cast<std::size_t>(i)] = Rational(2 * i + 1) * acc;
    }
    return d;
}

LegendrePoly assemble_solution_q(const Projective1DSolution& sol, const AffineCorrection& corr) {
    LegendrePoly u;
    u.c.assign(sol.coeffs.size() + 3, Rational(0));
    for (int k = 0; k < static_cast<int>(sol.coeffs.size()); ++k) {
        if (sol.coeffs[static_cast<std::size_t>(k)] == 0) continue;
        auto qc = tws::q_legendre_coeffs(k);
        for (std::size_t m = 0; m < qc.size(); ++m)
            u.c[m] += sol.coeffs[static_cast<std::size_t>(k)] * qc[m];
    }
    // u = z + c1 x + c2 x^2 - u0;   x = p1, x^2 = (2 p2 + p0)/3
    u.c[1] += corr.c1;
    u.c[2] += corr.c2 * Rational(2, 3);
    u.c[0] += corr.c2 * Rational(1, 3);
    u.c[0] = 0;  // zero-mean normalization fixes the free constant
    return u;
}

LegendrePoly assemble_solution_p(const Projective1DSolution& sol) {
    LegendrePoly u;
    u.c = sol.coeffs;
    return u;
}

namespace {

BasisReportEntry make_entry(int N, const LegendrePoly& u, const Rational& alpha,
                            const Rational& beta, double interior_shift, double affine_shift) {
    BasisReportEntry e;
    e.N = N;
    LegendrePoly du = derivative(u);
    e.defect_minus = std::fabs(to_double(du.eval(Rational(-1)) - alpha));
    e.defect_plus = std::fabs(to_double(du.eval(Rational(1)) - beta));
    e.interior_sensitivity = interior_shift;
    e.affine_sensitivity = affine_shift;
    return e;
}

}  // namespace

StabilityReport stability_report(const Neumann1DProblem& prob, const std::vector<int>& n_list,
                                 const Rational& delta) {
    StabilityReport rep;
    rep.delta = delta;
    rep.legendre_u1_shift = 0;
    rep.q_max_coeff_shift = 0;

    Neumann1DProblem pert(prob.f, prob.alpha + delta, prob.beta + delta);

    for (int N : n_list) {
        // q basis route
        auto [sh0, corr0] = shift_to_homogeneous(prob);
        auto [sh1, corr1] = shift_to_homogeneous(pert);
        auto z0 = solve_q_basis(sh0, N);
        auto z1 = solve_q_basis(sh1, N);
        Rational zshift(0);
        for (std::size_t k = 0; k < z0.coeffs.size(); ++k) {
            Rational d = abs(z1.coeffs[k] - z0.coeffs[k]);
            if (d > zshift) zshift = d;
        }
        if (zshift > rep.q_max_coeff_shift) rep.q_max_coeff_shift = zshift;
        LegendrePoly u_q = assemble_solution_q(z0, corr0);
        rep.q_basis.push_back(make_entry(N, u_q, prob.alpha, prob.beta, to_double(zshift),
                                         std::fabs(to_double(corr1.c1 - corr0.c1))));

        // Legendre basis route
        auto p0 = solve_legendre_basis(prob, N);
        auto p1 = solve_legendre_basis(pert, N);
        Rational pshift(0);
        for (std::size_t k = 1; k < p0.coeffs.size(); ++k) {
            Rational d = abs(p1.coeffs[k] - p0.coeffs[k]);
            if (d > pshift) pshift = d;
        }
        rep.legendre_u1_shift = p1.coeff(1) - p0.coeff(1);
        LegendrePoly u_p = assemble_solution_p(p0);
        rep.legendre_basis.push_back(
            make_entry(N, u_p, prob.alpha, prob.beta, to_double(pshift), 0.0));
    }
    return rep;
}

}  // namespace tws::model1d
