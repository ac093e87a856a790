#include "tws/karman/karman.hpp"

#include <algorithm>
#include <stdexcept>

#include "tws/ma/monge_ampere.hpp"

namespace tws::karman {

CPoly kernel_integrate(const CPoly& p) {
    CPoly out;
    for (const auto& [k, c] : p.terms()) {
        const int j = k.first, l = k.second;
        Rational den = Rational(j + 1) * Rational(j + 2) * Rational(l + 1) * Rational(l + 2);
        out.add_term(j + 2, l + 2, c / den);
    }
    return out;
}

CPoly plain_integrate(const CPoly& p) {
    CPoly out;
    for (const auto& [k, c] : p.terms()) {
        const int j = k.first, l = k.second;
        Rational den = Rational(j + 1) * Rational(l + 1);
        out.add_term(j + 1, l + 1, c / den);
    }
    return out;
}

StepResult theorem4_step(const CPoly& u_prev, const IterationParams& params) {
    StepResult r;
    r.V = kernel_integrate(ma::bracket_complex(u_prev, u_prev)).scaled(GRat(params.a));
    CPoly buv = ma::bracket_complex(u_prev, r.V);
    r.U = kernel_integrate(buv).scaled(GRat(params.b)) + plain_integrate(buv).scaled(GRat(params.c));
    return r;
}

namespace {

TraceEntry make_entry(int step, const CPoly& u) {
    TraceEntry e;
    e.step = step;
    e.norm = majorant_norm(u);
    e.degree = u.degree();
    e.term_count = u.term_count();
    e.max_coeff_bits = u.max_coeff_bits();
    return e;
}

std::size_t find_monotone_suffix(const std::vector<TraceEntry>& t) {
    if (t.size() < 2) return t.size();
    std::size_t start = t.size();
    for (std::size_t i = t.size() - 1; i-- > 0;) {
        if (t[i].norm > t[i + 1].norm) {
            start = i;
        } else {
            break;
        }
    }
    return start;
}

}  // namespace

IterationTrace run_iteration(const CPoly& u0, const IterationParams& params) {
    if (u0.is_zero()) throw std::invalid_argument("run_iteration: U0 must be nonzero");
    if (params.m_max < 1) throw std::invalid_argument("run_iteration: m_max must be >= 1");

    IterationTrace trace;
    trace.entries.push_back(make_entry(0, u0));

    CPoly u = u0;
    const double initial_norm = trace.entries[0].norm;
    int growth_streak = 0;
    for (int m = 1; m <= params.m_max; ++m) {
        StepResult st = theorem4_step(u, params);
        u = std::move(st.U);
        TraceEntry e = make_entry(m, u);
        if (e.max_coeff_bits > params.coeff_bit_cap) {
            trace.entries.push_back(e);
            trace.verdict = Verdict::Inconclusive;
            trace.note = "coefficient size exceeded the cap of " +
                         std::to_string(params.coeff_bit_cap) + " bits at step " +
                         std::to_string(m);
            trace.monotone_from = find_monotone_suffix(trace.entries);
            return trace;
        }
        const double prev = trace.entries.back().norm;
        trace.entries.push_back(e);
        if (u.is_zero() || e.norm < params.tol) {
            trace.verdict = Verdict::Converged;
            trace.monotone_from = find_monotone_suffix(trace.entries);
            return trace;
        }
        growth_streak = e.norm > prev ? growth_streak + 1 : 0;
        if (e.norm > params.divergence_threshold ||
            (growth_streak >= 3 && e.norm > 1e3 * initial_norm)) {
            trace.verdict = Verdict::Diverged;
            trace.note = "norm growth detected at step " + std::to_string(m);
            trace.monotone_from = find_monotone_suffix(trace.entries);
            return trace;
        }
    }
    trace.verdict = Verdict::Inconclusive;
    trace.note = "step limit reached";
    trace.monotone_from = find_monotone_suffix(trace.entries);
    return trace;
}

Rational cp_value(int p) {
    return Rational(2) * Rational(p) * Rational(p) * Rational(3 * p - 1) / Rational(2 * p - 1);
}

CpBoundReport cp_bound_check(int p_max) {
    if (p_max < 2) throw std::invalid_argument("cp_bound_check: p_max must be >= 2");
    CpBoundReport rep;
    rep.p_max = p_max;
    rep.holds_everywhere = true;
    for (int p = 2; p <= p_max; ++p) {
        Rational lhs = cp_value(p) / (Rational(2 * p - 1) * Rational(2 * p - 1));
        Rational rhs = Rational(3, 4) + Rational(7) / (Rational(8) * (Rational(p) - Rational(3, 2)));
        Rational margin = rhs - lhs;
        rep.margins.push_back(margin);
        if (!(margin > 0) && !rep.first_violation) {
            rep.first_violation = p;
            rep.holds_everywhere = false;
        }
    }
    return rep;
}

CPoly hybrid_step(const CPoly& u_prev, const CPoly& v_known, const PlateConfig& config) {
    config.validate();
    const Rational nu = config.poisson_nu();
    const Rational kappa =
        config.h * config.h * (1 + 2 * config.gamma) / (Rational(3) * (1 - nu));
    const Rational scale = Rational(2) * config.youngs_E() * config.h /
                           (Rational(16) * config.rigidity_D());

    CPoly integ = kernel_integrate(ma::bracket_complex(u_prev, v_known));
    CPoly corrected = integ - ma::d_zbar(ma::d_z(integ)).scaled(GRat(kappa));
    return corrected.scaled(GRat(scale));
}

CPoly hybrid_v_update(const CPoly& u_prev, const PlateConfig& config, const CPoly& holomorphic_F) {
    const Rational factor = -config.mu / (config.lambda_star() + 2 * config.mu);
    return kernel_integrate(ma::bracket_complex(u_prev, u_prev)).scaled(GRat(factor)) +
           holomorphic_F;
}

}  // namespace tws::karman
