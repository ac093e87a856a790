#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tws/poly/bipoly.hpp"
#include "tws/vekua/plate_config.hpp"

namespace tws::karman {

// Volterra kernel integration of the deflection update:
//   z^j zbar^k |-> z^{j+2} zbar^{k+2} / ((j+1)(j+2)(k+1)(k+2)).
CPoly kernel_integrate(const CPoly& p);

// Plain double antiderivative:
//   z^j zbar^k |-> z^{j+1} zbar^{k+1} / ((j+1)(k+1)).
CPoly plain_integrate(const CPoly& p);

struct IterationParams {
    Rational a{1};
    Rational b{1};
    Rational c{0};
    int m_max = 20;
    double tol = 1e-8;
    double divergence_threshold = 1e12;
    std::size_t coeff_bit_cap = 1'000'000;  // per-coefficient size cap
};

// One step of the model scheme:
//   V = a K[ [U,U] ],   U' = b K[ [U,V] ] + c P[ [U,V] ]
// with K the kernel integration, P the plain one, and [.,.] the
// conjugate-variable bracket.
struct StepResult {
    CPoly V;
    CPoly U;
};
StepResult theorem4_step(const CPoly& u_prev, const IterationParams& params);

enum class Verdict { Converged, Diverged, Inconclusive };

struct TraceEntry {
    int step = 0;
    double norm = 0.0;  // majorant norm of U^{[m]}
    int degree = 0;
    std::size_t term_count = 0;
    std::size_t max_coeff_bits = 0;
};

struct IterationTrace {
    std::vector<TraceEntry> entries;  // entry 0 is the initial state
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
    // First index from which the norm sequence decreases monotonically to the
    // end (trace length if no such suffix of length >= 2 exists).
    std::size_t monotone_from = 0;
};

IterationTrace run_iteration(const CPoly& u0, const IterationParams& params);

// Exact per-p verification of c_p (2p-1)^{-2} < 3/4 + 7/(8(p-3/2)) together
// with the coefficient formula c_p = 2 p^2 (3p-1)/(2p-1).
struct CpBoundReport {
    int p_max = 0;
    bool holds_everywhere = false;
    std::optional<int> first_violation;
    std::vector<Rational> margins;  // rhs - lhs per p, exact
};
CpBoundReport cp_bound_check(int p_max);

Rational cp_value(int p);  // 2 p^2 (3p-1) / (2p-1)

// One deflection update of the physical scheme:
//   (2Eh/16D) (1 - h^2(1+2 gamma)/(3(1-nu)) d_zbar d_z) K[ [U_prev, V_known] ].
// gamma = -1/2 collapses the differential prefactor to the identity.
CPoly hybrid_step(const CPoly& u_prev, const CPoly& v_known, const PlateConfig& config);

// Airy-side update: V = -mu/(lambda*+2mu) K[ [U_prev,U_prev] ] + F.
CPoly hybrid_v_update(const CPoly& u_prev, const PlateConfig& config, const CPoly& holomorphic_F);

}  // namespace tws::karman
