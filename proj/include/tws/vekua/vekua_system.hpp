#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tws/legendre/legendre.hpp"
#include "tws/poly/bipoly.hpp"
#include "tws/vekua/plate_config.hpp"
#include "tws/vekua/trig_field.hpp"

namespace tws::vekua {

// Displacement moments u_i^n(x,y), n = 0..N, i in {1,2,3}; u^n = 0 beyond N.
struct MomentField {
    int N = 0;
    std::vector<std::array<TrigField, 3>> comps;  // size N+1

    MomentField() = default;
    MomentField(int N_, double a, double b, int max_mode);
    TrigField& u(int n, int i) { return comps[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; }
    const TrigField& u(int n, int i) const {
        return comps[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    }
    static MomentField random_sine(Prng& rng, int N, double a, double b, int max_mode);
    double sup_abs_coeff() const;
};

// Face data g_i^+- and body-force moments f_i^m on the rectangle.
struct SurfaceLoads {
    std::array<TrigField, 3> g_plus;
    std::array<TrigField, 3> g_minus;
    std::vector<std::array<TrigField, 3>> f_moments;  // index m

    TrigField f_moment(int m, int i) const {
        if (m < 0 || m >= static_cast<int>(f_moments.size())) return TrigField();
        return f_moments[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
    }
};

// Stress moments recovered from displacement moments. in_plane stores the
// Legendre expansion coefficients (s11, s22, s12) for m = 0..N; transverse
// stores the difference-basis bracket coefficients (s13, s23, s33) for
// s = 0..N+1, where the s = 0 slot holds the value the recovery formula
// assigns to the index that the representation itself forces to zero (it
// doubles as the face-compatibility defect of U).
struct StressMomentField {
    int N = 0;
    std::vector<std::array<TrigField, 3>> in_plane;
    std::vector<std::array<TrigField, 3>> transverse;
};

// Exact operator symbols on the Fourier mode e^{i(k1 x + k2 y)}: square
// matrices of size 3(N+1) over Gaussian rationals, row/column index 3n + i.
using SymbolMatrix = std::vector<std::vector<GRat>>;

// The reduced Vekua-type operator. apply() realizes the collapsed form of the
// system (split above/below coupling sums, zero-order ladder, and the face
// trace couplings); energy() is the quadratic form of the variational
// formulation, evaluated by exact trig-orthogonality sums.
class MomentOperator {
   public:
    MomentOperator(PlateConfig config, int N);

    const PlateConfig& config() const { return cfg_; }
    int order() const { return N_; }

    MomentField apply(const MomentField& U) const;

    // a(U,V) = Int sigma(U):eps(V); symmetric, and -(L U, U) for the operator
    // of the variational formulation.
    double energy(const MomentField& U, const MomentField& V) const;

    SymbolMatrix symbol(const Rational& k1, const Rational& k2) const;
    SymbolMatrix oracle_symbol(const Rational& k1, const Rational& k2) const;

   private:
    PlateConfig cfg_;
    int N_;
};

MomentOperator assemble_L(const PlateConfig& config, int N);

// Load side of the reduced system: per n and component the combination
// (1/(h c_n)) [ f^n - (g+ - g-)/2 delta_n0 - (g+ + g-)[n odd] - (g+ - g-)[n even >= 2] ].
MomentField rhs_moments(const PlateConfig& config, const SurfaceLoads& loads, int N);

StressMomentField recover_stress_moments(const MomentField& U, const PlateConfig& config,
                                         const SurfaceLoads& loads);

// Face traces of the transverse stress implied by U through the constitutive
// sums (raw Legendre summation); components i = 0,1,2.
std::array<TrigField, 3> induced_face_trace(const MomentField& U, const PlateConfig& config,
                                            Face face);

struct FaceTraceDefect {
    // (a) difference-basis representation: identically zero by construction
    double rep_plus = 0.0;
    double rep_minus = 0.0;
    // (b) raw Legendre summation of recovered moments vs prescribed data
    double raw_plus = 0.0;
    double raw_minus = 0.0;
};

FaceTraceDefect face_trace_defect(const MomentField& U, const SurfaceLoads& loads,
                                  const PlateConfig& config);

// Korn-type bounds. Norms are evaluated in two readings of the weighted
// pairings: "diagonal" sums the pairing over equal moment indices (a true
// weighted norm) and "gram" sums it over all index pairs (the seminorm of the
// weighted moment sum). The asserted bound uses the diagonal reading; both are
// reported.
struct KornBounds {
    double bound14_diag = 0.0;
    double bound16_diag = 0.0;
    double bound14_gram = 0.0;
    double bound16_gram = 0.0;
};

KornBounds korn_bounds(const MomentField& U, const PlateConfig& config);

struct KornTrialResult {
    double energy = 0.0;
    KornBounds bounds;
    double margin = 0.0;  // energy - max(bound14_diag, bound16_diag)
};

struct KornReport {
    int N = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int max_mode = 0;
    double min_margin = 0.0;
    bool all_nonnegative = false;  // margins >= -1e-10
    double empirical_c14 = 0.0;    // min energy / bound14_diag
    double empirical_c16 = 0.0;    // min energy / bound16_diag
    double theorem3_ratio = 0.0;   // empirical only; no pass/fail attached
    std::optional<int> first_violation;
    std::vector<KornTrialResult> trial_results;
};

KornReport korn_check(const PlateConfig& config, int N, int trials, std::uint64_t seed,
                      int max_mode = 3);

// Dense per-mode solve of the reduced system L U = RHS for loads supported on
// Navier-type modes (u1 ~ cos sin, u2 ~ sin cos, u3 ~ sin sin per (m1, m2)).
MomentField solve_reduced(const PlateConfig& config, const SurfaceLoads& loads, int N);

}  // namespace tws::vekua
